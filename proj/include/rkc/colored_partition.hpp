#ifndef RKC_COLORED_PARTITION_HPP
#define RKC_COLORED_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rkc/integer.hpp"

namespace rkc {

// One letter of the alphabet A_a = {1̄, 2, 2̄, ..., a, ā, (a+1)‾}. The
// weight is the number the letter stands for.
struct Symbol {
    int weight = 1;
    bool barred = true;

    [[nodiscard]] std::string to_string() const;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Canonical letter order: 1̄, 2, 2̄, 3, 3̄, ..., a, ā, (a+1)‾. There are 2a letters.
std::vector<Symbol> alphabet(int a);

// Index of `s` in alphabet(a); throws PreconditionError if it is not a letter.
std::size_t symbol_index(int a, const Symbol& s);

// Parses "2b" / "2̄" (barred) or "2" (unbarred).
Symbol parse_symbol(const std::string& text);

// A multiset of letters of A_a, stored as one multiplicity per letter.
class ColoredPartition {
public:
    explicit ColoredPartition(int a);
    ColoredPartition(int a, std::vector<int> multiplicities);
    // Builds from a list of parts, in any order.
    static ColoredPartition from_parts(int a, const std::vector<Symbol>& parts);

    [[nodiscard]] int alphabet_parameter() const noexcept { return a_; }
    [[nodiscard]] int weight() const noexcept { return weight_; }
    [[nodiscard]] const std::vector<int>& multiplicities() const noexcept { return mult_; }
    [[nodiscard]] int multiplicity(const Symbol& s) const;
    [[nodiscard]] int num_parts() const noexcept;

    // Parts listed heaviest first, barred before unbarred at equal weight.
    [[nodiscard]] std::vector<Symbol> parts() const;

    // "(2̄,1̄)", "()" when empty.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ColoredPartition&, const ColoredPartition&) = default;
    friend auto operator<=>(const ColoredPartition& x, const ColoredPartition& y) noexcept
    {
        if (auto c = x.a_ <=> y.a_; c != 0)
            return c;
        return x.mult_ <=> y.mult_;
    }

private:
    int a_;
    std::vector<int> mult_;
    int weight_ = 0;
};

// Optional multiplicity cap: a letter of weight j may appear fewer than ell / j times.
struct MultiplicityBound {
    int ell = 0;
    [[nodiscard]] int max_multiplicity(int weight) const noexcept { return (ell - 1) / weight; }
};

// Calls `visit` on every colored partition of k over A_a. Order is fixed:
// heaviest letters are decided first, larger multiplicities first.
void for_each_colored_partition(int k, int a, const std::optional<MultiplicityBound>& bound,
                                const std::function<void(const ColoredPartition&)>& visit);

std::vector<ColoredPartition> colored_partitions_of(int k, int a,
                                                    const std::optional<MultiplicityBound>& bound = std::nullopt);

// Counts colored partitions of every weight 0..max_k by a bounded-knapsack
// recurrence over the letters (no enumeration). Entry k is the count of weight k.
std::vector<BigInt> colored_partition_counts(int max_k, int a,
                                             const std::optional<MultiplicityBound>& bound = std::nullopt);

} // namespace rkc

#endif
