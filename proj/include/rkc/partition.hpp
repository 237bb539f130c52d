#ifndef RKC_PARTITION_HPP
#define RKC_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rkc {

// A weakly decreasing sequence of positive integers. Trailing zeros are
// dropped on construction, so (3,2) and (3,2,0) are the same value.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    // Parts indexed from 0; part(i) is 0 beyond the length.
    [[nodiscard]] int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    [[nodiscard]] int operator[](std::size_t i) const noexcept { return part(i); }

    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int first() const noexcept { return part(0); }
    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }

    // Conjugate (transpose) partition.
    [[nodiscard]] Partition conjugate() const;

    // Componentwise containment: this_i <= other_i for all i.
    [[nodiscard]] bool contained_in(const Partition& other) const noexcept;

    // "(5,3,2)", "()" for the empty partition.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Parses "5,3,2" (commas or spaces). The empty string is the empty partition.
Partition parse_partition(const std::string& text);

// The rectangle (k^a): a parts equal to k.
Partition rectangle(int k, int a);

// alpha[n] = (n - |alpha|, alpha_1, alpha_2, ...). Throws PreconditionError
// when n - |alpha| < alpha_1 (the result would not be a partition yet).
Partition prepend_first_part(const Partition& alpha, int n);

// Smallest n for which prepend_first_part(alpha, n) is defined.
int min_prepend_size(const Partition& alpha) noexcept;

// All partitions of p in lexicographically decreasing order; with `inside`,
// only those contained in it.
std::vector<Partition> partitions_of(int p, const std::optional<Partition>& inside = std::nullopt);

// Pointwise minimum.
Partition intersect(const Partition& lambda, const Partition& nu);

} // namespace rkc

#endif
