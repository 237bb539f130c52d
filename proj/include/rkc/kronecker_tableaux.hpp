#ifndef RKC_KRONECKER_TABLEAUX_HPP
#define RKC_KRONECKER_TABLEAUX_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rkc/integer.hpp"
#include "rkc/partition.hpp"

namespace rkc {

// A filling of the skew shape outer/inner. rows[r] lists the entries of row r
// (0-based) from left to right, occupying columns inner[r] .. outer[r]-1.
struct SkewTableau {
    Partition outer;
    Partition inner;
    std::vector<std::vector<int>> rows;

    // Entry at 0-based (row, col); 0 when the cell is in `inner` or outside.
    [[nodiscard]] int at(std::size_t row, int col) const noexcept;
    // Multiplicity of each value: content()[v-1] is the number of v's.
    [[nodiscard]] std::vector<int> content() const;
    // Rows read right to left, top row first.
    [[nodiscard]] std::vector<int> reverse_reading_word() const;
    [[nodiscard]] bool has_shape() const noexcept;

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
    friend auto operator<=>(const SkewTableau& x, const SkewTableau& y) noexcept
    {
        if (auto c = x.outer <=> y.outer; c != 0)
            return c;
        if (auto c = x.inner <=> y.inner; c != 0)
            return c;
        return x.rows <=> y.rows;
    }
};

// Rows weakly increase, columns strictly increase, entries positive.
bool is_semistandard(const SkewTableau& t);

// A word w is an alpha-lattice permutation when every prefix satisfies
//   #i(prefix) + alpha_i >= #(i+1)(prefix) + alpha_{i+1}   for all i >= 1.
// With alpha empty this is the usual Yamanouchi (lattice word) condition.
bool is_alpha_lattice(std::span<const int> word, const Partition& alpha);

// The extra row condition imposed when alpha_1 > alpha_2.
struct ExtraCondition {
    bool required = false;       // alpha_1 > alpha_2
    bool ones_in_row2 = false;   // #1's in row 2 of the skew shape == alpha_1 - alpha_2
    bool twos_in_row1 = false;   // #2's in row 1 of the skew shape == alpha_1 - alpha_2
    [[nodiscard]] bool holds() const noexcept { return !required || ones_in_row2 || twos_in_row1; }
    [[nodiscard]] bool both() const noexcept { return required && ones_in_row2 && twos_in_row1; }
};
ExtraCondition extra_condition(const SkewTableau& t);

// A semistandard filling of lambda/alpha with content nu - alpha whose reverse
// reading word is an alpha-lattice permutation and which meets the extra
// condition. Both "or" branches of the extra condition are accepted (inclusive).
struct KroneckerTableau {
    SkewTableau tableau;
    Partition type; // nu

    friend bool operator==(const KroneckerTableau&, const KroneckerTableau&) = default;
    friend auto operator<=>(const KroneckerTableau&, const KroneckerTableau&) = default;
};

// Independent validator for every defining condition.
bool is_kronecker_tableau(const SkewTableau& t, const Partition& nu);

// Calls `visit` for every Kronecker tableau of shape lambda/alpha and type
// nu/alpha, rows filled top to bottom and left to right with smaller values
// first. Throws PreconditionError unless alpha is inside lambda and nu and
// |lambda| == |nu|.
void for_each_kronecker_tableau(const Partition& lambda, const Partition& alpha, const Partition& nu,
                                const std::function<void(const SkewTableau&)>& visit);

std::vector<KroneckerTableau> enumerate_kronecker_tableaux(const Partition& lambda, const Partition& alpha,
                                                           const Partition& nu);

// k_{alpha nu}^{lambda}: the number of such tableaux, without materializing them.
std::uint64_t count_kronecker_tableaux(const Partition& lambda, const Partition& alpha, const Partition& nu);

// Sum of k_{alpha nu}^lambda over alpha |- p with alpha inside lambda ∩ nu.
// Equals g_{lambda,nu}^{(n-p,p)} when n >= 2p and lambda_1 >= 2p - 1; outside
// that range throws PreconditionError ("lemma out of range").
BigInt two_row_coefficient(const Partition& lambda, const Partition& nu, int p);

// The summands of two_row_coefficient: (alpha, k_{alpha nu}^lambda) for every
// alpha |- p inside lambda ∩ nu, in partitions_of order. Same preconditions.
std::vector<std::pair<Partition, std::uint64_t>> two_row_breakdown(const Partition& lambda, const Partition& nu,
                                                                    int p);

// The n used by reduced_coeff_via_tableaux: large enough for stability, for
// (k^a)[n] and (k^b)[n] and (k)[n] to be partitions, and for lambda_1 >= 2k - 1.
int tableaux_evaluation_size(int a, int b, int k);

// The reduced coefficient for rectangles (k^a), (k^b) and the row (k), via
// Kronecker tableaux at tableaux_evaluation_size(a, b, k).
BigInt reduced_coeff_via_tableaux(int a, int b, int k);

} // namespace rkc

#endif
