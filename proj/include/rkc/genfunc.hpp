#ifndef RKC_GENFUNC_HPP
#define RKC_GENFUNC_HPP

#include <optional>
#include <vector>

#include "rkc/integer.hpp"
#include "rkc/polynomial.hpp"

namespace rkc {

// Generating function sum_k gbar^{(k)}_{(k^a),(k^b)} x^k as a product form:
//   a == b >= 1 : 1 / ((1-x)(1-x^2)^2 ... (1-x^a)^2 (1-x^{a+1}))
//   a == b + 1  : 1 / (1-x)
//   a >  b + 1  : 1
// a == b == 0 is the constant 1: gbar^{(k)}_{∅,∅} is 1 at k = 0 and 0
// otherwise, which the a == b formula (giving 1/(1-x)^2) does not match.
ProductForm gf_reduced(int a, int b);

// MacMahon's box formula prod_{i<=r, j<=s} (1 - x^{i+j+t-1}) / (1 - x^{i+j-1}),
// expanded to a polynomial of degree r*s*t. All numerator factors are
// multiplied first, then each denominator factor is divided out exactly.
IntPolynomial macmahon_box_gf(int r, int s, int t);

// Plane partitions in an l x a rectangle with unbounded entries, with
// r = min(a, l), s = max(a, l):
//   prod_{j=r}^{s} (1-x^j)^{-r} * prod_{i=1}^{r-1} (1-x^i)^{-i} (1-x^{s+i})^{-(r-i)}.
ProductForm lemma_pp_product(int l, int a);

// lcm(1, 2, ..., n).
long lcm_up_to(int n);

// The denominator of gf_reduced(a, a) as an expanded polynomial.
IntPolynomial reduced_denominator(int a);

// P_a = (1 - x^ell)^{2a} * F_{a,a}, ell = lcm(1..a+1), by exact division.
IntPolynomial compute_Pa(int a);

// deg P_a = 2 ell a - (a + 2) a.
long expected_Pa_degree(int a);

struct ReciprocityReport {
    int a = 0;
    long ell = 0;
    bool palindromic = false;
    long degree = 0;
    long expected_degree = 0;
    // x^{a(a+2)} F(x) == F(1/x); equivalent to both checks above.
    [[nodiscard]] bool degree_ok() const noexcept { return degree == expected_degree; }
    [[nodiscard]] bool holds() const noexcept { return palindromic && degree_ok(); }
};
ReciprocityReport reciprocity_check(int a);

struct PaCountReport {
    int a = 0;
    long ell = 0;
    std::vector<BigInt> pa_coeffs;
    std::vector<BigInt> colored_counts;
    bool counts_match = false;
    std::optional<int> first_mismatch;
    bool nonnegative = false;
    bool palindromic = false;
    BigInt value_at_one;
    BigInt product_of_caps;
    // Smallest i with c_{i-1} + c_{i+1} > 2 c_i, if any.
    std::optional<int> non_concavity_witness;
    [[nodiscard]] bool holds() const noexcept
    {
        return counts_match && nonnegative && palindromic && value_at_one == product_of_caps;
    }
};
// Compares P_a coefficientwise with colored partitions whose letters of
// weight j appear fewer than ell/j times.
PaCountReport pa_colored_count_check(int a);

} // namespace rkc

#endif
