#ifndef RKC_QUASIPOLYNOMIAL_HPP
#define RKC_QUASIPOLYNOMIAL_HPP

#include <string>
#include <vector>

#include "rkc/integer.hpp"

namespace rkc {

// One polynomial in k (exact rational coefficients, lowest degree first) per
// residue class of k modulo the period.
class Quasipolynomial {
public:
    Quasipolynomial() = default;
    Quasipolynomial(long period, std::vector<std::vector<Rational>> branches);

    [[nodiscard]] long period() const noexcept { return period_; }
    [[nodiscard]] const std::vector<std::vector<Rational>>& branches() const noexcept { return branches_; }
    [[nodiscard]] const std::vector<Rational>& branch(long residue) const;
    [[nodiscard]] int degree() const noexcept;

    [[nodiscard]] Rational evaluate(long k) const;

    // Smallest divisor p of the period such that branch r == branch (r mod p) for all r.
    [[nodiscard]] long minimal_period() const;

    // "1/72 k^3 + 1/6 k^2 + 13/24 k + 5/18".
    [[nodiscard]] std::string branch_to_string(long residue, const std::string& var = "k") const;

private:
    long period_ = 1;
    std::vector<std::vector<Rational>> branches_;
};

// Unique polynomial of degree < xs.size() through the points, by Lagrange
// interpolation over Q. Coefficients lowest degree first, trailing zeros trimmed.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

struct QuasipolynomialResult {
    int a = 0;
    long ell = 0;
    Quasipolynomial qp;
    long minimal_period = 0;
    int terms_checked = 0; // series length used (2 a ell + validate_extra)
};

// Expands F_{a,a} to 2 a ell + validate_extra terms, interpolates each residue
// class mod ell through its first 2a values, and checks every remaining
// value. A mismatch throws ArithmeticError.
QuasipolynomialResult extract_quasipolynomial(int a, int validate_extra);

// Default validate_extra, making the expansion 4 a ell terms long.
int default_validate_extra(int a);

} // namespace rkc

#endif
