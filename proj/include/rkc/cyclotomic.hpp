#ifndef RKC_CYCLOTOMIC_HPP
#define RKC_CYCLOTOMIC_HPP

#include <map>
#include <string>

#include "rkc/polynomial.hpp"

namespace rkc {

// Euler's totient.
int euler_phi(int n);

// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division. Results
// are memoized per thread.
const IntPolynomial& cyclotomic(int n);

// P = unit * prod_d Phi_d^{e_d}.
struct CyclotomicFactorization {
    int unit = 1;
    std::map<int, int> exponents;

    [[nodiscard]] int exponent(int d) const;
    [[nodiscard]] int degree() const; // sum e_d * phi(d)
    [[nodiscard]] IntPolynomial expand() const;
    // "Φ2^2 · Φ3^3 · Φ6^4"; exponent 1 is written without "^1".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const CyclotomicFactorization&, const CyclotomicFactorization&) = default;
};

// Repeated trial division by Phi_d for every d with phi(d) <= the remaining
// degree. Throws ArithmeticError("not a cyclotomic product") when a
// non-constant or non-unit remainder survives, or when P is zero.
CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& p);

} // namespace rkc

#endif
