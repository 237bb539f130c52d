#ifndef RKC_POLYNOMIAL_HPP
#define RKC_POLYNOMIAL_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "rkc/integer.hpp"

namespace rkc {

// Dense univariate polynomial with exact integer coefficients, lowest degree
// first. The coefficient vector never ends in a zero; the zero polynomial has
// no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial monomial(const BigInt& c, int degree);
    // 1 - x^d.
    static IntPolynomial one_minus_x_pow(int d);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    // Coefficient of x^i (0 outside the stored range).
    [[nodiscard]] BigInt coeff(int i) const;
    [[nodiscard]] BigInt operator[](int i) const { return coeff(i); }

    [[nodiscard]] BigInt evaluate(const BigInt& x) const;
    // x^deg P(1/x) == P.
    [[nodiscard]] bool is_palindromic() const;
    [[nodiscard]] IntPolynomial reversed() const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

    // Multiplication and exact division by 1 - x^d, in place.
    void mul_one_minus_x_pow(int d);
    void div_one_minus_x_pow(int d);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    // "x^2 - x + 1" style.
    [[nodiscard]] std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// Quotient and remainder; throws PreconditionError on a zero divisor.
struct DivisionResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
    bool exact = false;
};
// Long division over Q, reported only when every quotient coefficient is an
// integer; otherwise exact is false and quotient is empty.
DivisionResult divide(const IntPolynomial& num, const IntPolynomial& den);

// num / den, throwing ArithmeticError when the division is not exact.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

// Symbolic product x^shift * prod_d (1 - x^d)^{e_d}; e_d < 0 puts the factor
// in the denominator. Factors are kept merged and free of zero exponents.
class ProductForm {
public:
    ProductForm() = default;

    // Multiplies by (1 - x^d)^e.
    ProductForm& factor(int d, int e);
    ProductForm& shift(int s);
    ProductForm& operator*=(const ProductForm& o);
    friend ProductForm operator*(ProductForm a, const ProductForm& b) { return a *= b; }

    [[nodiscard]] int monomial_shift() const noexcept { return shift_; }
    [[nodiscard]] const std::map<int, int>& exponents() const noexcept { return exp_; }
    [[nodiscard]] bool is_one() const noexcept { return shift_ == 0 && exp_.empty(); }

    // Denominator exponents flipped to positive: the d -> m with (1-x^d)^{-m}.
    [[nodiscard]] std::map<int, int> denominator() const;
    [[nodiscard]] std::map<int, int> numerator() const;

    // "1/((1-x)(1-x^2)^2(1-x^3))" style.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ProductForm&, const ProductForm&) = default;

private:
    int shift_ = 0;
    std::map<int, int> exp_;
};

// First N+1 power-series coefficients of f. Numerator factors are applied by
// c[i] -= c[i-d] (descending i), denominator factors by the prefix-sum
// recurrence c[i] += c[i-d] (ascending i). Throws PreconditionError when f
// has a negative monomial shift (not a power series) or N < 0.
std::vector<BigInt> series_coefficients(const ProductForm& f, int N);

} // namespace rkc

#endif
