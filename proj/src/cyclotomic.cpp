#include "rkc/cyclotomic.hpp"

#include <sstream>
#include <unordered_map>

#include "rkc/errors.hpp"

namespace rkc {

int euler_phi(int n)
{
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

const IntPolynomial& cyclotomic(int n)
{
    if (n < 1)
        throw PreconditionError("cyclotomic polynomial index must be >= 1");
    thread_local std::unordered_map<int, IntPolynomial> memo;
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    // x^n - 1
    IntPolynomial poly = IntPolynomial::monomial(1, n) - IntPolynomial{1};
    for (int d = 1; d < n; ++d)
        if (n % d == 0)
            poly = divide_exact(poly, cyclotomic(d));
    return memo.emplace(n, std::move(poly)).first->second;
}

int CyclotomicFactorization::exponent(int d) const
{
    auto it = exponents.find(d);
    return it == exponents.end() ? 0 : it->second;
}

int CyclotomicFactorization::degree() const
{
    int deg = 0;
    for (const auto& [d, e] : exponents)
        deg += e * euler_phi(d);
    return deg;
}

IntPolynomial CyclotomicFactorization::expand() const
{
    IntPolynomial p{unit};
    for (const auto& [d, e] : exponents)
        for (int i = 0; i < e; ++i)
            p *= cyclotomic(d);
    return p;
}

std::string CyclotomicFactorization::to_string() const
{
    std::ostringstream os;
    if (unit < 0)
        os << "-";
    if (exponents.empty())
        os << "1";
    bool first = true;
    for (const auto& [d, e] : exponents) {
        os << (first ? "" : " · ") << "Φ" << d;
        if (e != 1)
            os << '^' << e;
        first = false;
    }
    return os.str();
}

CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& p)
{
    if (p.is_zero())
        throw ArithmeticError("not a cyclotomic product: zero polynomial");
    CyclotomicFactorization out;
    IntPolynomial rest = p;
    // Every Phi_d is monic with constant term +-1, so these are necessary.
    auto unit_like = [](const BigInt& c) { return c == 1 || c == -1; };
    for (int d = 1; rest.degree() > 0; ++d) {
        if (!unit_like(rest.coeffs().front()) || !unit_like(rest.coeffs().back()))
            throw ArithmeticError("not a cyclotomic product: remainder " + rest.to_string());
        // phi(d) >= sqrt(d/2), so no Phi_d with d > 2 deg^2 can still divide.
        if (d > 2 * rest.degree() * rest.degree() + 2)
            throw ArithmeticError("not a cyclotomic product: remainder " + rest.to_string());
        if (euler_phi(d) > rest.degree())
            continue;
        const IntPolynomial& phi = cyclotomic(d);
        for (;;) {
            auto res = divide(rest, phi);
            if (!res.exact)
                break;
            rest = std::move(res.quotient);
            ++out.exponents[d];
        }
    }
    if (rest.degree() != 0 || !unit_like(rest.coeffs().front()))
        throw ArithmeticError("not a cyclotomic product: remainder " + rest.to_string());
    out.unit = rest.coeffs().front() > 0 ? 1 : -1;
    return out;
}

} // namespace rkc
