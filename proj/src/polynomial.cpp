#include "rkc/polynomial.hpp"

#include <sstream>

#include "rkc/errors.hpp"

namespace rkc {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree)
{
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_x_pow(int d)
{
    if (d < 1)
        throw PreconditionError("1 - x^d needs d >= 1");
    std::vector<BigInt> v(static_cast<std::size_t>(d) + 1, 0);
    v.front() = 1;
    v.back() = -1;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const
{
    if (i < 0 || i > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::reversed() const
{
    return IntPolynomial(std::vector<BigInt>(coeffs_.rbegin(), coeffs_.rend()));
}

bool IntPolynomial::is_palindromic() const
{
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (coeffs_[i] != coeffs_[n - 1 - i])
            return false;
    return true;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

void IntPolynomial::mul_one_minus_x_pow(int d)
{
    if (d < 1)
        throw PreconditionError("1 - x^d needs d >= 1");
    if (is_zero())
        return;
    const auto ud = static_cast<std::size_t>(d);
    coeffs_.resize(coeffs_.size() + ud, 0);
    for (std::size_t i = coeffs_.size(); i-- > ud;)
        coeffs_[i] -= coeffs_[i - ud];
    trim();
}

void IntPolynomial::div_one_minus_x_pow(int d)
{
    if (d < 1)
        throw PreconditionError("1 - x^d needs d >= 1");
    if (is_zero())
        return;
    // q = p / (1 - x^d) satisfies q[i] = p[i] + q[i-d]; exact iff the top d
    // coefficients of the running series vanish.
    const auto ud = static_cast<std::size_t>(d);
    std::vector<BigInt> q = coeffs_;
    for (std::size_t i = ud; i < q.size(); ++i)
        q[i] += q[i - ud];
    if (q.size() < ud)
        throw ArithmeticError("division by 1 - x^" + std::to_string(d) + " is not exact");
    for (std::size_t i = q.size() - ud; i < q.size(); ++i)
        if (q[i] != 0)
            throw ArithmeticError("division by 1 - x^" + std::to_string(d) + " is not exact");
    q.resize(q.size() - ud);
    coeffs_ = std::move(q);
    trim();
}

std::string IntPolynomial::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigInt c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        if (neg)
            c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0 || c != 1)
            os << c.get_str();
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

DivisionResult divide(const IntPolynomial& num, const IntPolynomial& den)
{
    if (den.is_zero())
        throw PreconditionError("polynomial division by zero");
    DivisionResult res;
    if (num.degree() < den.degree()) {
        res.remainder = num;
        res.exact = num.is_zero();
        return res;
    }
    std::vector<BigInt> rem = num.coeffs();
    const auto& d = den.coeffs();
    const BigInt& lead = d.back();
    const std::size_t dd = d.size() - 1;
    std::vector<BigInt> q(rem.size() - dd, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        const BigInt& top = rem[i + dd];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            res.remainder = num;
            return res;
        }
        const BigInt c = top / lead;
        q[i] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i + j] -= c * d[j];
    }
    res.quotient = IntPolynomial(std::move(q));
    res.remainder = IntPolynomial(std::move(rem));
    res.exact = res.remainder.is_zero();
    return res;
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den)
{
    auto res = divide(num, den);
    if (!res.exact)
        throw ArithmeticError("inexact polynomial division: (" + num.to_string() + ") / (" + den.to_string() + ")");
    return std::move(res.quotient);
}

ProductForm& ProductForm::factor(int d, int e)
{
    if (d < 1)
        throw PreconditionError("product factor 1 - x^d needs d >= 1");
    if (e == 0)
        return *this;
    if ((exp_[d] += e) == 0)
        exp_.erase(d);
    return *this;
}

ProductForm& ProductForm::shift(int s)
{
    shift_ += s;
    return *this;
}

ProductForm& ProductForm::operator*=(const ProductForm& o)
{
    shift_ += o.shift_;
    for (const auto& [d, e] : o.exp_)
        factor(d, e);
    return *this;
}

std::map<int, int> ProductForm::denominator() const
{
    std::map<int, int> out;
    for (const auto& [d, e] : exp_)
        if (e < 0)
            out[d] = -e;
    return out;
}

std::map<int, int> ProductForm::numerator() const
{
    std::map<int, int> out;
    for (const auto& [d, e] : exp_)
        if (e > 0)
            out[d] = e;
    return out;
}

namespace {

std::string factor_list(const std::map<int, int>& f)
{
    std::ostringstream os;
    for (const auto& [d, m] : f) {
        os << "(1-x";
        if (d > 1)
            os << '^' << d;
        os << ')';
        if (m > 1)
            os << '^' << m;
    }
    return os.str();
}

} // namespace

std::string ProductForm::to_string() const
{
    std::string num = factor_list(numerator());
    if (shift_ != 0)
        num = (shift_ == 1 ? std::string("x") : "x^" + std::to_string(shift_)) + num;
    if (num.empty())
        num = "1";
    const auto den = denominator();
    if (den.empty())
        return num;
    const std::string dens = factor_list(den);
    const bool single = den.size() == 1 && den.begin()->second == 1;
    return num + "/" + (single ? dens : "(" + dens + ")");
}

std::vector<BigInt> series_coefficients(const ProductForm& f, int N)
{
    if (N < 0)
        throw PreconditionError("series truncation order must be >= 0");
    if (f.monomial_shift() < 0)
        throw PreconditionError("product form has negative valuation; not a power series");
    const auto n = static_cast<std::size_t>(N) + 1;
    std::vector<BigInt> c(n, 0);
    if (static_cast<std::size_t>(f.monomial_shift()) < n)
        c[static_cast<std::size_t>(f.monomial_shift())] = 1;
    for (const auto& [d, e] : f.exponents()) {
        const auto ud = static_cast<std::size_t>(d);
        for (int rep = 0; rep < (e > 0 ? e : -e); ++rep) {
            if (e > 0) {
                for (std::size_t i = n; i-- > ud;)
                    c[i] -= c[i - ud];
            } else {
                for (std::size_t i = ud; i < n; ++i)
                    c[i] += c[i - ud];
            }
        }
    }
    return c;
}

} // namespace rkc
