#include "rkc/quasipolynomial.hpp"

#include <sstream>

#include "rkc/errors.hpp"
#include "rkc/genfunc.hpp"
#include "rkc/polynomial.hpp"

namespace rkc {

Quasipolynomial::Quasipolynomial(long period, std::vector<std::vector<Rational>> branches)
    : period_(period), branches_(std::move(branches))
{
    if (period_ < 1 || branches_.size() != static_cast<std::size_t>(period_))
        throw PreconditionError("quasipolynomial needs one branch per residue class");
}

const std::vector<Rational>& Quasipolynomial::branch(long residue) const
{
    long r = residue % period_;
    if (r < 0)
        r += period_;
    return branches_[static_cast<std::size_t>(r)];
}

int Quasipolynomial::degree() const noexcept
{
    int d = -1;
    for (const auto& b : branches_)
        d = std::max(d, static_cast<int>(b.size()) - 1);
    return d;
}

Rational Quasipolynomial::evaluate(long k) const
{
    const auto& b = branch(k);
    Rational acc = 0;
    for (auto it = b.rbegin(); it != b.rend(); ++it)
        acc = acc * k + *it;
    return acc;
}

long Quasipolynomial::minimal_period() const
{
    for (long p = 1; p <= period_; ++p) {
        if (period_ % p)
            continue;
        bool same = true;
        for (long r = p; r < period_ && same; ++r)
            same = branches_[static_cast<std::size_t>(r)] == branches_[static_cast<std::size_t>(r % p)];
        if (same)
            return p;
    }
    return period_;
}

std::string Quasipolynomial::branch_to_string(long residue, const std::string& var) const
{
    const auto& b = branch(residue);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) {
        Rational c = b[static_cast<std::size_t>(i)];
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
            os << to_string(c);
        if (i >= 1)
            os << (i == 0 || c != 1 ? " " : "") << var;
        if (i >= 2)
            os << '^' << i;
    }
    if (first)
        os << '0';
    return os.str();
}

std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    if (xs.size() != ys.size())
        throw PreconditionError("interpolate: point count mismatch");
    const std::size_t n = xs.size();
    std::vector<Rational> out(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        // Basis polynomial prod_{m != j} (x - x_m) / (x_j - x_m).
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t m = 0; m < n; ++m) {
            if (m == j)
                continue;
            std::vector<Rational> next(basis.size() + 1, 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] -= basis[i] * xs[m];
            }
            basis = std::move(next);
            denom *= xs[j] - xs[m];
        }
        if (denom == 0)
            throw PreconditionError("interpolate: repeated abscissa");
        const Rational scale = ys[j] / denom;
        for (std::size_t i = 0; i < basis.size(); ++i)
            out[i] += basis[i] * scale;
    }
    for (auto& c : out)
        c.canonicalize();
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

int default_validate_extra(int a) { return static_cast<int>(2 * a * lcm_up_to(a + 1)); }

QuasipolynomialResult extract_quasipolynomial(int a, int validate_extra)
{
    if (a < 1)
        throw PreconditionError("extract_quasipolynomial needs a >= 1");
    if (validate_extra < 0)
        throw PreconditionError("validate_extra must be >= 0");
    QuasipolynomialResult res;
    res.a = a;
    res.ell = lcm_up_to(a + 1);
    const long terms = 2 * a * res.ell + validate_extra;
    res.terms_checked = static_cast<int>(terms);
    const auto series = series_coefficients(gf_reduced(a, a), static_cast<int>(terms - 1));
    const int points = 2 * a;

    std::vector<std::vector<Rational>> branches;
    for (long r = 0; r < res.ell; ++r) {
        std::vector<Rational> xs, ys;
        for (int j = 0; j < points; ++j) {
            const long k = r + j * res.ell;
            xs.emplace_back(k);
            ys.emplace_back(series[static_cast<std::size_t>(k)]);
        }
        auto poly = interpolate(xs, ys);
        for (long k = r + points * res.ell; k < terms; k += res.ell) {
            Rational v = 0;
            for (auto it = poly.rbegin(); it != poly.rend(); ++it)
                v = v * k + *it;
            if (v != Rational(series[static_cast<std::size_t>(k)]))
                throw ArithmeticError("quasipolynomial branch " + std::to_string(r) + " fails at k=" +
                                      std::to_string(k));
        }
        branches.push_back(std::move(poly));
    }
    res.qp = Quasipolynomial(res.ell, std::move(branches));
    res.minimal_period = res.qp.minimal_period();
    return res;
}

} // namespace rkc
