#include "rkc/genfunc.hpp"

#include <numeric>

#include "rkc/colored_partition.hpp"
#include "rkc/errors.hpp"

namespace rkc {

ProductForm gf_reduced(int a, int b)
{
    if (b < 0 || a < b)
        throw PreconditionError("gf_reduced needs a >= b >= 0");
    ProductForm f;
    if (a == b) {
        if (a == 0)
            return f;
        f.factor(1, -1);
        for (int j = 2; j <= a; ++j)
            f.factor(j, -2);
        f.factor(a + 1, -1);
    } else if (a == b + 1) {
        f.factor(1, -1);
    }
    return f;
}

IntPolynomial macmahon_box_gf(int r, int s, int t)
{
    if (r < 0 || s < 0 || t < 0)
        throw PreconditionError("box sides must be nonnegative");
    IntPolynomial p{1};
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j)
            if (t > 0)
                p.mul_one_minus_x_pow(i + j + t - 1);
    if (t == 0)
        return p;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= s; ++j)
            p.div_one_minus_x_pow(i + j - 1);
    return p;
}

ProductForm lemma_pp_product(int l, int a)
{
    if (l < 1 || a < 1)
        throw PreconditionError("lemma_pp_product needs l, a >= 1");
    const int r = std::min(a, l), s = std::max(a, l);
    ProductForm f;
    for (int j = r; j <= s; ++j)
        f.factor(j, -r);
    for (int i = 1; i <= r - 1; ++i) {
        f.factor(i, -i);
        f.factor(s + i, -(r - i));
    }
    return f;
}

long lcm_up_to(int n)
{
    long l = 1;
    for (long i = 2; i <= n; ++i)
        l = std::lcm(l, i);
    return l;
}

IntPolynomial reduced_denominator(int a)
{
    IntPolynomial p{1};
    for (const auto& [d, m] : gf_reduced(a, a).denominator())
        for (int i = 0; i < m; ++i)
            p.mul_one_minus_x_pow(d);
    return p;
}

long expected_Pa_degree(int a)
{
    const long ell = lcm_up_to(a + 1);
    return 2 * ell * a - static_cast<long>(a + 2) * a;
}

IntPolynomial compute_Pa(int a)
{
    if (a < 1)
        throw PreconditionError("compute_Pa needs a >= 1");
    const long ell = lcm_up_to(a + 1);
    // (1 - x^ell)^{2a} by the binomial theorem.
    std::vector<BigInt> num(static_cast<std::size_t>(2 * a * ell) + 1, 0);
    BigInt binom = 1;
    for (int i = 0; i <= 2 * a; ++i) {
        num[static_cast<std::size_t>(i * ell)] = (i % 2 ? -binom : binom);
        binom = binom * (2 * a - i) / (i + 1);
    }
    IntPolynomial p(std::move(num));
    for (const auto& [d, m] : gf_reduced(a, a).denominator())
        for (int i = 0; i < m; ++i)
            p.div_one_minus_x_pow(d);
    return p;
}

ReciprocityReport reciprocity_check(int a)
{
    ReciprocityReport r;
    r.a = a;
    r.ell = lcm_up_to(a + 1);
    const IntPolynomial p = compute_Pa(a);
    r.palindromic = p.is_palindromic();
    r.degree = p.degree();
    r.expected_degree = expected_Pa_degree(a);
    return r;
}

PaCountReport pa_colored_count_check(int a)
{
    PaCountReport r;
    r.a = a;
    r.ell = lcm_up_to(a + 1);
    const IntPolynomial p = compute_Pa(a);
    r.pa_coeffs = p.coeffs();
    r.colored_counts = colored_partition_counts(p.degree(), a, MultiplicityBound{static_cast<int>(r.ell)});
    r.counts_match = true;
    for (std::size_t k = 0; k < r.pa_coeffs.size(); ++k)
        if (r.pa_coeffs[k] != r.colored_counts[k]) {
            r.counts_match = false;
            r.first_mismatch = static_cast<int>(k);
            break;
        }
    r.nonnegative = true;
    for (const auto& c : r.pa_coeffs)
        if (c < 0)
            r.nonnegative = false;
    r.palindromic = p.is_palindromic();
    r.value_at_one = p.evaluate(1);
    r.product_of_caps = 1;
    for (const auto& s : alphabet(a))
        r.product_of_caps *= r.ell / s.weight;
    for (std::size_t i = 1; i + 1 < r.pa_coeffs.size(); ++i)
        if (r.pa_coeffs[i - 1] + r.pa_coeffs[i + 1] > 2 * r.pa_coeffs[i]) {
            r.non_concavity_witness = static_cast<int>(i);
            break;
        }
    return r;
}

} // namespace rkc
