#include "rkc/characters.hpp"

#include <algorithm>

#include "rkc/errors.hpp"

namespace rkc {

BigInt factorial(int n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt centralizer_order(const Partition& rho)
{
    BigInt z = 1;
    const auto parts = rho.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        const auto m = static_cast<unsigned long>(j - i);
        BigInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(parts[i]), m);
        z *= pw * factorial(static_cast<int>(m));
        i = j;
    }
    return z;
}

void CharacterTable::guard(int n) const
{
    if (n > max_n_)
        throw GuardError("character oracle refuses n=" + std::to_string(n) + " > guard " + std::to_string(max_n_));
}

BigInt CharacterTable::character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size())
        throw PreconditionError("character_value: |lambda| != |rho|");
    guard(lambda.size());
    return mn(std::vector<int>(lambda.parts().begin(), lambda.parts().end()), rho.parts());
}

// Murnaghan-Nakayama. The shape is encoded by its first-column hook lengths
// (beta-numbers) beta_i = lambda_i + (L - i), i = 1..L. Removing a border strip
// of length h is moving one bead from position x to a free position x - h;
// the strip's height is the number of beads strictly between the two
// positions, which gives the sign. Parts of rho are consumed front to back,
// so for a decreasing rho the largest strips go first.
BigInt CharacterTable::mn(const std::vector<int>& parts, std::span<const int> rho)
{
    if (rho.empty())
        return parts.empty() ? 1 : 0;
    auto key = std::make_pair(parts, std::vector<int>(rho.begin(), rho.end()));
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    const int h = rho.front();
    const auto rest = rho.subspan(1);
    const int len = static_cast<int>(parts.size());
    std::vector<int> beta(parts.size());
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - h;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end())
            continue;
        int between = 0;
        for (int b : beta)
            if (b > to && b < from)
                ++between;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> next(parts.size());
        for (int r = 0; r < len; ++r)
            next[static_cast<std::size_t>(r)] = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
        while (!next.empty() && next.back() == 0)
            next.pop_back();
        BigInt sub = mn(next, rest);
        if (between % 2)
            total -= sub;
        else
            total += sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
}

BigInt CharacterTable::kronecker(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    const int n = lambda.size();
    if (mu.size() != n || nu.size() != n)
        throw PreconditionError("kronecker_coeff: partitions of different sizes");
    guard(n);
    const BigInt nfact = factorial(n);
    BigInt sum = 0;
    for (const auto& rho : partitions_of(n)) {
        BigInt prod = character(lambda, rho);
        if (prod == 0)
            continue;
        prod *= character(mu, rho);
        if (prod == 0)
            continue;
        prod *= character(nu, rho);
        sum += prod * (nfact / centralizer_order(rho));
    }
    if (!mpz_divisible_p(sum.get_mpz_t(), nfact.get_mpz_t()))
        throw ArithmeticError("kronecker_coeff: class sum not divisible by n!");
    BigInt g = sum / nfact;
    if (g < 0)
        throw ArithmeticError("kronecker_coeff: negative multiplicity");
    return g;
}

BigInt character_value(const Partition& lambda, const Partition& rho)
{
    CharacterTable table(std::max(lambda.size(), default_oracle_max_n));
    return table.character(lambda, rho);
}

BigInt kronecker_coeff(const Partition& lambda, const Partition& mu, const Partition& nu, int max_n)
{
    CharacterTable table(max_n);
    return table.kronecker(lambda, mu, nu);
}

int stab_bound(const Partition& alpha, const Partition& beta) noexcept
{
    return alpha.size() + beta.size() + alpha.first() + beta.first();
}

StabRecord stab_record(const Partition& alpha, const Partition& beta, const Partition& gamma) noexcept
{
    return {stab_bound(alpha, beta), stab_bound(alpha, gamma), stab_bound(beta, gamma)};
}

int stab3(const Partition& alpha, const Partition& beta, const Partition& gamma) noexcept
{
    return stab_record(alpha, beta, gamma).triple();
}

int oracle_evaluation_size(const Partition& alpha, const Partition& beta, const Partition& gamma) noexcept
{
    return std::max({stab3(alpha, beta, gamma), min_prepend_size(alpha), min_prepend_size(beta),
                     min_prepend_size(gamma)});
}

BigInt reduced_kronecker_oracle(const Partition& alpha, const Partition& beta, const Partition& gamma, int max_n)
{
    const int n = oracle_evaluation_size(alpha, beta, gamma);
    CharacterTable table(max_n);
    return table.kronecker(prepend_first_part(alpha, n), prepend_first_part(beta, n), prepend_first_part(gamma, n));
}

std::vector<BigInt> stable_sequence(const Partition& alpha, const Partition& beta, const Partition& gamma, int n_from,
                                    int n_to, int max_n)
{
    CharacterTable table(max_n);
    std::vector<BigInt> out;
    for (int n = n_from; n <= n_to; ++n)
        out.push_back(
            table.kronecker(prepend_first_part(alpha, n), prepend_first_part(beta, n), prepend_first_part(gamma, n)));
    return out;
}

} // namespace rkc
