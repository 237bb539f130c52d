#ifndef RKC_CHARACTERS_HPP
#define RKC_CHARACTERS_HPP

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "rkc/integer.hpp"
#include "rkc/partition.hpp"

namespace rkc {

// Default bound on n for the brute-force character oracle.
inline constexpr int default_oracle_max_n = 20;

// Centralizer order z_rho = prod_i i^{m_i} m_i! of the class of cycle type rho.
BigInt centralizer_order(const Partition& rho);

BigInt factorial(int n);

// Irreducible characters of S_n by the Murnaghan-Nakayama rule, with a memo
// table. An instance is not safe for concurrent use; give each worker its own.
class CharacterTable {
public:
    explicit CharacterTable(int max_n = default_oracle_max_n) : max_n_(max_n) {}

    // chi^lambda(rho). Throws PreconditionError on |lambda| != |rho| and
    // GuardError when n exceeds max_n.
    BigInt character(const Partition& lambda, const Partition& rho);

    // g_{lambda,mu}^{nu} = (1/n!) sum_rho (n!/z_rho) chi^lambda chi^mu chi^nu.
    BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

    [[nodiscard]] int max_n() const noexcept { return max_n_; }
    [[nodiscard]] std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    BigInt mn(const std::vector<int>& beta, std::span<const int> rho);
    void guard(int n) const;

    int max_n_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> memo_;
};

BigInt character_value(const Partition& lambda, const Partition& rho);
BigInt kronecker_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                       int max_n = default_oracle_max_n);

// stab(alpha, beta) = |alpha| + |beta| + alpha_1 + beta_1.
int stab_bound(const Partition& alpha, const Partition& beta) noexcept;

// Both orders of every pair plus the minimum of the three pairwise bounds.
struct StabRecord {
    int ab = 0;
    int ag = 0;
    int bg = 0;
    [[nodiscard]] int triple() const noexcept { return std::min({ab, ag, bg}); }
};
StabRecord stab_record(const Partition& alpha, const Partition& beta, const Partition& gamma) noexcept;
int stab3(const Partition& alpha, const Partition& beta, const Partition& gamma) noexcept;

// The n at which the oracle evaluates: max(stab3, smallest n with all three
// prepended shapes valid).
int oracle_evaluation_size(const Partition& alpha, const Partition& beta, const Partition& gamma) noexcept;

// Reduced Kronecker coefficient as g_{alpha[n] beta[n]}^{gamma[n]} at the
// evaluation size above.
BigInt reduced_kronecker_oracle(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                int max_n = default_oracle_max_n);

// g_{alpha[n] beta[n]}^{gamma[n]} for n = n_from..n_to.
std::vector<BigInt> stable_sequence(const Partition& alpha, const Partition& beta, const Partition& gamma, int n_from,
                                    int n_to, int max_n = default_oracle_max_n);

} // namespace rkc

#endif
