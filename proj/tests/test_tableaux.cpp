#include <doctest.h>

#include "oracles.hpp"
#include "rkc/characters.hpp"
#include "rkc/errors.hpp"
#include "rkc/kronecker_tableaux.hpp"

using rkc::Partition;

namespace {

std::vector<int> vec(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

} // namespace

TEST_CASE("alpha-lattice words")
{
    const std::vector<int> w1{1, 1, 2, 1, 2};
    CHECK(rkc::is_alpha_lattice(w1, Partition{}));
    const std::vector<int> w2{2, 1};
    CHECK_FALSE(rkc::is_alpha_lattice(w2, Partition{}));
    CHECK(rkc::is_alpha_lattice(w2, Partition{1}));
    const std::vector<int> w3{3};
    CHECK_FALSE(rkc::is_alpha_lattice(w3, Partition{1}));
    CHECK(rkc::is_alpha_lattice(w3, Partition{1, 1}));
}

TEST_CASE("every enumerated tableau satisfies the definition")
{
    for (int n = 2; n <= 7; ++n)
        for (const auto& lambda : rkc::partitions_of(n))
            for (const auto& nu : rkc::partitions_of(n))
                for (int p = 0; 2 * p <= n && p <= 3; ++p)
                    for (const auto& alpha : rkc::partitions_of(p, rkc::intersect(lambda, nu)))
                        for (const auto& kt : rkc::enumerate_kronecker_tableaux(lambda, alpha, nu))
                            CHECK(rkc::is_kronecker_tableau(kt.tableau, nu));
}

TEST_CASE("tableau counts match unpruned brute force")
{
    for (int n = 2; n <= 6; ++n)
        for (const auto& lambda : rkc::partitions_of(n))
            for (const auto& nu : rkc::partitions_of(n))
                for (int p = 0; p <= 3; ++p)
                    for (const auto& alpha : rkc::partitions_of(p, rkc::intersect(lambda, nu)))
                        CHECK(rkc::count_kronecker_tableaux(lambda, alpha, nu) ==
                              static_cast<std::uint64_t>(oracle::kronecker_tableaux_count(vec(lambda), vec(alpha), vec(nu))));
}

TEST_CASE("two-row coefficients match the character oracle, n <= 7")
{
    rkc::CharacterTable table;
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : rkc::partitions_of(n))
            for (const auto& nu : rkc::partitions_of(n))
                for (int p = 0; 2 * p <= n; ++p) {
                    if (lambda.first() < 2 * p - 1)
                        continue;
                    CHECK(rkc::two_row_coefficient(lambda, nu, p) == table.kronecker(lambda, nu, Partition{n - p, p}));
                }
}

TEST_CASE("lemma range is enforced")
{
    CHECK_THROWS_AS(rkc::two_row_coefficient(Partition{2, 2}, Partition{2, 2}, 3), rkc::PreconditionError);
    CHECK_THROWS_AS(rkc::two_row_coefficient(Partition{1, 1, 1, 1}, Partition{2, 2}, 2), rkc::PreconditionError);
    CHECK_THROWS_AS(rkc::count_kronecker_tableaux(Partition{2}, Partition{1, 1}, Partition{2}), rkc::PreconditionError);
}

TEST_CASE("reduced coefficients via tableaux")
{
    // Diagonal values count plane partitions in a 2 x a rectangle.
    for (int a = 0; a <= 4; ++a)
        for (int k = 0; k <= 5; ++k)
            CHECK(rkc::reduced_coeff_via_tableaux(a, a, k) == oracle::rect_count(k, 2, a));
    CHECK(rkc::reduced_coeff_via_tableaux(3, 2, 4) == 1);
    CHECK(rkc::reduced_coeff_via_tableaux(5, 2, 2) == 0);
}
