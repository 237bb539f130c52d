#include <doctest.h>

#include "oracles.hpp"
#include "rkc/characters.hpp"
#include "rkc/errors.hpp"

using rkc::BigInt;
using rkc::Partition;

namespace {

Partition as_partition(const std::vector<int>& v) { return Partition(v); }

} // namespace

TEST_CASE("characters agree with the Frobenius formula for n <= 6")
{
    rkc::CharacterTable table;
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : oracle::partitions(n))
            for (const auto& r : oracle::partitions(n))
                CHECK(table.character(as_partition(l), as_partition(r)) == oracle::frobenius_character(l, r));
}

TEST_CASE("sign and standard characters from permutations")
{
    rkc::CharacterTable table;
    for (int n = 2; n <= 6; ++n) {
        const Partition sign(std::vector<int>(static_cast<std::size_t>(n), 1));
        const Partition standard{n - 1, 1};
        oracle::for_each_permutation(n, [&](const std::vector<int>& p) {
            const auto type = oracle::cycle_type(p);
            int fixed = 0, even_cycles = 0;
            for (int c : type) {
                fixed += c == 1;
                even_cycles += c % 2 == 0;
            }
            const Partition rho = as_partition(type);
            CHECK(table.character(sign, rho) == (even_cycles % 2 ? -1 : 1));
            CHECK(table.character(standard, rho) == fixed - 1);
        });
    }
}

TEST_CASE("class sizes sum to n!")
{
    for (int n = 1; n <= 9; ++n) {
        BigInt total = 0;
        for (const auto& r : oracle::partitions(n))
            total += rkc::factorial(n) / rkc::centralizer_order(as_partition(r));
        CHECK(total == rkc::factorial(n));
    }
}

TEST_CASE("row orthogonality for n <= 8")
{
    rkc::CharacterTable table;
    for (int n = 1; n <= 8; ++n) {
        const auto parts = oracle::partitions(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i; j < parts.size(); ++j) {
                BigInt s = 0;
                for (const auto& r : parts) {
                    const Partition rho = as_partition(r);
                    s += table.character(as_partition(parts[i]), rho) * table.character(as_partition(parts[j]), rho) *
                         (rkc::factorial(n) / rkc::centralizer_order(rho));
                }
                CHECK(s == (i == j ? rkc::factorial(n) : BigInt(0)));
            }
    }
}

TEST_CASE("Kronecker symmetry and the trivial factor, n <= 6")
{
    rkc::CharacterTable table;
    for (int n = 1; n <= 6; ++n) {
        const auto parts = oracle::partitions(n);
        const Partition row{n};
        for (const auto& x : parts)
            for (const auto& y : parts) {
                CHECK(table.kronecker(row, as_partition(x), as_partition(y)) == (x == y ? 1 : 0));
                for (const auto& z : parts) {
                    const auto g = table.kronecker(as_partition(x), as_partition(y), as_partition(z));
                    CHECK(g >= 0);
                    CHECK(g == table.kronecker(as_partition(y), as_partition(x), as_partition(z)));
                    CHECK(g == table.kronecker(as_partition(z), as_partition(y), as_partition(x)));
                }
            }
    }
}

TEST_CASE("guard and preconditions")
{
    rkc::CharacterTable small(5);
    CHECK_THROWS_AS(small.character(Partition{6}, Partition{6}), rkc::GuardError);
    CHECK_THROWS_AS(small.character(Partition{3}, Partition{2}), rkc::PreconditionError);
    CHECK(rkc::stab_bound(Partition{3, 2}, Partition{4, 2}) == 5 + 6 + 3 + 4);
}

TEST_CASE("stabilizing sequence")
{
    const auto seq = rkc::stable_sequence(Partition{3, 2}, Partition{4, 2}, Partition{2, 2, 1}, 10, 13, 13);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == 18);
    CHECK(seq[1] == 35);
    CHECK(seq[2] == 40);
    CHECK(seq[3] == 40);
    CHECK(rkc::reduced_kronecker_oracle(Partition{1}, Partition{1}, Partition{1}, 20) == 1);
}
