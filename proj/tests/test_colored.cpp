#include <doctest.h>

#include "rkc/colored_partition.hpp"
#include "rkc/errors.hpp"

using rkc::Symbol;

TEST_CASE("alphabet order and symbols")
{
    const auto al = rkc::alphabet(3);
    REQUIRE(al.size() == 6);
    CHECK(al[0] == Symbol{1, true});
    CHECK(al[1] == Symbol{2, false});
    CHECK(al[2] == Symbol{2, true});
    CHECK(al[5] == Symbol{4, true});
    CHECK(rkc::parse_symbol("2b") == Symbol{2, true});
    CHECK(rkc::parse_symbol("3") == Symbol{3, false});
    CHECK(rkc::parse_symbol("2'") == Symbol{2, true});
    CHECK_THROWS_AS(rkc::symbol_index(3, Symbol{1, false}), rkc::PreconditionError);
    CHECK_THROWS_AS(rkc::symbol_index(3, Symbol{4, false}), rkc::PreconditionError);
}

TEST_CASE("colored partition accessors")
{
    const auto beta = rkc::ColoredPartition::from_parts(3, {{1, true}, {2, true}});
    CHECK(beta.weight() == 3);
    CHECK(beta.num_parts() == 2);
    CHECK(beta.multiplicity({2, true}) == 1);
    CHECK(beta.parts().front() == Symbol{2, true});
}

TEST_CASE("enumeration agrees with the knapsack counts")
{
    for (int a = 1; a <= 4; ++a) {
        const auto counts = rkc::colored_partition_counts(10, a);
        for (int k = 0; k <= 10; ++k)
            CHECK(rkc::colored_partitions_of(k, a).size() == counts[static_cast<std::size_t>(k)].get_ui());
        const rkc::MultiplicityBound bound{6};
        const auto bounded = rkc::colored_partition_counts(10, a, bound);
        for (int k = 0; k <= 10; ++k)
            CHECK(rkc::colored_partitions_of(k, a, bound).size() == bounded[static_cast<std::size_t>(k)].get_ui());
    }
}

TEST_CASE("a = 1 gives partitions into 1-bar and 2-bar")
{
    // floor(k/2) + 1
    const auto counts = rkc::colored_partition_counts(9, 1);
    for (int k = 0; k <= 9; ++k)
        CHECK(counts[static_cast<std::size_t>(k)] == k / 2 + 1);
}
