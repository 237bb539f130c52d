#include <doctest.h>

#include "oracles.hpp"
#include "rkc/errors.hpp"
#include "rkc/partition.hpp"

using rkc::Partition;

TEST_CASE("partition basics")
{
    const Partition p{5, 3, 2, 0, 0};
    CHECK(p.length() == 3);
    CHECK(p.size() == 10);
    CHECK(p.first() == 5);
    CHECK(p.part(7) == 0);
    CHECK(p.to_string() == "(5,3,2)");
    CHECK(p.conjugate() == Partition{3, 3, 2, 1, 1});
    CHECK(p.conjugate().conjugate() == p);
    CHECK(Partition{}.to_string() == "()");
    CHECK_THROWS_AS(Partition({2, 3}), rkc::PreconditionError);
    CHECK_THROWS_AS(Partition({2, -1}), rkc::PreconditionError);
}

TEST_CASE("parse_partition")
{
    CHECK(rkc::parse_partition("(4,2,2)") == Partition{4, 2, 2});
    CHECK(rkc::parse_partition("3 1") == Partition{3, 1});
    CHECK(rkc::parse_partition("()") == Partition{});
    CHECK_THROWS_AS(rkc::parse_partition("2,x"), rkc::PreconditionError);
    CHECK_THROWS_AS(rkc::parse_partition("1,2"), rkc::PreconditionError);
}

TEST_CASE("padding a partition")
{
    CHECK(rkc::rectangle(3, 2) == Partition{3, 3});
    CHECK(rkc::rectangle(0, 4) == Partition{});
    CHECK(rkc::prepend_first_part(Partition{3, 2}, 10) == Partition{5, 3, 2});
    CHECK(rkc::min_prepend_size(Partition{3, 2}) == 8);
    CHECK(rkc::prepend_first_part(Partition{3, 2}, 8) == Partition{3, 3, 2});
    CHECK_THROWS_AS(rkc::prepend_first_part(Partition{3, 2}, 7), rkc::PreconditionError);
}

TEST_CASE("partitions_of agrees with the pentagonal recurrence")
{
    const auto p = oracle::partition_numbers(20);
    for (int n = 0; n <= 20; ++n)
        CHECK(rkc::partitions_of(n).size() == p[static_cast<std::size_t>(n)].get_ui());
}

TEST_CASE("partitions_of inside a bound")
{
    const auto list = rkc::partitions_of(4, Partition{3, 2});
    // (3,1) and (2,2) fit in (3,2); (4), (2,1,1), (1^4) do not.
    REQUIRE(list.size() == 2);
    CHECK(list[0] == Partition{3, 1});
    CHECK(list[1] == Partition{2, 2});
    CHECK(rkc::intersect(Partition{5, 1, 1}, Partition{3, 3}) == Partition{3, 1});
    CHECK(Partition{2, 1}.contained_in(Partition{3, 1}));
    CHECK_FALSE(Partition{2, 2}.contained_in(Partition{3, 1}));
}
