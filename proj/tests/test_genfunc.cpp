#include <doctest.h>

#include "oracles.hpp"
#include "rkc/colored_partition.hpp"
#include "rkc/cyclotomic.hpp"
#include "rkc/errors.hpp"
#include "rkc/genfunc.hpp"
#include "rkc/quasipolynomial.hpp"

using rkc::BigInt;
using rkc::Rational;

TEST_CASE("the three cases of the generating function")
{
    CHECK(rkc::gf_reduced(2, 2).to_string() == "1/((1-x)(1-x^2)^2(1-x^3))");
    CHECK(rkc::gf_reduced(3, 2).to_string() == "1/(1-x)");
    CHECK(rkc::gf_reduced(5, 2).is_one());
    CHECK(rkc::gf_reduced(0, 0).is_one());
    CHECK_THROWS_AS(rkc::gf_reduced(1, 2), rkc::PreconditionError);
}

TEST_CASE("diagonal series counts plane partitions in a 2 x a rectangle")
{
    for (int a = 1; a <= 4; ++a) {
        const auto c = rkc::series_coefficients(rkc::gf_reduced(a, a), 8);
        for (int k = 0; k <= 8; ++k)
            CHECK(c[static_cast<std::size_t>(k)] == oracle::rect_count(k, 2, a));
        for (int l = 1; l <= 3; ++l) {
            const auto d = rkc::series_coefficients(rkc::lemma_pp_product(l, a), 7);
            for (int k = 0; k <= 7; ++k)
                CHECK(d[static_cast<std::size_t>(k)] == oracle::rect_count(k, l, a));
        }
    }
}

TEST_CASE("MacMahon box formula against direct enumeration, r, s, t <= 4")
{
    CHECK(rkc::macmahon_box_gf(2, 2, 1).to_string() == "x^4 + x^3 + 2x^2 + x + 1");
    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s)
            for (int t = 1; t <= 4; ++t) {
                const auto poly = rkc::macmahon_box_gf(r, s, t);
                const auto dist = oracle::box_distribution(r, s, t);
                REQUIRE(poly.degree() == static_cast<int>(dist.size()) - 1);
                for (std::size_t i = 0; i < dist.size(); ++i)
                    CHECK(poly.coeff(static_cast<int>(i)) == dist[i]);
            }
}

TEST_CASE("P_a structure")
{
    CHECK(rkc::lcm_up_to(4) == 12);
    CHECK(rkc::compute_Pa(1) == rkc::IntPolynomial{1, 1});
    const auto p2 = rkc::compute_Pa(2);
    CHECK(p2.degree() == 16);
    CHECK(rkc::cyclotomic_factorization(p2).to_string() == "Φ2^2 · Φ3^3 · Φ6^4");
    for (int a = 1; a <= 4; ++a) {
        const auto rc = rkc::reciprocity_check(a);
        CHECK(rc.holds());
        CHECK(rc.degree == rkc::expected_Pa_degree(a));
    }
}

TEST_CASE("P_a against bounded colored partitions")
{
    for (int a = 1; a <= 3; ++a) {
        const auto rep = rkc::pa_colored_count_check(a);
        CHECK(rep.holds());
        const auto ell = static_cast<int>(rkc::lcm_up_to(a + 1));
        // Independent count by listing colored partitions with the cap.
        const rkc::MultiplicityBound cap{ell};
        for (int k = 0; k <= std::min(12, static_cast<int>(rep.pa_coeffs.size()) - 1); ++k)
            CHECK(rep.pa_coeffs[static_cast<std::size_t>(k)] == rkc::colored_partitions_of(k, a, cap).size());
    }
}

TEST_CASE("interpolation and quasipolynomials")
{
    const std::vector<Rational> xs{0, 1, 2}, ys{1, 2, 5};
    const auto c = rkc::interpolate(xs, ys); // 1 + x^2
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 1);
    CHECK(c[1] == 0);
    CHECK(c[2] == 1);

    const auto q1 = rkc::extract_quasipolynomial(1, rkc::default_validate_extra(1));
    CHECK(q1.minimal_period == 2);
    CHECK(q1.qp.degree() == 1);
    for (long k = 0; k < 20; ++k)
        CHECK(q1.qp.evaluate(k) == k / 2 + 1);

    const auto q2 = rkc::extract_quasipolynomial(2, rkc::default_validate_extra(2));
    CHECK(q2.qp.branch_to_string(1) == "1/72 k^3 + 1/6 k^2 + 13/24 k + 5/18");
    CHECK(q2.minimal_period == 6);
    const auto series = rkc::series_coefficients(rkc::gf_reduced(2, 2), 60);
    for (long k = 0; k <= 60; ++k)
        CHECK(q2.qp.evaluate(k) == Rational(series[static_cast<std::size_t>(k)]));

    // A genuinely period-1 function collapses.
    const rkc::Quasipolynomial flat(4, {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
    CHECK(flat.minimal_period() == 1);
}
