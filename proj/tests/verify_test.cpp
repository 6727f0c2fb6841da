#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "twocolor/error.hpp"
#include "twocolor/glaisher.hpp"
#include "twocolor/involution.hpp"
#include "twocolor/series.hpp"
#include "twocolor/verify.hpp"

using namespace twocolor;

TEST_CASE("power series arithmetic")
{
    const PowerSeries one_minus_q({1, -1, 0, 0, 0, 0});
    PowerSeries geometric = PowerSeries::one(5);
    geometric.over_one_minus(1);
    CHECK(geometric.coefficients() == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1});
    CHECK(one_minus_q * geometric == PowerSeries::one(5));

    PowerSeries a = PowerSeries::one(4);
    a.times_one_plus(1).times_one_plus(2);
    CHECK(a.coefficients() == std::vector<std::int64_t>{1, 1, 1, 1, 0});
    CHECK((a + a).coefficients() == std::vector<std::int64_t>{2, 2, 2, 2, 0});
    CHECK((a * a).coefficients() == std::vector<std::int64_t>{1, 2, 3, 4, 3});

    // over_one_minus(m) is multiplication by sum_i q^(m i).
    PowerSeries b({3, 1, 4, 1, 5, 9, 2, 6});
    PowerSeries expanded(std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1, 0});
    CHECK(PowerSeries(b).over_one_minus(3) == b * expanded);

    CHECK_THROWS_AS(a + PowerSeries(7), std::invalid_argument);
    CHECK_THROWS_AS(a[5], std::out_of_range);
    CHECK_THROWS_AS(PowerSeries(-1), std::invalid_argument);

    PowerSeries big({std::int64_t{1} << 62, std::int64_t{1} << 62});
    CHECK_THROWS_AS(big.times_one_plus(1) * big, std::overflow_error);
    CHECK_THROWS_AS(PowerSeries({INT64_MAX, 1}) + PowerSeries({1, 1}), std::overflow_error);
}

TEST_CASE("series_E and series_podd")
{
    const PowerSeries e = series_E(200);
    const PowerSeries p = series_podd(200);
    CHECK(e[0] == 1);
    CHECK(e[1] == 2);
    CHECK(e[4] == 6);
    CHECK(p[0] == 1);
    CHECK(p[3] == 4);
    CHECK(p[5] == 8);
    for (int n = 0; n <= 40; ++n) {
        CHECK(e[n] == oracle::frozen_counts[n]);
        CHECK(p[n] == oracle::frozen_counts[n]);
    }
    CHECK(p[200] == oracle::frozen_podd_200);
    CHECK(e == p);
}

TEST_CASE("identity reports")
{
    const auto rows = verify_theorem(5);
    REQUIRE(rows.size() == 5);
    const IdentityReport& four = rows[3];
    CHECK(four.n == 4);
    CHECK(four.E == 6);
    CHECK(four.E0 == 4);
    CHECK(four.E1 == 2);
    CHECK(four.E2 == 4);
    CHECK(four.E3 == 2);
    CHECK(four.p_o_bar == 6);
    CHECK(four.square == SquareWitness{true, 2});
    CHECK(four.passed());

    const IdentityReport& five = rows[4];
    CHECK(five.E0 == 4);
    CHECK(five.E1 == 4);
    CHECK(five.E2 == 4);
    CHECK(five.E3 == 4);
    CHECK_FALSE(five.square.is_square);
    CHECK(five.passed());

    const IdentityReport& two = rows[1];
    CHECK(two.E == 2);
    CHECK(two.E0 == 1);
    CHECK(two.E1 == 1);
    CHECK(two.E2 == 1);
    CHECK(two.E3 == 1);

    const IdentityReport zero = identity_report(0);
    CHECK(zero.exempt);
    CHECK(zero.passed());
    CHECK(zero.failing_parts().empty());

    CHECK_THROWS_AS(verify_theorem(0), InvalidInput);
    CHECK(all_passed(verify_theorem(20)));
}

TEST_CASE("failing parts are named")
{
    IdentityReport r = identity_report(9);
    CHECK(r.passed());
    r.E1 += 1;
    r.checks.c = false;
    CHECK_FALSE(r.passed());
    CHECK(r.failing_parts() == "c");
}

TEST_CASE("table formats")
{
    const auto rows = verify_theorem(5);
    const std::string csv = format_table(rows, TableFormat::csv);
    CHECK(csv.rfind("n,E,E0,E1,E2,E3,p_o_bar,is_square,pass\n", 0) == 0);
    CHECK(std::ranges::count(csv, '\n') == 6);
    CHECK(csv.find("4,6,4,2,4,2,6,true,true\n") != std::string::npos);

    const Json j = Json::parse(format_table(rows, TableFormat::json));
    REQUIRE(j.is_array());
    CHECK(j.size() == 5);
    CHECK(j[3]["E0"] == 4);
    CHECK(j[3]["square"]["k"] == 2);
    CHECK(j[0]["checks"]["a"] == true);

    const std::string md = format_table(rows, TableFormat::markdown);
    CHECK(md.find("| 4 | 6 | 4 | 2 | 4 | 2 | 6 | 2^2 | yes |") != std::string::npos);
}

TEST_CASE("verify_involution")
{
    const InvolutionAudit one = verify_involution(1);
    CHECK(one.passed());
    CHECK(one.orbits == 0);
    CHECK(one.exceptional
          == std::vector<TwoColorPartition>{{{}, {1}, {}}, {{}, {}, {1}}});

    const InvolutionAudit two = verify_involution(2);
    CHECK(two.passed());
    CHECK(two.orbits == 1);
    CHECK(two.exceptional.empty());
    CHECK(transform(TwoColorPartition({2}, {}, {})).result == TwoColorPartition({}, {1}, {1}));

    const InvolutionAudit zero = verify_involution(0);
    CHECK(zero.passed());
    CHECK(zero.exceptional.size() == 1);

    for (int n = 3; n <= 20; ++n) {
        const InvolutionAudit a = verify_involution(n);
        CHECK(a.passed());
        CHECK(2 * a.orbits + a.exceptional.size() == a.members);
    }
}

TEST_CASE("verify_bijection")
{
    CHECK(verify_bijection(0).passed());
    const BijectionAudit three = verify_bijection(3);
    CHECK(three.passed());
    CHECK(three.overpartitions == 4);
    CHECK(three.two_color == 4);

    CHECK(verify_bijection(8).passed());
    CHECK(overpartition_to_twocolor(OddOverpartition({3}, {3, 1, 1}))
          == TwoColorPartition({2}, {3}, {3}));
}

TEST_CASE("verify_series")
{
    const SeriesAudit a = verify_series(100, 20);
    CHECK(a.passed());
    CHECK(verify_series(0, 0).passed());
    CHECK_THROWS_AS(verify_series(-1, 0), InvalidInput);
}
