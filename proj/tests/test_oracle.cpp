#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fsq/oracle.hpp"

using namespace fsq;

TEST_CASE("restricted witness search") {
    CHECK_FALSE(oracle::has_restricted_representation(3, 10, 24).has_value());
    auto d = oracle::has_restricted_representation(1, 24, 15);
    REQUIRE(d.has_value());
    CHECK(d->x == 1);
    CHECK(d->y == 1);
    CHECK(d->z == 2);
    CHECK(d->w == 3);
    CHECK(d->m == 5);
    d = oracle::has_restricted_representation(1, 1, 0);
    REQUIRE(d.has_value());
    CHECK((d->x == 0 && d->y == 0 && d->z == 0 && d->w == 0));
}

TEST_CASE("scan_failures") {
    auto report = oracle::scan_failures(3, 10, 400);
    CHECK(std::find(report.failures.begin(), report.failures.end(), 24) !=
          report.failures.end());
    CHECK(std::find(report.failures.begin(), report.failures.end(), 384) !=
          report.failures.end());
    CHECK(report.witness_sample.size() == 3);
    for (auto& [n, d] : report.witness_sample)
        CHECK(d.x * d.x + d.y * d.y + d.z * d.z + d.w * d.w == n);
    // parallel run returns the identical failure list
    auto parallel = oracle::scan_failures(3, 10, 400, 4);
    CHECK(parallel.failures == report.failures);
    // suitable pairs have empty failure lists on small ranges
    CHECK(oracle::scan_failures(1, 2, 500).failures.empty());
    CHECK(oracle::scan_failures(1, 3, 500).failures.empty());
}

TEST_CASE("four_square_partitions") {
    auto p24 = oracle::four_square_partitions(24);
    REQUIRE(p24.size() == 1);
    CHECK(p24[0] == std::array<i64, 4>{0, 2, 2, 4});
    auto p0 = oracle::four_square_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == std::array<i64, 4>{0, 0, 0, 0});
    auto p15 = oracle::four_square_partitions(15);
    REQUIRE(p15.size() == 1);
    CHECK(p15[0] == std::array<i64, 4>{1, 1, 2, 3});
}

TEST_CASE("counterexample family") {
    auto verdicts = oracle::counterexample_family_check(2);
    REQUIRE(verdicts.size() == 3);
    CHECK(verdicts[0].n == 24);
    CHECK(verdicts[1].n == 384);
    CHECK(verdicts[2].n == 6144);
    for (auto& v : verdicts) {
        CHECK(v.unique_partition);
        CHECK(v.no_witness);
    }
}

TEST_CASE("cauchy_witness") {
    auto w = oracle::cauchy_witness(11, 5);
    REQUIRE(w.has_value());
    CHECK(*w == std::array<i64, 4>{0, 1, 1, 3});
    w = oracle::cauchy_witness(1, 1);
    REQUIRE(w.has_value());
    CHECK(*w == std::array<i64, 4>{0, 0, 0, 1});
    CHECK_THROWS_AS(oracle::cauchy_witness(10, 5), std::invalid_argument);
    CHECK_THROWS_AS(oracle::cauchy_witness(11, 4), std::invalid_argument);
}

TEST_CASE("cauchy_witness exists whenever the bounds hold") {
    for (i64 n = 1; n <= 999; n += 2)
        for (i64 m = 1; m * m < 4 * n; m += 2) {
            if (3 * n >= m * m + 2 * m + 4) continue;
            auto w = oracle::cauchy_witness(n, m);
            REQUIRE(w.has_value());
            auto [x, y, z, ww] = *w;
            REQUIRE(x * x + y * y + z * z + ww * ww == n);
            REQUIRE(x + y + z + ww == m);
        }
}

TEST_CASE("dickson_gap_check") {
    CHECK(oracle::dickson_gap_check(100) == std::vector<i64>{15});
    CHECK(oracle::dickson_gap_check(14).empty());
    CHECK(oracle::dickson_gap_check(2000) == std::vector<i64>{15});
}

TEST_CASE("suitability_scan") {
    auto table = oracle::suitability_scan(4, 600);
    CHECK(table.count({2, 4}) == 1);   // gcd 2 is square-free
    CHECK(table.count({4, 4}) == 0);   // gcd 4 is not
    CHECK_FALSE(table.at({1, 2}).has_value());
    CHECK_FALSE(table.at({1, 3}).has_value());
    CHECK(table.at({1, 1}) == 7);
    CHECK(table.at({1, 4}) == 12);
    CHECK(table.at({2, 3}) == 3);
    CHECK(table.at({3, 4}) == 7);
    CHECK(table.at({2, 4}) == 7);
}

TEST_CASE("lagrange baseline: every n has an unrestricted partition") {
    for (i64 n = 0; n <= 5000; ++n)
        REQUIRE_FALSE(oracle::four_square_partitions(n).empty());
}
