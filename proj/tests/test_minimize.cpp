#include "feige/minimize.hpp"
#include "feige/tail.hpp"
#include "feige/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace feige;

TEST_CASE("h_value on the n = 4 table", "[minimize]") {
    // H(4, m) = 256, 297, 328, 369 by hand expansion
    CHECK(h_value(4, 1).unnormalized == 256);
    CHECK(h_value(4, 1).value == Rational(256, 625));
    CHECK(h_value(4, 2).unnormalized == 297);
    CHECK(h_value(4, 2).value == Rational(297, 625));
    CHECK(h_value(4, 3).unnormalized == 328);
    CHECK(h_value(4, 4).unnormalized == 369);
    CHECK(h_value(1, 1).value == Rational(1, 2));
    CHECK(h_value(4, 2).p_star == Rational(2, 5));
    CHECK_THROWS_AS(h_value(4, 0), std::out_of_range);
    CHECK_THROWS_AS(h_value(4, 5), std::out_of_range);
}

TEST_CASE("h_value equals f at the breakpoint", "[minimize]") {
    for (unsigned n = 1; n <= 60; ++n)
        for (unsigned m = 1; m <= n; ++m)
            REQUIRE(h_value(n, m).value == f_of_p(n, Rational(m, n + 1)));
}

TEST_CASE("h_floor", "[minimize]") {
    CHECK(h_floor(1) == Rational(1, 2));
    CHECK(h_floor(2) == Rational(4, 9));
    CHECK(h_floor(10) == Rational(BigInt{"10000000000"}, BigInt{"25937424601"}));
    for (unsigned n = 1; n <= 40; ++n) REQUIRE(h_floor(n) == h_value(n, 1).value);
}

TEST_CASE("global_min lands on the first breakpoint", "[minimize]") {
    const MinResult r4 = global_min(4);
    CHECK(r4.argmin_p == Rational(1, 5));
    CHECK(r4.min_value == Rational(256, 625));
    const MinResult r1 = global_min(1);
    CHECK(r1.argmin_p == Rational(1, 2));
    CHECK(r1.min_value == Rational(1, 2));
    CHECK(global_min(10).min_value == h_floor(10));
    for (unsigned n = 1; n <= 100; ++n) {
        const MinResult res = global_min(n);
        REQUIRE(res.argmin_p == Rational(1, n + 1));
        REQUIRE(res.min_value == h_floor(n));
        REQUIRE(res.certified_above_1_over_e);
    }
}

TEST_CASE("the floor stays under every sampled f value", "[minimize]") {
    for (unsigned n : {1u, 7u, 10u, 33u, 100u}) {
        const MinResult res = global_min(n);
        for (const Rational& p : random_probe_points(n, 200, 42))
            REQUIRE(res.min_value <= f_of_p(n, p));
        for (const Rational& bp : breakpoints(n))
            REQUIRE(res.min_value <= f_of_p(n, bp));
    }
}

TEST_CASE("1/e certification", "[minimize]") {
    CHECK(certify_above_1_over_e(10, 20));
    CHECK(certify_above_1_over_e(1, 3));
    CHECK(certify_above_1_over_e(1000, 20));
    // (1+1/10)^10 = 2.5937... exceeds the 2-term lower bound 5/2: inconclusive
    CHECK_FALSE(certify_above_1_over_e(10, 2));
    for (unsigned n = 1; n <= 1000; ++n) REQUIRE(certify_above_1_over_e(n, 25));
}

TEST_CASE("h(n,1) strictly decreases in n", "[minimize]") {
    // cross-multiplied witnesses: 1*9 > 8 and 4*64 > 243
    CHECK(BigInt(1) * int_pow(3, 2) > int_pow(2, 3));
    CHECK(int_pow(2, 2) * int_pow(4, 3) > int_pow(3, 5));
    const VerificationReport report = floor_monotone_check(100);
    CHECK(report.checks_run == 99);
    CHECK(report.passed());
    for (unsigned n = 1; n < 40; ++n) REQUIRE(h_floor(n) > h_floor(n + 1));
    CHECK_THROWS_AS(floor_monotone_check(1), std::invalid_argument);
}

TEST_CASE("second breakpoint sits strictly above the floor", "[minimize]") {
    for (unsigned n = 2; n <= 100; ++n)
        REQUIRE(h_value(n, 1).value < h_value(n, 2).value);
}
