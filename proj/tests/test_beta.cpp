#include "feige/beta.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace feige;

namespace {

// antiderivative oracle for small b: B(z; a, 2) = z^{a}/a - z^{a+1}/(a+1)
Rational beta_b2_oracle(const Rational& z, unsigned a) {
    return rational_pow(z, a) / a - rational_pow(z, a + 1) / (a + 1);
}

}  // namespace

TEST_CASE("incomplete_beta at integer parameters", "[beta]") {
    CHECK(incomplete_beta(Rational(1), 1, 1) == 1);
    for (unsigned j = 0; j <= 8; ++j)
        REQUIRE(incomplete_beta(Rational(j, 8), 1, 1) == Rational(j, 8));
    CHECK(incomplete_beta(Rational(3, 5), 3, 2) == Rational(99, 2500));
    for (unsigned j = 1; j < 12; ++j)
        for (unsigned a = 1; a <= 6; ++a)
            REQUIRE(incomplete_beta(Rational(j, 12), a, 2) == beta_b2_oracle(Rational(j, 12), a));
    CHECK_THROWS_AS(BetaParams(Rational(3, 2), 1, 1), std::domain_error);
    CHECK_THROWS_AS(BetaParams(Rational(1, 2), 0, 1), std::invalid_argument);
}

TEST_CASE("incomplete_beta is strictly increasing in z", "[beta]") {
    for (unsigned a = 1; a + 1 <= 12; ++a)
        for (unsigned b = 1; a + b <= 12; ++b) {
            Rational prev = 0;
            for (unsigned j = 1; j <= 16; ++j) {
                const Rational v = incomplete_beta(Rational(j, 17), a, b);
                REQUIRE(v > prev);
                prev = v;
            }
            REQUIRE(prev < complete_beta(a, b));
        }
}

TEST_CASE("reflection symmetry B(z;a,b) + B(1-z;b,a) = B(1;a,b)", "[beta]") {
    for (unsigned a = 1; a + 1 <= 12; ++a)
        for (unsigned b = 1; a + b <= 12; ++b)
            for (unsigned j = 1; j < 17; ++j) {
                const Rational z(j, 17);
                REQUIRE(incomplete_beta(z, a, b) + incomplete_beta(1 - z, b, a) ==
                        complete_beta(a, b));
            }
}

TEST_CASE("completeness: B(1;a,b) matches the factorial form", "[beta]") {
    for (unsigned a = 1; a + 1 <= 14; ++a)
        for (unsigned b = 1; a + b <= 14; ++b)
            REQUIRE(incomplete_beta(Rational(1), a, b) ==
                    Rational(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1)));
}

TEST_CASE("h_via_beta reproduces the breakpoint values", "[beta]") {
    CHECK(h_via_beta(4, 2) == Rational(297, 625));
    CHECK(Rational(12) * incomplete_beta(Rational(3, 5), 3, 2) == Rational(297, 625));
    CHECK(h_via_beta(1, 1) == Rational(1, 2));
    CHECK(h_via_beta(4, 1) == Rational(256, 625));
    CHECK_THROWS_AS(h_via_beta(4, 0), std::out_of_range);
    for (unsigned n = 1; n <= 50; ++n)
        for (unsigned m = 1; m <= n; ++m)
            REQUIRE(h_via_beta(n, m) == h_value(n, m).value);
}

TEST_CASE("absorption identity (n-m+1) C(n,m-1) = m C(n,m)", "[beta]") {
    CHECK(absorption_identity_check(4, 2));  // 3*4 = 2*6
    CHECK(absorption_identity_check(7, 1));  // n*1 = 1*n
    CHECK(absorption_identity_check(7, 5));  // 3*35 = 5*21
    for (unsigned n = 1; n <= 40; ++n)
        for (unsigned m = 1; m <= n; ++m) REQUIRE(absorption_identity_check(n, m));
}
