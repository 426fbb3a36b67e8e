#include "feige/tail.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace feige;

TEST_CASE("tail_cutoff implements ceil((n+1)p) - 1", "[tail]") {
    CHECK(tail_cutoff(10, Rational(1, 11)) == 0);  // (n+1)p integral: left-closed cutoff
    CHECK(tail_cutoff(1, Rational(3, 4)) == 1);
    CHECK(tail_cutoff(10, Rational(1, 10)) == 1);
    CHECK(tail_cutoff(4, Rational(2, 5)) == 1);
    CHECK_THROWS_AS(tail_cutoff(3, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(tail_cutoff(3, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(tail_cutoff(3, Rational(7, 5)), std::domain_error);
    for (unsigned n = 1; n <= 24; ++n)
        for (unsigned j = 1; j < 32; ++j) {
            const unsigned c = tail_cutoff(n, Rational(j, 32));
            REQUIRE(c <= n);
        }
}

TEST_CASE("partial_tail evaluates the partial binomial sum exactly", "[tail]") {
    CHECK(partial_tail(TailSpec(2, 2), Rational(1, 3)) == 1);
    CHECK(partial_tail(TailSpec(4, 1), Rational(2, 5)) == Rational(297, 625));
    for (unsigned j = 1; j < 8; ++j) {
        const Rational p(j, 8);
        REQUIRE(partial_tail(TailSpec(1, 0), p) == 1 - p);
    }
    CHECK_THROWS_AS(TailSpec(3, 4), std::out_of_range);
}

TEST_CASE("f_of_p on the worked cases", "[tail]") {
    CHECK(f_of_p(1, Rational(2, 3)) == 1);  // support point 3/2 keeps both outcomes below 2
    CHECK(f_of_p(4, Rational(2, 5)) == Rational(297, 625));
    CHECK(f_of_p(10, Rational(1, 11)) == Rational(int_pow(10, 10), int_pow(11, 10)));
    CHECK(IidTwoPointInstance(4, Rational(2, 5)).support_point() == Rational(5, 2));
    CHECK_THROWS_AS(IidTwoPointInstance(0, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(IidTwoPointInstance(3, Rational(1)), std::domain_error);
}

TEST_CASE("f_of_p equals the event-definition oracle", "[tail]") {
    // all breakpoints plus odd interior 64ths, exact equality
    for (unsigned n = 1; n <= 16; ++n) {
        std::vector<Rational> ps = breakpoints(n);
        for (unsigned j = 1; j < 64; j += 2) ps.emplace_back(j, 64);
        for (const Rational& p : ps) {
            const IidTwoPointInstance inst(n, p);
            REQUIRE(f_of_p(inst) == brute_force_iid(inst));
        }
    }
    CHECK(brute_force_iid(IidTwoPointInstance(1, Rational(2, 3))) == 1);
    CHECK(brute_force_iid(IidTwoPointInstance(4, Rational(2, 5))) == Rational(297, 625));
    CHECK(brute_force_iid(IidTwoPointInstance(2, Rational(1, 2))) == Rational(3, 4));
}

TEST_CASE("f is 1 above the last breakpoint and in (0,1] everywhere", "[tail]") {
    for (unsigned n = 1; n <= 20; ++n) {
        REQUIRE(f_of_p(n, Rational(2 * n + 1, 2 * n + 2)) == 1);
        for (unsigned j = 1; j < 16; ++j) {
            const Rational f = f_of_p(n, Rational(j, 16));
            REQUIRE(f > 0);
            REQUIRE(f <= 1);
        }
    }
}

TEST_CASE("tail_derivative: term-wise sum, closed form, and sign", "[tail]") {
    CHECK(tail_derivative(TailSpec(2, 0), Rational(1, 2)) == -1);
    CHECK(tail_derivative(TailSpec(2, 1), Rational(1, 3)) == Rational(-2, 3));
    CHECK(tail_derivative(TailSpec(3, 3), Rational(1, 4)) == 0);  // F_{n,n} is constant
    const std::vector<Rational> ps = {Rational(1, 7), Rational(1, 3), Rational(1, 2),
                                      Rational(5, 8)};
    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned m = 0; m <= n; ++m)
            for (const Rational& p : ps) {
                const Rational termwise = tail_derivative(TailSpec(n, m), p);
                REQUIRE(termwise == tail_derivative_closed_form(TailSpec(n, m), p));
                if (m < n)
                    REQUIRE(termwise < 0);
                else
                    REQUIRE(termwise == 0);
            }
}

TEST_CASE("breakpoints enumerate m/(n+1)", "[tail]") {
    CHECK(breakpoints(1) == std::vector<Rational>{Rational(1, 2)});
    CHECK(breakpoints(4) ==
          std::vector<Rational>{Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)});
    CHECK(breakpoints(10).size() == 10);
    CHECK(breakpoints(10).front() == Rational(1, 11));
    CHECK(breakpoints(10).back() == Rational(10, 11));
}

TEST_CASE("f is left-continuous at breakpoints and jumps upward after them", "[tail]") {
    for (unsigned n = 1; n <= 24; ++n)
        for (unsigned m = 1; m <= n; ++m) {
            const Rational at_bp = f_of_p(n, Rational(m, n + 1));
            // value comes from the interval ((m-1)/(n+1), m/(n+1)] formula
            REQUIRE(at_bp == partial_tail(TailSpec(n, m - 1), Rational(m, n + 1)));
            const Rational just_right = f_of_p(n, Rational(8 * m + 1, 8 * (n + 1)));
            REQUIRE(just_right > at_bp);
        }
}

TEST_CASE("f decreases strictly inside each breakpoint interval", "[tail]") {
    for (unsigned n = 1; n <= 40; ++n)
        for (unsigned m = 1; m <= n; ++m) {
            Rational prev;
            for (unsigned j = 1; j <= 8; ++j) {
                const Rational p(9 * (m - 1) + j, 9 * (n + 1));
                const Rational f = f_of_p(n, p);
                if (j > 1) REQUIRE(prev > f);
                prev = f;
            }
        }
}

TEST_CASE("exact_heterogeneous on the worked cases", "[tail]") {
    CHECK(exact_heterogeneous(HeterogeneousInstance({Rational(2), Rational(2)})) ==
          Rational(3, 4));
    CHECK(exact_heterogeneous(HeterogeneousInstance({Rational(3), Rational(3), Rational(3)})) ==
          Rational(20, 27));
    CHECK(exact_heterogeneous(HeterogeneousInstance({Rational(20)})) == Rational(19, 20));
    // single variable below 2: both support points are under the threshold
    CHECK(exact_heterogeneous(HeterogeneousInstance({Rational(3, 2)})) == 1);
    CHECK(exact_heterogeneous(HeterogeneousInstance({Rational(1)})) == 1);
    // mixed denominators: only the double hit (5/2, 5/3), mass 6/25, reaches 25/6 >= 3
    CHECK(exact_heterogeneous(HeterogeneousInstance({Rational(5, 2), Rational(5, 3)})) ==
          Rational(19, 25));
}

TEST_CASE("exact_heterogeneous agrees with f_of_p on replicated instances", "[tail]") {
    for (const Rational& x : {Rational(2), Rational(3, 2), Rational(5, 2), Rational(20, 7)})
        for (unsigned n = 1; n <= 16; ++n) {
            const Rational via_enum =
                exact_heterogeneous(HeterogeneousInstance(std::vector<Rational>(n, x)));
            const Rational p(denominator(x), numerator(x));
            REQUIRE(via_enum == f_of_p(n, p));
        }
}

TEST_CASE("heterogeneous validation and the enumeration cap", "[tail]") {
    CHECK_THROWS_AS(HeterogeneousInstance({}), std::invalid_argument);
    CHECK_THROWS_AS(HeterogeneousInstance({Rational(1, 2)}), std::domain_error);
    std::vector<Rational> too_big(kEnumerationCap + 1, Rational(2));
    CHECK_THROWS_AS(exact_heterogeneous(HeterogeneousInstance(too_big)), std::length_error);
    std::vector<Rational> at_cap(kEnumerationCap, Rational(30));
    CHECK(exact_heterogeneous(HeterogeneousInstance(at_cap)) > 0);
}
