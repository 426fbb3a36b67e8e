#include "feige/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace feige;

TEST_CASE("sweep of n = 1 hits the worked values", "[report]") {
    const auto records = sweep(1, 2);
    REQUIRE(records.size() == 3);  // grid {1/3, 2/3} plus breakpoint 1/2
    CHECK(records[0].p == Rational(1, 3));
    CHECK(records[0].f_value == Rational(2, 3));
    CHECK_FALSE(records[0].is_breakpoint);
    CHECK(records[1].p == Rational(1, 2));
    CHECK(records[1].f_value == Rational(1, 2));
    CHECK(records[1].is_breakpoint);
    CHECK(records[2].p == Rational(2, 3));
    CHECK(records[2].f_value == 1);
}

TEST_CASE("sweep is strictly ascending in p with breakpoints flagged", "[report]") {
    for (unsigned n : {4u, 10u}) {
        const auto records = sweep(n, 97);  // 97+1 coprime with n+1: no collisions
        REQUIRE(records.size() == 97 + n);
        unsigned flagged = 0;
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (i > 0) REQUIRE(records[i - 1].p < records[i].p);
            if (records[i].is_breakpoint) ++flagged;
            REQUIRE(records[i].f_value > 0);
            REQUIRE(records[i].f_value <= 1);
            REQUIRE(records[i].is_breakpoint ==
                    (denominator(Rational(records[i].p * (n + 1))) == 1));
        }
        REQUIRE(flagged == n);
    }
    // grid denominator 1001 = 7*11*13 swallows all ten n=10 breakpoints
    const auto collided = sweep(10, 1000);
    CHECK(collided.size() == 1000);
    unsigned flagged = 0;
    for (const SweepRecord& r : collided) flagged += r.is_breakpoint ? 1 : 0;
    CHECK(flagged == 10);
}

TEST_CASE("sawtooth: ten upward jumps for n = 10, right after breakpoints", "[report]") {
    const auto records = sweep(10, 97);
    unsigned jumps = 0;
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].f_value > records[i - 1].f_value) {
            ++jumps;
            REQUIRE(records[i - 1].is_breakpoint);
        }
    }
    CHECK(jumps == 10);
    // segments between breakpoints decrease strictly in exact value,
    // non-increasingly in the float rendering; the final interval past the
    // last breakpoint is the saturated plateau f = 1
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i - 1].is_breakpoint) continue;
        if (records[i].f_value == 1 && records[i - 1].f_value == 1) continue;
        REQUIRE(records[i].f_value < records[i - 1].f_value);
        REQUIRE(records[i].f_float <= records[i - 1].f_float);
    }
}

TEST_CASE("sweep floats are correctly rounded renderings", "[report]") {
    for (const SweepRecord& r : sweep(7, 64)) {
        const double ulp = std::nextafter(r.f_float, 2.0) - r.f_float;
        REQUIRE(abs(Rational(r.f_float) - r.f_value) <= Rational(ulp) / 2);
        REQUIRE(to_double(r.p) == r.p_float);
    }
}

TEST_CASE("sweep CSV has the pinned header and exact fraction columns", "[report]") {
    std::ostringstream out;
    write_sweep_csv(out, sweep(1, 2));
    const std::string csv = out.str();
    CHECK(csv ==
          "p_num,p_den,p_float,f_num,f_den,f_float,is_breakpoint\n"
          "1,3,0.3333333333333333,2,3,0.6666666666666666,0\n"
          "1,2,0.5,1,2,0.5,1\n"
          "2,3,0.6666666666666666,1,1,1,0\n");
}

TEST_CASE("reports round-trip through serialization", "[report]") {
    VerificationReport r;
    r.suite = "demo";
    r.checks_run = 3;
    r.parameters["n_max"] = "12";
    r.parameters["seed"] = "42";
    r.elapsed_ms = 17;
    r.check(CheckId::d_nonnegative, 4, 1, Rational(41, 625), Rational(0), true);
    r.check(CheckId::rectangle_bound, 4, 2, Rational(36, 625), Rational(37, 750), false);
    REQUIRE(r.checks_run == 5);
    REQUIRE(r.failures.size() == 1);

    const std::string text = serialize_report(r);
    CHECK(text.find("\"schema\": \"feigecheck-report/1\"") != std::string::npos);
    CHECK(text.find("\"lemma_id\": \"rectangle_bound\"") != std::string::npos);
    CHECK(text.find("\"lhs\": \"36/625\"") != std::string::npos);
    const VerificationReport back = parse_report(text);
    REQUIRE(back == r);

    VerificationReport empty;
    empty.suite = "empty";
    CHECK(parse_report(serialize_report(empty)) == empty);
    CHECK(serialize_report(empty).find("\"failures\": []") != std::string::npos);
}

TEST_CASE("report collections round-trip", "[report]") {
    VerificationReport a;
    a.suite = "first";
    a.check(CheckId::self_test, 0, 0, Rational(0), Rational(1), false);
    VerificationReport b;
    b.suite = "second";
    b.checks_run = 9;
    const std::string text = serialize_report_collection({a, b});
    const auto back = parse_report_collection(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == a);
    CHECK(back[1] == b);
}

TEST_CASE("check ids round-trip through names", "[report]") {
    for (int i = 0; i <= static_cast<int>(CheckId::self_test); ++i) {
        const auto id = static_cast<CheckId>(i);
        REQUIRE(check_id_from_string(to_string(id)) == id);
    }
    CHECK_THROWS_AS(check_id_from_string("nonsense"), std::invalid_argument);
}
