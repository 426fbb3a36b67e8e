#pragma once

// Structured verification results: per-check witnesses, suite reports with
// exact fraction fields, the f(p) sweep records, CSV emission, and a
// versioned JSON serialization that round-trips losslessly.

#include "feige/rational.hpp"
#include "feige/tail.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace feige {

inline constexpr const char* kReportSchema = "feigecheck-report/1";

enum class CheckId {
    // tail_model
    oracle_equality,
    heterogeneous_consistency,
    range_check,
    interval_decrease,
    derivative_crosscheck,
    derivative_sign,
    left_continuity,
    breakpoint_jump,
    // minimizer
    floor_monotone,
    floor_identification,
    breakpoint_optimality,
    strict_second_breakpoint,
    h_consistency,
    e_certificate,
    // beta_bridge
    beta_representation,
    absorption_identity,
    beta_monotone_z,
    beta_symmetry,
    beta_completeness,
    // lemma_suite
    d_nonnegative,
    d_symmetry,
    complement_identity,
    first_step_positive,
    w_total_order,
    g_argmax_dominance,
    rectangle_bound,
    case1_regime,
    case2_regime,
    b_monotone,
    b_ratio_identity,
    case_boundary_chain,
    chain_consistency,
    // mc_sim
    mc_deviation,
    // harness falsifiability probe
    self_test,
};

inline const char* to_string(CheckId id) {
    switch (id) {
        case CheckId::oracle_equality: return "oracle_equality";
        case CheckId::heterogeneous_consistency: return "heterogeneous_consistency";
        case CheckId::range_check: return "range_check";
        case CheckId::interval_decrease: return "interval_decrease";
        case CheckId::derivative_crosscheck: return "derivative_crosscheck";
        case CheckId::derivative_sign: return "derivative_sign";
        case CheckId::left_continuity: return "left_continuity";
        case CheckId::breakpoint_jump: return "breakpoint_jump";
        case CheckId::floor_monotone: return "floor_monotone";
        case CheckId::floor_identification: return "floor_identification";
        case CheckId::breakpoint_optimality: return "breakpoint_optimality";
        case CheckId::strict_second_breakpoint: return "strict_second_breakpoint";
        case CheckId::h_consistency: return "h_consistency";
        case CheckId::e_certificate: return "e_certificate";
        case CheckId::beta_representation: return "beta_representation";
        case CheckId::absorption_identity: return "absorption_identity";
        case CheckId::beta_monotone_z: return "beta_monotone_z";
        case CheckId::beta_symmetry: return "beta_symmetry";
        case CheckId::beta_completeness: return "beta_completeness";
        case CheckId::d_nonnegative: return "d_nonnegative";
        case CheckId::d_symmetry: return "d_symmetry";
        case CheckId::complement_identity: return "complement_identity";
        case CheckId::first_step_positive: return "first_step_positive";
        case CheckId::w_total_order: return "w_total_order";
        case CheckId::g_argmax_dominance: return "g_argmax_dominance";
        case CheckId::rectangle_bound: return "rectangle_bound";
        case CheckId::case1_regime: return "case1_regime";
        case CheckId::case2_regime: return "case2_regime";
        case CheckId::b_monotone: return "b_monotone";
        case CheckId::b_ratio_identity: return "b_ratio_identity";
        case CheckId::case_boundary_chain: return "case_boundary_chain";
        case CheckId::chain_consistency: return "chain_consistency";
        case CheckId::mc_deviation: return "mc_deviation";
        case CheckId::self_test: return "self_test";
    }
    return "unknown";
}

inline CheckId check_id_from_string(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(CheckId::self_test); ++i) {
        auto id = static_cast<CheckId>(i);
        if (s == to_string(id)) return id;
    }
    throw std::invalid_argument("check_id_from_string: unknown id '" + s + "'");
}

// One evaluated check: the two exact sides of its relation and the verdict.
struct LemmaWitness {
    CheckId lemma_id;
    long long n = 0;
    long long m = 0;
    Rational lhs;
    Rational rhs;
    bool holds = false;

    friend bool operator==(const LemmaWitness&, const LemmaWitness&) = default;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t checks_run = 0;
    std::vector<LemmaWitness> failures;  // empty on success
    std::map<std::string, std::string> parameters;
    std::uint64_t elapsed_ms = 0;

    bool passed() const { return failures.empty(); }

    void record(LemmaWitness w) {
        ++checks_run;
        if (!w.holds) failures.push_back(std::move(w));
    }
    void check(CheckId id, long long n, long long m, const Rational& lhs,
               const Rational& rhs, bool holds) {
        record(LemmaWitness{id, n, m, lhs, rhs, holds});
    }
};

/// Shortest round-trippable decimal rendering of a double.
inline std::string double_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

// -------------------------------------------------------------------------
// f(p) sweep (the sawtooth plot data)

struct SweepRecord {
    Rational p;
    Rational f_value;
    double p_float = 0;
    double f_float = 0;
    bool is_breakpoint = false;
};

/// Evaluates f exactly on the uniform grid {j/(points+1)} joined with all
/// breakpoints m/(n+1); sorted strictly ascending (collisions merged),
/// breakpoints flagged.
inline std::vector<SweepRecord> sweep(unsigned n, unsigned points) {
    if (points < 2) throw std::invalid_argument("sweep: points must be >= 2");
    std::vector<Rational> grid;
    grid.reserve(points + n);
    for (unsigned j = 1; j <= points; ++j) grid.emplace_back(j, points + 1);
    for (unsigned m = 1; m <= n; ++m) grid.emplace_back(m, n + 1);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<SweepRecord> out;
    out.reserve(grid.size());
    for (Rational& p : grid) {
        SweepRecord rec;
        rec.is_breakpoint = denominator(Rational(p * (n + 1))) == 1;
        rec.f_value = f_of_p(n, p);
        rec.p_float = to_double(p);
        rec.f_float = to_double(rec.f_value);
        rec.p = std::move(p);
        out.push_back(std::move(rec));
    }
    return out;
}

inline constexpr const char* kSweepCsvHeader =
    "p_num,p_den,p_float,f_num,f_den,f_float,is_breakpoint";

/// CSV per the fixed header; fractions authoritative, floats advisory.
inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << kSweepCsvHeader << "\n";
    for (const SweepRecord& r : records) {
        os << numerator(r.p) << "," << denominator(r.p) << "," << double_to_string(r.p_float)
           << "," << numerator(r.f_value) << "," << denominator(r.f_value) << ","
           << double_to_string(r.f_float) << "," << (r.is_breakpoint ? 1 : 0) << "\n";
    }
}

// -------------------------------------------------------------------------
// JSON serialization (schema "feigecheck-report/1")

namespace detail {

inline nlohmann::ordered_json witness_to_json(const LemmaWitness& w) {
    nlohmann::ordered_json j;
    j["lemma_id"] = to_string(w.lemma_id);
    j["n"] = w.n;
    j["m"] = w.m;
    j["lhs"] = to_fraction_string(w.lhs);
    j["rhs"] = to_fraction_string(w.rhs);
    j["holds"] = w.holds;
    return j;
}

inline LemmaWitness witness_from_json(const nlohmann::json& j) {
    LemmaWitness w;
    w.lemma_id = check_id_from_string(j.at("lemma_id").get<std::string>());
    w.n = j.at("n").get<long long>();
    w.m = j.at("m").get<long long>();
    w.lhs = parse_rational(j.at("lhs").get<std::string>());
    w.rhs = parse_rational(j.at("rhs").get<std::string>());
    w.holds = j.at("holds").get<bool>();
    return w;
}

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["suite"] = r.suite;
    j["checks_run"] = r.checks_run;
    j["failures"] = nlohmann::ordered_json::array();
    for (const LemmaWitness& w : r.failures) j["failures"].push_back(witness_to_json(w));
    j["parameters"] = r.parameters;  // std::map: stable key order
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<std::string>() != kReportSchema)
        throw std::invalid_argument("report: unsupported schema '" +
                                    j.at("schema").get<std::string>() + "'");
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.checks_run = j.at("checks_run").get<std::uint64_t>();
    for (const auto& jw : j.at("failures")) r.failures.push_back(witness_from_json(jw));
    r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    return r;
}

}  // namespace detail

inline std::string serialize_report(const VerificationReport& r) {
    return detail::report_to_json(r).dump(2) + "\n";
}

inline VerificationReport parse_report(const std::string& text) {
    return detail::report_from_json(nlohmann::json::parse(text));
}

/// Multi-suite report file, schema-tagged at the top level.
inline std::string serialize_report_collection(const std::vector<VerificationReport>& rs) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["suites"] = nlohmann::ordered_json::array();
    for (const VerificationReport& r : rs) {
        auto jr = detail::report_to_json(r);
        jr.erase("schema");
        j["suites"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

inline std::vector<VerificationReport> parse_report_collection(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("schema").get<std::string>() != kReportSchema)
        throw std::invalid_argument("report collection: unsupported schema");
    std::vector<VerificationReport> out;
    for (auto jr : j.at("suites")) {
        jr["schema"] = kReportSchema;
        out.push_back(detail::report_from_json(jr));
    }
    return out;
}

inline bool operator==(const VerificationReport& a, const VerificationReport& b) {
    return a.suite == b.suite && a.checks_run == b.checks_run && a.failures == b.failures &&
           a.parameters == b.parameters && a.elapsed_ms == b.elapsed_ms;
}

}  // namespace feige
