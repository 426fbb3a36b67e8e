// feigecheck: exact verification companion for the i.i.d. two-point floor
// of P(S_n < n+1). Subcommands: sweep, minimize, verify, simulate, oracle.
//
// Exit codes: 0 success, 1 verification failure (or uncertified minimum),
// 2 usage/input error.

#include "feige/feige.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace feige;

std::string frac_and_float(const Rational& r) {
    return to_fraction_string(r) + " (" + double_to_string(to_double(r)) + ")";
}

HeterogeneousInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("spec file '" + path + "': not valid JSON: " + e.what());
    }
    if (!j.contains("x"))
        throw std::runtime_error("spec file '" + path + "': missing field 'x'");
    if (!j["x"].is_array() || j["x"].empty())
        throw std::runtime_error("spec file '" + path +
                                 "': field 'x' must be a non-empty array of rational strings");
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < j["x"].size(); ++i) {
        const auto& el = j["x"][i];
        if (!el.is_string())
            throw std::runtime_error("spec file: x[" + std::to_string(i) +
                                     "] must be a rational string such as \"5/2\"");
        Rational x;
        try {
            x = parse_rational(el.get<std::string>());
        } catch (const std::exception& e) {
            throw std::runtime_error("spec file: x[" + std::to_string(i) + "]: " + e.what());
        }
        if (x < 1)
            throw std::runtime_error("spec file: x[" + std::to_string(i) +
                                     "] = " + el.get<std::string>() + " must be >= 1");
        xs.push_back(std::move(x));
    }
    return HeterogeneousInstance(std::move(xs));
}

int cmd_sweep(unsigned n, unsigned points, const std::string& out_path) {
    const auto records = sweep(n, points);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    write_sweep_csv(out, records);
    if (!out.flush()) {
        std::cerr << "error: short write to '" << out_path << "'\n";
        return 2;
    }
    const SweepRecord* best = &records.front();
    for (const SweepRecord& r : records)
        if (r.f_value < best->f_value) best = &r;
    std::cout << "sweep n=" << n << " points=" << points << ": " << records.size()
              << " records -> " << out_path << "\n";
    std::cout << "min f = " << frac_and_float(best->f_value)
              << " at p = " << frac_and_float(best->p) << "\n";
    return 0;
}

int cmd_minimize(unsigned n, unsigned e_terms) {
    MinResult res = global_min(n, e_terms);
    unsigned terms = e_terms;
    while (!res.certified_above_1_over_e && terms < 1024) {
        terms = std::min(terms * 2, 1024u);
        res = global_min(n, terms);
    }
    std::cout << "n = " << n << "\n";
    std::cout << "argmin p = " << frac_and_float(res.argmin_p) << "\n";
    std::cout << "min f = " << frac_and_float(res.min_value) << "\n";
    if (res.certified_above_1_over_e) {
        std::cout << "1/e certificate: certified min > 1/e (e-terms = " << res.e_terms_used
                  << ")\n";
        return 0;
    }
    std::cout << "1/e certificate: inconclusive at e-terms = " << res.e_terms_used
              << "; raise --e-terms\n";
    return 1;
}

int cmd_verify(unsigned n_max, const std::string& out_path, std::uint64_t seed,
               std::uint64_t trials, unsigned workers, bool self_test_fault) {
    BatteryConfig cfg;
    cfg.n_max = n_max;
    cfg.seed = seed;
    cfg.mc_trials = trials;
    cfg.mc_workers = workers;
    cfg.inject_fault = self_test_fault;
    const auto reports = run_full_battery(cfg);

    std::uint64_t checks = 0;
    for (const VerificationReport& r : reports) {
        checks += r.checks_run;
        std::cout << (r.passed() ? "[PASS] " : "[FAIL] ") << r.suite << ": ";
        if (!r.passed()) std::cout << r.failures.size() << " failures / ";
        std::cout << r.checks_run << " checks (" << r.elapsed_ms << " ms)\n";
        for (const LemmaWitness& w : r.failures)
            std::cout << "       " << to_string(w.lemma_id) << " n=" << w.n << " m=" << w.m
                      << " lhs=" << to_fraction_string(w.lhs)
                      << " rhs=" << to_fraction_string(w.rhs) << "\n";
    }
    const std::uint64_t failures = total_failures(reports);
    std::cout << "total: " << failures << " failures / " << checks << " checks\n";

    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << serialize_report_collection(reports);
    }
    return failures == 0 ? 0 : 1;
}

int cmd_simulate(const std::string& spec_path, std::uint64_t trials, std::uint64_t seed,
                 unsigned workers) {
    const HeterogeneousInstance inst = load_instance(spec_path);
    McConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.workers = workers;
    const McEstimate est = simulate(inst, cfg);
    std::cout << "n = " << inst.xs.size() << " trials = " << est.trials
              << " seed = " << est.seed << " workers = " << workers << "\n";
    std::cout << "p_hat = " << double_to_string(est.p_hat) << "\n";
    std::cout << "std_error = " << double_to_string(est.std_error) << "\n";
    std::cout << "ci95 = [" << double_to_string(est.ci95_low) << ", "
              << double_to_string(est.ci95_high) << "]\n";
    if (inst.xs.size() <= kEnumerationCap) {
        const Rational exact = exact_heterogeneous(inst);
        const double exact_f = to_double(exact);
        std::cout << "exact = " << frac_and_float(exact) << "\n";
        if (est.std_error > 0)
            std::cout << "deviation = "
                      << double_to_string((est.p_hat - exact_f) / est.std_error)
                      << " sigma\n";
        else
            std::cout << "deviation = " << (est.p_hat == exact_f ? "0" : "inf")
                      << " sigma\n";
    }
    return 0;
}

int cmd_oracle(const std::string& spec_path) {
    const HeterogeneousInstance inst = load_instance(spec_path);
    if (inst.xs.size() > kEnumerationCap) {
        std::cerr << "error: n = " << inst.xs.size() << " exceeds the exact enumeration cap of "
                  << kEnumerationCap << "\n";
        return 2;
    }
    const Rational exact = exact_heterogeneous(inst);
    std::cout << "P(S_n < n+1) = " << frac_and_float(exact) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the two-point floor of P(S_n < n+1)"};
    app.require_subcommand(1);

    unsigned n = 10, points = 1000, e_terms = 25, n_max = 100, workers = 1;
    std::uint64_t seed = 42, trials = 100000;
    std::string out_path, spec_path;
    bool self_test_fault = false;

    CLI::App* sc_sweep = app.add_subcommand("sweep", "evaluate f(p) on a grid, write CSV");
    sc_sweep->add_option("--n", n, "number of variables")
        ->required()
        ->check(CLI::Range(1u, 2000u));
    sc_sweep->add_option("--points", points, "uniform grid size")
        ->default_val(1000)
        ->check(CLI::Range(2u, 1000000u));
    sc_sweep->add_option("--out", out_path, "output CSV path")->required();

    CLI::App* sc_min = app.add_subcommand("minimize", "global minimum of f with 1/e certificate");
    sc_min->add_option("--n", n, "number of variables")
        ->required()
        ->check(CLI::Range(1u, 2000u));
    sc_min->add_option("--e-terms", e_terms, "Taylor terms for the e bracket")
        ->default_val(25)
        ->check(CLI::Range(2u, 1024u));

    CLI::App* sc_verify = app.add_subcommand("verify", "run the full lemma/inequality battery");
    sc_verify->add_option("--n-max", n_max, "largest n for the full-range checks")
        ->default_val(100)
        ->check(CLI::Range(2u, 1000u));
    sc_verify->add_option("--out", out_path, "write the JSON report here");
    sc_verify->add_option("--seed", seed, "seed for randomized probes and the MC battery")
        ->default_val(42);
    sc_verify->add_option("--trials", trials, "Monte Carlo trials per battery instance")
        ->default_val(100000)
        ->check(CLI::PositiveNumber);
    sc_verify->add_option("--workers", workers, "Monte Carlo worker threads")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    sc_verify->add_flag("--self-test-fault", self_test_fault,
                        "inject one synthetic failure to prove the harness is falsifiable");

    CLI::App* sc_sim = app.add_subcommand("simulate", "Monte Carlo estimate for an instance file");
    sc_sim->add_option("--spec", spec_path, "instance file: {\"x\": [\"2\", \"5/2\", ...]}")
        ->required();
    sc_sim->add_option("--trials", trials, "number of trials")
        ->default_val(100000)
        ->check(CLI::PositiveNumber);
    sc_sim->add_option("--seed", seed, "64-bit master seed")->default_val(0);
    sc_sim->add_option("--workers", workers, "worker threads")
        ->default_val(1)
        ->check(CLI::PositiveNumber);

    CLI::App* sc_oracle = app.add_subcommand("oracle", "exact P(S_n < n+1) for an instance file");
    sc_oracle->add_option("--spec", spec_path, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc_sweep->parsed()) return cmd_sweep(n, points, out_path);
        if (sc_min->parsed()) return cmd_minimize(n, e_terms);
        if (sc_verify->parsed())
            return cmd_verify(n_max, out_path, seed, trials, workers, self_test_fault);
        if (sc_sim->parsed()) return cmd_simulate(spec_path, trials, seed, workers);
        if (sc_oracle->parsed()) return cmd_oracle(spec_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
