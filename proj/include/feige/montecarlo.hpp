#pragma once

// Seedable Monte Carlo estimation of P(S_n < n+1) for heterogeneous
// two-point instances. Randomness contract (stable across releases):
// splitmix64 (Vigna's fixed-increment SplittableRandom variant), one
// substream per trial keyed by (master seed, trial index). A trial's
// outcome therefore depends only on the instance, the seed, and its own
// index, making results bit-identical for any worker count.

#include "feige/rational.hpp"
#include "feige/report.hpp"
#include "feige/tail.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace feige {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

/// Initial state of substream `index` under `master`: the splitmix64 output
/// function applied to master + (index+1) * golden gamma.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace detail {

/// Uniform integer in [0, bound), exact, by power-of-two masked rejection.
inline std::uint64_t uniform_below_u64(SplitMix64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const int bits = 64 - __builtin_clzll(bound - 1);
    const std::uint64_t mask = bits == 64 ? ~0ull : (1ull << bits) - 1;
    for (;;) {
        const std::uint64_t v = rng.next() & mask;
        if (v < bound) return v;
    }
}

/// Uniform integer in [0, bound) for arbitrary-precision bounds: draws
/// ceil(bits/64) words, masks the top word, rejects out-of-range values.
inline BigInt uniform_below(SplitMix64& rng, const BigInt& bound) {
    if (bound <= 1) return 0;
    if (bound <= BigInt(~0ull))
        return BigInt(uniform_below_u64(rng, bound.convert_to<std::uint64_t>()));
    const BigInt top = bound - 1;
    const unsigned bits = static_cast<unsigned>(msb(top)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask = top_bits == 64 ? ~0ull : (1ull << top_bits) - 1;
    for (;;) {
        BigInt v = 0;
        for (unsigned w = 0; w < words; ++w) {
            std::uint64_t word = rng.next();
            if (w == 0) word &= top_mask;
            v <<= 64;
            v |= word;
        }
        if (v < bound) return v;
    }
}

/// Bernoulli(num/den) with an exact rational parameter.
inline bool bernoulli(SplitMix64& rng, const BigInt& num, const BigInt& den) {
    if (num >= den) return true;
    return uniform_below(rng, den) < num;
}

}  // namespace detail

struct McConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct McEstimate {
    double p_hat = 0;
    double std_error = 0;
    double ci95_low = 0;
    double ci95_high = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t successes = 0;
};

/// Frequency estimate of P(S_n < n+1) with a normal-approximation 95%
/// interval clamped to [0,1]. Identical (instance, seed, trials) give
/// bit-identical results for every worker count.
inline McEstimate simulate(const HeterogeneousInstance& inst, const McConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("simulate: trials must be >= 1");
    if (cfg.workers == 0) throw std::invalid_argument("simulate: workers must be >= 1");
    const std::size_t n = inst.xs.size();

    // Scale the support to integers: x_i = weight_i / L, threshold (n+1)L.
    BigInt scale = 1;
    for (const Rational& x : inst.xs) scale = lcm(scale, denominator(x));
    std::vector<BigInt> weight(n), hit_num(n), hit_den(n);
    for (std::size_t i = 0; i < n; ++i) {
        weight[i] = numerator(inst.xs[i]) * (scale / denominator(inst.xs[i]));
        hit_num[i] = denominator(inst.xs[i]);  // P(X_i = x_i) = 1/x_i
        hit_den[i] = numerator(inst.xs[i]);
    }
    const BigInt threshold = BigInt(n + 1) * scale;

    auto run_range = [&](std::uint64_t first, std::uint64_t last) {
        std::uint64_t successes = 0;
        for (std::uint64_t t = first; t < last; ++t) {
            SplitMix64 rng(substream_seed(cfg.seed, t));
            BigInt sum = 0;
            bool below = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (detail::bernoulli(rng, hit_num[i], hit_den[i])) {
                    sum += weight[i];
                    if (sum >= threshold) {  // nonnegative increments: outcome fixed
                        below = false;
                        break;
                    }
                }
            }
            if (below) ++successes;
        }
        return successes;
    };

    std::uint64_t successes = 0;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(cfg.workers, cfg.trials));
    if (workers <= 1) {
        successes = run_range(0, cfg.trials);
    } else {
        std::vector<std::uint64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = cfg.trials / workers;
        const std::uint64_t rem = cfg.trials % workers;
        std::uint64_t begin = 0;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t end = begin + chunk + (w < rem ? 1 : 0);
            pool.emplace_back(
                [&, w, begin, end] { partial[w] = run_range(begin, end); });
            begin = end;
        }
        for (std::thread& th : pool) th.join();
        for (std::uint64_t s : partial) successes += s;  // order-free merge
    }

    McEstimate est;
    est.trials = cfg.trials;
    est.seed = cfg.seed;
    est.successes = successes;
    est.p_hat = static_cast<double>(successes) / static_cast<double>(cfg.trials);
    est.std_error = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(cfg.trials));
    est.ci95_low = std::max(0.0, est.p_hat - 1.96 * est.std_error);
    est.ci95_high = std::min(1.0, est.p_hat + 1.96 * est.std_error);
    return est;
}

/// Battery instance j: two pinned cases, xs = (2,2) and xs = (20), then
/// pseudo-random draws x_i = c/d with d in [1,8], c in [d, 20d], n in [2,12],
/// from the substream keyed by (seed, j).
inline std::vector<HeterogeneousInstance> mc_battery_instances(unsigned count,
                                                               std::uint64_t seed) {
    std::vector<HeterogeneousInstance> out;
    out.reserve(count);
    for (unsigned j = 0; j < count; ++j) {
        if (j == 0) {
            out.push_back(HeterogeneousInstance({Rational(2), Rational(2)}));
            continue;
        }
        if (j == 1) {
            out.push_back(HeterogeneousInstance({Rational(20)}));
            continue;
        }
        SplitMix64 rng(substream_seed(seed, j));
        const unsigned n = 2 + static_cast<unsigned>(rng.next() % 11);
        std::vector<Rational> xs;
        xs.reserve(n);
        for (unsigned i = 0; i < n; ++i) {
            const std::uint64_t d = 1 + rng.next() % 8;
            const std::uint64_t c = d + rng.next() % (19 * d + 1);
            xs.emplace_back(c, d);
        }
        out.push_back(HeterogeneousInstance(std::move(xs)));
    }
    return out;
}

/// Compares simulate (1e5 trials) against the exact enumerator on `count`
/// battery instances; flags estimates beyond 4 standard errors. Whether each
/// exact value clears 1/e (via the e bracket) is recorded in parameters as
/// an observation, not asserted.
inline VerificationReport mc_vs_exact_battery(unsigned count, std::uint64_t seed,
                                              std::uint64_t trials = 100000,
                                              unsigned workers = 1) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "mc_vs_exact";
    report.parameters["count"] = std::to_string(count);
    report.parameters["seed"] = std::to_string(seed);
    report.parameters["trials"] = std::to_string(trials);
    report.parameters["random_n_range"] = "[2,12]";

    const EBracket e = e_bracket(25);
    // v >= 1/lower(e) certifies v > 1/e since lower(e) < e.
    const Rational one_over_e_upper(denominator(e.lower), numerator(e.lower));

    const auto instances = mc_battery_instances(count, seed);
    for (unsigned j = 0; j < instances.size(); ++j) {
        const HeterogeneousInstance& inst = instances[j];
        const Rational exact = exact_heterogeneous(inst);
        McConfig cfg;
        cfg.trials = trials;
        cfg.seed = substream_seed(seed, (1ull << 32) + j);
        cfg.workers = workers;
        const McEstimate est = simulate(inst, cfg);

        const double exact_f = to_double(exact);
        const double dev = std::abs(est.p_hat - exact_f);
        // std_error 0 (p_hat 0 or 1) passes only on exact agreement.
        const bool ok = dev <= 4.0 * est.std_error ||
                        Rational(est.successes, est.trials) == exact;
        report.check(CheckId::mc_deviation, static_cast<long long>(inst.xs.size()), j,
                     Rational(est.successes, est.trials), exact, ok);
        report.parameters["instance_" + std::to_string(j)] =
            "exact=" + to_fraction_string(exact) +
            ";ge_1_over_e=" + (exact >= one_over_e_upper ? "true" : "false");
    }
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return report;
}

}  // namespace feige
