#pragma once

// The sawtooth probability f(p) = P(S_n < n+1) for n i.i.d. two-point
// variables with mass p at 1/p and 1-p at 0, its partial binomial sums,
// derivative, breakpoints, and two independent brute-force oracles.

#include "feige/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace feige {

struct IidTwoPointInstance {
    unsigned n;
    Rational p;  // in (0,1); the support point is x = 1/p

    IidTwoPointInstance(unsigned n_, Rational p_) : n(n_), p(std::move(p_)) {
        if (n == 0) throw std::invalid_argument("IidTwoPointInstance: n must be >= 1");
        if (p <= 0 || p >= 1)
            throw std::domain_error("IidTwoPointInstance: p must lie in (0,1)");
    }

    Rational support_point() const { return Rational(denominator(p), numerator(p)); }
};

struct TailSpec {
    unsigned n;
    unsigned m;  // summation cutoff, 0 <= m <= n

    TailSpec(unsigned n_, unsigned m_) : n(n_), m(m_) {
        if (n == 0) throw std::invalid_argument("TailSpec: n must be >= 1");
        if (m > n) throw std::out_of_range("TailSpec: m must lie in [0, n]");
    }
};

// Independent two-point laws with support points xs[i] >= 1 (mean 1 each);
// xs[i] = 1 is the deterministic unit mass.
struct HeterogeneousInstance {
    std::vector<Rational> xs;

    explicit HeterogeneousInstance(std::vector<Rational> xs_) : xs(std::move(xs_)) {
        if (xs.empty())
            throw std::invalid_argument("HeterogeneousInstance: needs at least one variable");
        for (const Rational& x : xs)
            if (x < 1)
                throw std::domain_error("HeterogeneousInstance: support points must be >= 1");
    }
};

// 2^n subset enumeration cap for exact_heterogeneous.
inline constexpr unsigned kEnumerationCap = 25;

/// Largest summation index of f(p): ceil((n+1)p) - 1, always in [0, n].
inline unsigned tail_cutoff(unsigned n, const Rational& p) {
    if (p <= 0 || p >= 1) throw std::domain_error("tail_cutoff: p must lie in (0,1)");
    BigInt c = rational_ceil(Rational(p * (n + 1))) - 1;
    return c.convert_to<unsigned>();
}

/// F_{n,m}(p) = sum_{k=0}^{m} C(n,k) p^k (1-p)^{n-k}, exactly.
inline Rational partial_tail(const TailSpec& spec, const Rational& p) {
    if (p <= 0 || p >= 1) throw std::domain_error("partial_tail: p must lie in (0,1)");
    const BigInt a = numerator(p);
    const BigInt b = denominator(p);
    const BigInt r = b - a;
    // Everything over the common denominator b^n: one big-integer sum,
    // one rational reduction at the end.
    std::vector<BigInt> rpow(spec.n + 1);
    rpow[0] = 1;
    for (unsigned i = 1; i <= spec.n; ++i) rpow[i] = rpow[i - 1] * r;
    BigInt sum = 0;
    BigInt coef = 1;  // C(n,k)
    BigInt apow = 1;  // a^k
    for (unsigned k = 0; k <= spec.m; ++k) {
        sum += coef * apow * rpow[spec.n - k];
        coef *= spec.n - k;
        coef /= k + 1;
        apow *= a;
    }
    return Rational(sum, int_pow(b, spec.n));
}

/// f(p) = P(S_n < n+1) via the ceiling cutoff.
inline Rational f_of_p(const IidTwoPointInstance& inst) {
    return partial_tail(TailSpec(inst.n, tail_cutoff(inst.n, inst.p)), inst.p);
}

inline Rational f_of_p(unsigned n, const Rational& p) {
    return f_of_p(IidTwoPointInstance(n, p));
}

/// d/dp F_{n,m}(p) as the term-wise sum of p^k(1-p)^{n-k} derivatives.
inline Rational tail_derivative(const TailSpec& spec, const Rational& p) {
    if (p <= 0 || p >= 1) throw std::domain_error("tail_derivative: p must lie in (0,1)");
    const unsigned n = spec.n;
    const BigInt a = numerator(p);
    const BigInt b = denominator(p);
    const BigInt r = b - a;
    // Term k contributes k a^{k-1} r^{n-k} - (n-k) a^k r^{n-k-1} over b^{n-1}.
    std::vector<BigInt> rpow(n + 1);
    rpow[0] = 1;
    for (unsigned i = 1; i <= n; ++i) rpow[i] = rpow[i - 1] * r;
    std::vector<BigInt> apow(spec.m + 1);
    apow[0] = 1;
    for (unsigned i = 1; i <= spec.m; ++i) apow[i] = apow[i - 1] * a;
    BigInt sum = 0;
    BigInt coef = 1;
    for (unsigned k = 0; k <= spec.m; ++k) {
        if (k > 0) sum += coef * k * apow[k - 1] * rpow[n - k];
        if (k < n) sum -= coef * (n - k) * apow[k] * rpow[n - k - 1];
        coef *= n - k;
        coef /= k + 1;
    }
    return Rational(sum, int_pow(b, n - 1));
}

/// The telescoped closed form -n C(n-1,m) p^m (1-p)^{n-1-m}; zero at m = n.
inline Rational tail_derivative_closed_form(const TailSpec& spec, const Rational& p) {
    if (spec.m == spec.n) return Rational(0);
    Rational v = rational_pow(p, spec.m) * rational_pow(1 - p, spec.n - 1 - spec.m);
    return Rational(-BigInt(spec.n) * binomial(spec.n - 1, spec.m)) * v;
}

/// Discontinuity locations of f on (0,1): m/(n+1) for m = 1..n.
inline std::vector<Rational> breakpoints(unsigned n) {
    std::vector<Rational> out;
    out.reserve(n);
    for (unsigned m = 1; m <= n; ++m) out.emplace_back(m, n + 1);
    return out;
}

/// Oracle for f_of_p: sums C(n,k) p^k (1-p)^{n-k} over k with k/p < n+1,
/// testing the event definition directly instead of the ceiling rewrite.
inline Rational brute_force_iid(const IidTwoPointInstance& inst) {
    const unsigned n = inst.n;
    const BigInt a = numerator(inst.p);
    const BigInt b = denominator(inst.p);
    const BigInt r = b - a;
    std::vector<BigInt> rpow(n + 1);
    rpow[0] = 1;
    for (unsigned i = 1; i <= n; ++i) rpow[i] = rpow[i - 1] * r;
    BigInt sum = 0;
    BigInt coef = 1;
    BigInt apow = 1;
    for (unsigned k = 0; k <= n; ++k) {
        // k successes give S_n = k/p; event is k/p < n+1, i.e. k*b < (n+1)*a.
        if (BigInt(k) * b < BigInt(n + 1) * a) sum += coef * apow * rpow[n - k];
        coef *= n - k;
        coef /= k + 1;
        apow *= a;
    }
    return Rational(sum, int_pow(b, n));
}

namespace detail {

struct HetEnum {
    // per-variable scaled weights and probability factors, descending by weight
    std::vector<BigInt> weight;     // x_i scaled by L = lcm of denominators
    std::vector<BigInt> hit;        // numerator of P(X_i = x_i) over c_i
    std::vector<BigInt> miss;       // numerator of P(X_i = 0) over c_i
    std::vector<BigInt> suffix_sum;     // max attainable sum from index i on
    std::vector<BigInt> suffix_weight;  // product of c_j for j >= i
    BigInt threshold;

    BigInt total = 0;

    void walk(std::size_t i, const BigInt& sum, const BigInt& prob_num) {
        if (sum >= threshold) return;  // weights are nonnegative; no completion passes
        if (sum + suffix_sum[i] < threshold) {  // every completion passes
            total += prob_num * suffix_weight[i];
            return;
        }
        // suffix nonempty here: the two guards are decisive once i == size
        walk(i + 1, BigInt(sum + weight[i]), BigInt(prob_num * hit[i]));
        if (miss[i] != 0) walk(i + 1, sum, BigInt(prob_num * miss[i]));
    }
};

}  // namespace detail

/// Exact P(sum X_i < n+1) by subset enumeration (caps at kEnumerationCap).
inline Rational exact_heterogeneous(const HeterogeneousInstance& inst) {
    const std::size_t n = inst.xs.size();
    if (n > kEnumerationCap)
        throw std::length_error("exact_heterogeneous: instance size " + std::to_string(n) +
                                " exceeds the 2^n enumeration cap of " +
                                std::to_string(kEnumerationCap));
    BigInt lcm_den = 1;
    for (const Rational& x : inst.xs) lcm_den = lcm(lcm_den, denominator(x));

    detail::HetEnum e;
    std::vector<Rational> xs = inst.xs;
    std::sort(xs.begin(), xs.end(), std::greater<>());  // big weights first: prunes earlier
    BigInt denom = 1;
    for (const Rational& x : xs) {
        const BigInt c = numerator(x);
        const BigInt d = denominator(x);
        e.weight.push_back(c * (lcm_den / d));
        e.hit.push_back(d);
        e.miss.push_back(c - d);
        denom *= c;
    }
    e.threshold = BigInt(n + 1) * lcm_den;
    e.suffix_sum.assign(n + 1, 0);
    e.suffix_weight.assign(n + 1, 1);
    for (std::size_t i = n; i-- > 0;) {
        e.suffix_sum[i] = e.suffix_sum[i + 1] + e.weight[i];
        e.suffix_weight[i] = e.suffix_weight[i + 1] * (e.hit[i] + e.miss[i]);
    }
    e.walk(0, 0, 1);
    return Rational(e.total, denom);
}

}  // namespace feige
