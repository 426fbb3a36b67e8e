#pragma once

// Machine checks for every lemma and inequality chain behind the breakpoint
// floor: the difference d(m) = h(n,m+1) - h(n,m), its symmetry d(m) = d(n-m),
// the w(x) = (1+1/x)^x ordering, the argmax of g(t) = t^{n-m}(1-t)^{m-1} on
// [1-q, 1-p], the rectangle bound on the beta difference, the two case
// inequalities with their regimes, and the decreasing auxiliary sequence b(m).
//
// Every comparison is an exact integer or rational comparison; cross-checks
// against direct h evaluation keep the lemma path and the direct path
// independent of each other.

#include "feige/beta.hpp"
#include "feige/minimize.hpp"
#include "feige/rational.hpp"
#include "feige/report.hpp"

#include <chrono>
#include <compare>
#include <stdexcept>
#include <vector>

namespace feige {

/// d(m) = h(n, m+1) - h(n, m), exact; nonnegative for all 1 <= m <= n-1.
inline Rational d_value(unsigned n, unsigned m) {
    if (m < 1 || m + 1 > n) throw std::out_of_range("d_value: m must lie in [1, n-1]");
    return Rational(h_unnormalized(n, m + 1) - h_unnormalized(n, m), int_pow(n + 1, n));
}

/// w(a) = (1+1/a)^a, the strictly increasing sequence converging to e.
inline Rational w_value(unsigned a) {
    if (a == 0) throw std::invalid_argument("w_value: a must be >= 1");
    return Rational(int_pow(a + 1, a), int_pow(a, a));
}

/// Exact three-way comparison of w(a) vs w(b) by integer cross-multiplication.
inline std::strong_ordering w_compare(unsigned a, unsigned b) {
    if (a == 0 || b == 0) throw std::invalid_argument("w_compare: arguments must be >= 1");
    const BigInt lhs = int_pow(a + 1, a) * int_pow(b, b);
    const BigInt rhs = int_pow(a, a) * int_pow(b + 1, b);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// b(m) = m (m-1)^{m-1} / (m+1)^m with 0^0 = 1, so b(1) = 1/2.
inline Rational b_value(unsigned m) {
    if (m == 0) throw std::invalid_argument("b_value: m must be >= 1");
    const BigInt num = BigInt(m) * (m == 1 ? BigInt(1) : int_pow(m - 1, m - 1));
    return Rational(num, int_pow(m + 1, m));
}

/// g(t) = t^{n-m} (1-t)^{m-1}.
inline Rational g_eval(unsigned n, unsigned m, const Rational& t) {
    return rational_pow(t, n - m) * rational_pow(1 - t, m - 1);
}

/// Maximizer of g on [1-q, 1-p]: the stationary point t* = (n-m)/(n-1)
/// clamped into the interval. g is unimodal with peak at t*, so the clamp
/// is exact; the batteries re-verify by grid dominance.
inline Rational g_argmax(unsigned n, unsigned m) {
    if (n < 2 || m < 1 || m + 1 > n)
        throw std::out_of_range("g_argmax: needs n >= 2 and m in [1, n-1]");
    const Rational left(n - m, n + 1);       // 1 - q
    const Rational right(n + 1 - m, n + 1);  // 1 - p
    const Rational stationary(n - m, n - 1);
    if (stationary <= left) return left;
    if (stationary >= right) return right;
    return stationary;
}

/// q^m (1-q)^{n-m} >= m [B(1-p; n-m+1, m) - B(1-q; n-m+1, m)]: the area of
/// the bounding rectangle dominates the beta difference, exactly.
inline LemmaWitness rectangle_bound_check(unsigned n, unsigned m) {
    if (m < 1 || m + 1 > n)
        throw std::out_of_range("rectangle_bound_check: m must lie in [1, n-1]");
    const Rational q(m + 1, n + 1);
    const Rational lhs = rational_pow(q, m) * rational_pow(1 - q, n - m);
    const Rational rhs = Rational(m) * (incomplete_beta(Rational(n + 1 - m, n + 1), n - m + 1, m) -
                                        incomplete_beta(Rational(n - m, n + 1), n - m + 1, m));
    return LemmaWitness{CheckId::rectangle_bound, n, m, lhs, rhs, lhs >= rhs};
}

/// Case 1 inequality (m+1)^m (n-m)^{n-m} >= (n+1-m)^{n-m} m^m.
/// Equivalent to w(m) >= w(n-m); expected to hold exactly when m >= n-m.
inline LemmaWitness case1_check(unsigned n, unsigned m) {
    if (m < 1 || m + 1 > n) throw std::out_of_range("case1_check: m must lie in [1, n-1]");
    const BigInt lhs = int_pow(m + 1, m) * int_pow(n - m, n - m);
    const BigInt rhs = int_pow(n + 1 - m, n - m) * int_pow(m, m);
    return LemmaWitness{CheckId::case1_regime, n, m, Rational(lhs), Rational(rhs), lhs >= rhs};
}

/// Case 2 inequality (m+1)^m (n-1)^{n-1} >= m (m-1)^{m-1} (n+1)^{n-1},
/// with 0^0 = 1 at m = 1. The proof needs it for m >= (n+1)/2, where the
/// b(m) decrease reduces it to the boundary n = 2m-1.
inline LemmaWitness case2_check(unsigned n, unsigned m) {
    if (m < 1 || m + 1 > n) throw std::out_of_range("case2_check: m must lie in [1, n-1]");
    const BigInt lhs = int_pow(m + 1, m) * int_pow(n - 1, n - 1);
    const BigInt rhs =
        BigInt(m) * (m == 1 ? BigInt(1) : int_pow(m - 1, m - 1)) * int_pow(n + 1, n - 1);
    return LemmaWitness{CheckId::case2_regime, n, m, Rational(lhs), Rational(rhs), lhs >= rhs};
}

/// True when (n, m) lies in the regime case 2 covers: m >= (n+1)/2.
inline bool in_case2_regime(unsigned n, unsigned m) { return 2 * m >= n + 1; }

/// Boundary n = 2m-1 of case 2, reduced: (m+1)^m (m-1)^{m-1} >= m^{2m-1}
/// (equivalently w(m) >= w(m-1)).
inline LemmaWitness case_boundary_chain_check(unsigned m) {
    if (m < 2) throw std::invalid_argument("case_boundary_chain_check: m must be >= 2");
    const BigInt lhs = int_pow(m + 1, m) * int_pow(m - 1, m - 1);
    const BigInt rhs = int_pow(m, 2 * m - 1);
    return LemmaWitness{CheckId::case_boundary_chain, 2 * static_cast<long long>(m) - 1, m,
                        Rational(lhs), Rational(rhs), lhs >= rhs};
}

/// d(m) = d(n-m) for all m, plus the unnormalized complement identity
/// H(n,m) + H(n, n+1-m) = (n+1)^n behind it.
inline VerificationReport symmetry_check(unsigned n) {
    if (n < 2) throw std::invalid_argument("symmetry_check: n must be >= 2");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "d_symmetry";
    report.parameters["n"] = std::to_string(n);
    const std::vector<BigInt> H = h_table(n);
    const BigInt scale = int_pow(n + 1, n);
    for (unsigned m = 1; m + 1 <= n; ++m) {
        const BigInt d_m = H[m] - H[m - 1];
        const BigInt d_nm = H[n - m] - H[n - m - 1];
        report.check(CheckId::d_symmetry, n, m, Rational(d_m, scale), Rational(d_nm, scale),
                     d_m == d_nm);
    }
    for (unsigned m = 1; m <= n; ++m) {
        const BigInt lhs = H[m - 1] + H[n + 1 - m - 1];
        report.check(CheckId::complement_identity, n, m, Rational(lhs), Rational(scale),
                     lhs == scale);
    }
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return report;
}

/// b is strictly decreasing from m = 2 on, and b(m)/b(m+1) = w(m+1)/w(m-1).
inline VerificationReport b_monotone_check(unsigned m_max) {
    if (m_max < 3) throw std::invalid_argument("b_monotone_check: m_max must be >= 3");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "b_monotone";
    report.parameters["m_max"] = std::to_string(m_max);
    Rational prev = b_value(2);
    for (unsigned m = 2; m < m_max; ++m) {
        const Rational next = b_value(m + 1);
        report.check(CheckId::b_monotone, m, m + 1, prev, next, prev > next);
        const Rational ratio = prev / next;
        const Rational w_ratio = w_value(m + 1) / w_value(m - 1);
        report.check(CheckId::b_ratio_identity, m, m + 1, ratio, w_ratio, ratio == w_ratio);
        prev = next;
    }
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return report;
}

}  // namespace feige
