#pragma once

// Global minimization of f over (0,1). Within each breakpoint interval f is
// strictly decreasing, so the minimum over (0,1) is attained at a breakpoint
// p = m/(n+1); scanning the exact breakpoint values h(n,m) and certifying
// the floor (n/(n+1))^n against a rational lower bound on e settles it.

#include "feige/rational.hpp"
#include "feige/report.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>
#include <vector>

namespace feige {

// f at the breakpoint p = m/(n+1): value = H(n,m)/(n+1)^n with the
// unnormalized integer H(n,m) = sum_{k=0}^{m-1} C(n,k) m^k (n+1-m)^{n-k}.
struct BreakpointValue {
    unsigned n;
    unsigned m;
    Rational p_star;      // m/(n+1)
    Rational value;       // h(n,m)
    BigInt unnormalized;  // H(n,m)
};

/// H(n,m), the breakpoint value scaled by (n+1)^n.
inline BigInt h_unnormalized(unsigned n, unsigned m) {
    if (m < 1 || m > n) throw std::out_of_range("h_unnormalized: m must lie in [1, n]");
    const BigInt r = n + 1 - m;
    BigInt sum = 0;
    BigInt coef = 1;                 // C(n,k)
    BigInt mpow = 1;                 // m^k
    BigInt rpow = int_pow(r, n);     // (n+1-m)^{n-k}
    for (unsigned k = 0; k < m; ++k) {
        sum += coef * mpow * rpow;
        coef *= n - k;
        coef /= k + 1;
        mpow *= m;
        rpow /= r;
    }
    return sum;
}

inline BreakpointValue h_value(unsigned n, unsigned m) {
    BigInt H = h_unnormalized(n, m);
    return BreakpointValue{n, m, Rational(m, n + 1), Rational(H, int_pow(n + 1, n)), H};
}

/// H(n,m) for m = 1..n (index m-1).
inline std::vector<BigInt> h_table(unsigned n) {
    std::vector<BigInt> table;
    table.reserve(n);
    for (unsigned m = 1; m <= n; ++m) table.push_back(h_unnormalized(n, m));
    return table;
}

/// The floor h(n,1) = (n/(n+1))^n.
inline Rational h_floor(unsigned n) {
    if (n == 0) throw std::invalid_argument("h_floor: n must be >= 1");
    return Rational(int_pow(n, n), int_pow(n + 1, n));
}

/// True certifies h_floor(n) > 1/e exactly, via (1+1/n)^n < lower(e).
/// False is inconclusive: the caller may retry with more terms.
inline bool certify_above_1_over_e(unsigned n, unsigned terms) {
    if (n == 0) throw std::invalid_argument("certify_above_1_over_e: n must be >= 1");
    const EBracket e = e_bracket(terms);
    // (n+1)^n / n^n < lower  <=>  (n+1)^n * den(lower) < num(lower) * n^n
    return int_pow(n + 1, n) * denominator(e.lower) < numerator(e.lower) * int_pow(n, n);
}

struct MinResult {
    unsigned n;
    Rational argmin_p;
    Rational min_value;
    bool certified_above_1_over_e;
    unsigned e_terms_used;
};

/// Scans the breakpoints m = 1..n; smallest witnessing m wins ties.
inline MinResult global_min(unsigned n, unsigned e_terms = 25) {
    if (n == 0) throw std::invalid_argument("global_min: n must be >= 1");
    std::vector<BigInt> H = h_table(n);
    unsigned best_m = 1;
    for (unsigned m = 2; m <= n; ++m)
        if (H[m - 1] < H[best_m - 1]) best_m = m;
    const BigInt scale = int_pow(n + 1, n);
    return MinResult{n, Rational(best_m, n + 1), Rational(H[best_m - 1], scale),
                     certify_above_1_over_e(n, e_terms), e_terms};
}

/// h(n,1) > h(n+1,1) for every n in [1, n_max), by the integer
/// cross-multiplication n^n (n+2)^{n+1} > (n+1)^{2n+1}.
inline VerificationReport floor_monotone_check(unsigned n_max) {
    if (n_max < 2) throw std::invalid_argument("floor_monotone_check: n_max must be >= 2");
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.suite = "floor_monotone";
    report.parameters["n_max"] = std::to_string(n_max);
    for (unsigned n = 1; n + 1 <= n_max; ++n) {
        BigInt lhs = int_pow(n, n) * int_pow(n + 2, n + 1);
        BigInt rhs = int_pow(n + 1, 2 * n + 1);
        report.check(CheckId::floor_monotone, n, n + 1, Rational(lhs), Rational(rhs),
                     lhs > rhs);
    }
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
    return report;
}

}  // namespace feige
