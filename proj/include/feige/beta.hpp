#pragma once

// Unnormalized incomplete beta function B(z; a, b) = int_0^z t^{a-1}(1-t)^{b-1} dt
// at integer parameters, evaluated exactly by binomial expansion, and the
// representation h(n,m) = (n-m+1) C(n,m-1) B(1-p; n-m+1, m) at p = m/(n+1).

#include "feige/minimize.hpp"
#include "feige/rational.hpp"

#include <stdexcept>

namespace feige {

struct BetaParams {
    Rational z;
    unsigned a;
    unsigned b;

    BetaParams(Rational z_, unsigned a_, unsigned b_) : z(std::move(z_)), a(a_), b(b_) {
        if (z < 0 || z > 1) throw std::domain_error("BetaParams: z must lie in [0,1]");
        if (a < 1 || b < 1) throw std::invalid_argument("BetaParams: a, b must be >= 1");
    }
};

/// B(z; a, b) = sum_{j=0}^{b-1} C(b-1,j) (-1)^j z^{a+j} / (a+j), exactly.
inline Rational incomplete_beta(const BetaParams& params) {
    const unsigned a = params.a;
    const unsigned b = params.b;
    Rational zpow = rational_pow(params.z, a);
    Rational sum = 0;
    BigInt coef = 1;  // C(b-1, j)
    for (unsigned j = 0; j < b; ++j) {
        Rational term = Rational(coef) * zpow / Rational(a + j);
        sum += (j % 2 == 0) ? term : Rational(-term);
        coef *= b - 1 - j;
        coef /= j + 1;
        zpow *= params.z;
    }
    return sum;
}

inline Rational incomplete_beta(const Rational& z, unsigned a, unsigned b) {
    return incomplete_beta(BetaParams(z, a, b));
}

/// B(1; a, b) = (a-1)!(b-1)!/(a+b-1)!.
inline Rational complete_beta(unsigned a, unsigned b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_beta: a, b must be >= 1");
    return Rational(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1));
}

/// h(n,m) through the beta representation; equals h_value(n,m).value exactly.
inline Rational h_via_beta(unsigned n, unsigned m) {
    if (m < 1 || m > n) throw std::out_of_range("h_via_beta: m must lie in [1, n]");
    const Rational one_minus_p(n + 1 - m, n + 1);
    return Rational(BigInt(n - m + 1) * binomial(n, m - 1)) *
           incomplete_beta(one_minus_p, n - m + 1, m);
}

/// (n-m+1) C(n,m-1) = m C(n,m), the absorption step used to cancel the
/// binomial factors on both sides of the d(m) >= 0 inequality.
inline bool absorption_identity_check(unsigned n, unsigned m) {
    if (m < 1 || m > n) throw std::out_of_range("absorption_identity_check: m in [1, n]");
    return BigInt(n - m + 1) * binomial(n, m - 1) == BigInt(m) * binomial(n, m);
}

}  // namespace feige
