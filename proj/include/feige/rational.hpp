#pragma once

// Exact arithmetic layer: arbitrary-precision integers and rationals,
// binomial coefficients, integer/rational powers, and a certified rational
// bracket around the constant e. Everything here is exact; doubles appear
// only through to_double(), which rounds a rational to the nearest double.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace feige {

using BigInt = boost::multiprecision::cpp_int;

// Canonical-form rational: denominator > 0, gcd(|num|, den) = 1.
// cpp_rational maintains both invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt acc = 1;
    BigInt b = base;
    unsigned long k = e;
    while (k != 0) {
        if (k & 1) acc *= b;
        k >>= 1;
        if (k != 0) b *= b;
    }
    return acc;
}

/// C(n, k). Returns 0 for k < 0 or k > n.
inline BigInt binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return 0;
    unsigned kk = static_cast<unsigned>(k);
    if (kk > n - kk) kk = n - kk;
    BigInt c = 1;
    for (unsigned i = 1; i <= kk; ++i) {
        c *= n - kk + i;
        c /= i;  // exact at every step: c is C(n-kk+i, i)
    }
    return c;
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

/// r^e with the convention 0^0 = 1.
inline Rational rational_pow(const Rational& r, unsigned long e) {
    if (e == 0) return Rational(1);
    return Rational(int_pow(numerator(r), e), int_pow(denominator(r), e));
}

// Truncated-Taylor bracket around e: lower = sum_{k=0}^{terms} 1/k!,
// upper = lower + 1/(terms! * terms). The true constant lies strictly
// between the two, and brackets nest as terms grows.
struct EBracket {
    Rational lower;
    Rational upper;
    unsigned terms;
};

inline EBracket e_bracket(unsigned terms) {
    if (terms < 2) throw std::invalid_argument("e_bracket: terms must be >= 2");
    // sum_{k=0}^{T} T!/k! accumulated as an integer, then divided by T! once.
    BigInt fact = factorial(terms);
    BigInt sum = 0;
    BigInt term = 1;  // T!/T!
    for (unsigned k = terms;; --k) {
        sum += term;
        if (k == 0) break;
        term *= k;  // T!/(k-1)! = T!/k! * k
    }
    Rational lower(sum, fact);
    Rational upper(sum * terms + 1, fact * terms);
    return EBracket{lower, upper, terms};
}

/// ceil(r) for an exact rational.
inline BigInt rational_ceil(const Rational& r) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    BigInt q = num / den;      // truncates toward zero
    if (num > 0 && q * den != num) ++q;
    return q;
}

/// Nearest double to an exact rational (round half to even).
inline double to_double(const Rational& r) {
    if (r == 0) return 0.0;
    const bool neg = r < 0;
    BigInt num = abs(numerator(r));
    BigInt den = denominator(r);

    const long nbits = static_cast<long>(msb(num)) + 1;
    const long dbits = static_cast<long>(msb(den)) + 1;
    // Shift so the integer quotient carries at least 53 significant bits.
    long shift = 53 - (nbits - dbits);
    BigInt n2 = shift >= 0 ? BigInt(num << shift) : num;
    BigInt d2 = shift >= 0 ? den : BigInt(den << -shift);
    BigInt q, rem;
    divide_qr(n2, d2, q, rem);
    if (msb(q) >= 53) {  // 54 significant bits; drop one
        --shift;
        n2 = shift >= 0 ? BigInt(num << shift) : num;
        d2 = shift >= 0 ? den : BigInt(den << -shift);
        divide_qr(n2, d2, q, rem);
    }
    // q in [2^52, 2^53); round on the remainder, ties to even.
    const BigInt rem2 = rem << 1;
    if (rem2 > d2 || (rem2 == d2 && bit_test(q, 0))) ++q;
    double mant = static_cast<double>(q.convert_to<std::uint64_t>());
    if (shift > std::numeric_limits<int>::max()) return neg ? -0.0 : 0.0;
    if (shift < std::numeric_limits<int>::min())
        return neg ? -std::numeric_limits<double>::infinity()
                   : std::numeric_limits<double>::infinity();
    double v = std::ldexp(mant, static_cast<int>(-shift));
    return neg ? -v : v;
}

/// Parses "3", "-5/2" or "2.5" (finite decimal) into an exact rational.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] {
        throw std::invalid_argument("parse_rational: invalid rational literal '" +
                                    std::string(s) + "'");
    };
    // trim surrounding whitespace
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) fail();

    std::string_view body = s;
    bool neg = false;
    if (body.front() == '+' || body.front() == '-') {
        neg = body.front() == '-';
        body.remove_prefix(1);
        if (body.empty()) fail();
    }
    // decimal digit accumulation; leading zeros stay decimal (the cpp_int
    // string constructor would read them as octal)
    auto digits = [&](std::string_view t) {
        if (t.empty()) fail();
        BigInt v = 0;
        for (char ch : t) {
            if (ch < '0' || ch > '9') fail();
            v = v * 10 + (ch - '0');
        }
        return v;
    };

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        const BigInt den = digits(body.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        value = Rational(digits(body.substr(0, slash)), den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        const std::string_view fs = body.substr(dot + 1);
        value = Rational(digits(body.substr(0, dot)) * int_pow(10, fs.size()) + digits(fs),
                         int_pow(10, fs.size()));
    } else {
        value = Rational(digits(body));
    }
    return neg ? Rational(-value) : value;
}

/// "num/den" rendering, always with an explicit denominator.
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace feige
