#pragma once

// Exact integers and rationals backed by GMP.
//
// mpq_class keeps every arithmetic result in lowest terms with a positive
// denominator; values built from raw numerator/denominator pairs go through
// make_rational() so that invariant holds everywhere.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerop {

using Integer = mpz_class;
using Rational = mpq_class;

/// Error raised when an exact computation cannot proceed (bad input to a
/// mathematical operation, inexact division, ...).
struct math_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Error raised when a proven structural fact fails to hold; always signals a
/// bug in the arithmetic rather than a property of the input.
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw math_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned long e) {
    return make_rational(pow(base.get_num(), e), pow(base.get_den(), e));
}

/// Product of the odd integers 1·3·…·k (k odd, k ≥ -1; (-1)!! = 1).
inline Integer double_factorial(long k) {
    if (k < -1) throw math_error("double factorial of a negative argument below -1");
    Integer r = 1;
    for (long j = k; j > 1; j -= 2) r *= j;
    return r;
}

/// floor(log2 |r|) style magnitude, exact for powers of two; r must be nonzero.
inline long ilog2(const Rational& r) {
    long en = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2));
    long ed = static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
    return en - ed;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace detail

/// Parses "p/q", an integer, or a decimal literal such as "-0.74" or
/// "1.5e-3" into the exact rational it denotes. Returns nullopt on malformed
/// input.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (s.empty()) return std::nullopt;

    bool negative = false;
    std::string body = s;
    if (body[0] == '+' || body[0] == '-') {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (body.empty()) return std::nullopt;

    if (auto slash = body.find('/'); slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!detail::all_digits(num)) return std::nullopt;
        if (!den.empty() && (den[0] == '+' || den[0] == '-')) {
            if (den[0] == '-') negative = !negative;
            den = den.substr(1);
        }
        if (!detail::all_digits(den)) return std::nullopt;
        Integer d(den, 10);
        if (d == 0) return std::nullopt;
        Rational r = make_rational(Integer(num, 10), d);
        return negative ? Rational(-r) : r;
    }

    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
        std::string exp = body.substr(e + 1);
        body = body.substr(0, e);
        bool eneg = false;
        if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
            eneg = exp[0] == '-';
            exp = exp.substr(1);
        }
        if (!detail::all_digits(exp) || exp.size() > 6) return std::nullopt;
        exponent = std::stol(exp);
        if (eneg) exponent = -exponent;
    }

    std::string int_part = body;
    std::string frac_part;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) return std::nullopt;
    if (!int_part.empty() && !detail::all_digits(int_part)) return std::nullopt;
    if (!frac_part.empty() && !detail::all_digits(frac_part)) return std::nullopt;

    Integer digits(int_part + frac_part, 10);
    exponent -= static_cast<long>(frac_part.size());
    Rational r;
    if (exponent >= 0)
        r = Rational(digits * pow(Integer(10), static_cast<unsigned long>(exponent)));
    else
        r = make_rational(digits, pow(Integer(10), static_cast<unsigned long>(-exponent)));
    return negative ? Rational(-r) : r;
}

inline Rational parse_rational(std::string_view text) {
    auto r = try_parse_rational(text);
    if (!r) throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    return *r;
}

/// Rounds r to `digits` significant decimal digits (ties away from zero) and
/// returns (mantissa, exponent) with r ≈ mantissa · 10^(exponent - digits + 1)
/// and 10^(digits-1) ≤ |mantissa| < 10^digits. r must be nonzero.
inline std::pair<Integer, long> round_significant(const Rational& r, int digits) {
    if (r == 0) throw math_error("round_significant of zero");
    if (digits < 1) throw std::invalid_argument("digits must be positive");
    Rational a = abs(r);
    // estimate the decimal exponent, then correct
    long e = static_cast<long>(static_cast<double>(ilog2(a)) * 0.30102999566398120) - 1;
    auto ten_pow = [](long k) -> Rational {
        if (k >= 0) return Rational(pow(Integer(10), static_cast<unsigned long>(k)));
        return make_rational(Integer(1), pow(Integer(10), static_cast<unsigned long>(-k)));
    };
    while (a >= ten_pow(e + 1)) ++e;
    while (a < ten_pow(e)) --e;
    for (;;) {
        Rational scaled = a * ten_pow(digits - 1 - e);
        Integer q = scaled.get_num() / scaled.get_den();
        Rational frac = scaled - Rational(q);
        if (frac * 2 >= 1) q += 1;
        if (q >= pow(Integer(10), static_cast<unsigned long>(digits))) {
            ++e;
            continue;
        }
        if (r < 0) q = -q;
        return {q, e};
    }
}

/// Decimal rendering with `digits` significant digits. Plain notation is used
/// while the decimal exponent stays below `digits`; otherwise scientific
/// ("1.04858e+12").
inline std::string to_decimal(const Rational& r, int digits) {
    if (r == 0) return "0";
    auto [mant, e] = round_significant(r, digits);
    std::string sgn = mant < 0 ? "-" : "";
    std::string m = Integer(abs(mant)).get_str();
    if (e >= digits || e < -6) {
        std::string out = sgn + m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += (e < 0 ? "e-" : "e+") + std::to_string(e < 0 ? -e : e);
        return out;
    }
    if (e >= 0) {
        std::string int_part = m.substr(0, static_cast<std::size_t>(e + 1));
        std::string frac = m.substr(static_cast<std::size_t>(e + 1));
        return sgn + int_part + (frac.empty() ? "" : "." + frac);
    }
    return sgn + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + m;
}

}  // namespace eulerop
