#pragma once

// Power-series solutions y(x) = Σ_k a_k x^{α + 2nk} of
//     (-1)^n y^{(2n)} + c x^{-2n} y = μ y
// at the regular singular point x = 0.
//
// Substituting the series and using τ x^s = (-1)^n D(s; c) x^{s-2n} gives the
// one-step recurrence a_k = (-1)^n μ a_{k-1} / D(α + 2nk; c), a_0 = 1. The
// truncated sum then satisfies τy - μy = -μ a_K x^{α+2nK} exactly.

#include "rootcount.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerop {

inline constexpr int kDefaultTruncation = 32;

struct SeriesSolution {
    int n = 0;
    Rational c;
    Rational mu;
    Complex alpha;
    std::vector<Complex> a;  // a_0 = 1, ..., a_K
    precision_t precision = kDefaultPrecision;

    int truncation() const { return static_cast<int>(a.size()) - 1; }
};

namespace detail {

/// D(z; c) = z(z-1)···(z-2n+1) + (-1)^n c at a complex point.
inline Complex indicial_at(int n, const Rational& c, const Complex& z) {
    const precision_t prec = z.precision();
    Complex p(Rational(1), prec);
    for (int j = 0; j < 2 * n; ++j) p *= z - Complex(Rational(j), prec);
    return p + Complex(n % 2 == 0 ? c : Rational(-c), prec);
}

/// Σ_j |coefficient_j| |z|^j of D(·; c); the scale against which a computed
/// D(z; c) is judged to vanish.
inline BigFloat indicial_scale(int n, const Rational& c, const Complex& z) {
    const precision_t prec = z.precision();
    BigFloat m = abs(z);
    const BigFloat one(1L, prec);
    BigFloat s = one;
    for (int j = 0; j < 2 * n; ++j) s *= m + BigFloat(static_cast<long>(j), prec);
    return s + BigFloat(abs(c), prec) + one;
}

inline std::vector<Complex> series_coefficients(int n, const Rational& c, const Rational& mu, const Complex& alpha,
                                                int K, precision_t prec) {
    const Complex al = alpha.with_precision(prec);
    const Complex factor(n % 2 == 0 ? mu : Rational(-mu), prec);
    const BigFloat tol = bf::ldexp(-static_cast<long>(prec / 2), prec);
    std::vector<Complex> a;
    a.reserve(static_cast<std::size_t>(K) + 1);
    a.emplace_back(Rational(1), prec);
    for (int k = 1; k <= K; ++k) {
        Complex z = al + Complex(Rational(2 * n * k), prec);
        Complex den = indicial_at(n, c, z);
        if (abs(den) < tol * indicial_scale(n, c, z))
            throw math_error("exceptional/resonant case: D(alpha + " + std::to_string(2 * n * k) +
                             "; c) vanishes, logarithmic solutions are not constructed");
        a.push_back(factor * a.back() / den);
    }
    return a;
}

/// log2 of a positive BigFloat, as a double.
inline double log2_of(const BigFloat& v) {
    if (v.is_zero()) return -1e300;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, v.get(), MPFR_RNDN);
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

}  // namespace detail

/// Coefficients a_0..a_K for the exponent α (a root of D(·; c)).
inline SeriesSolution series_solution(int n, const Rational& c, const Rational& mu, const Complex& alpha,
                                      int K = kDefaultTruncation, precision_t precision = kDefaultPrecision) {
    require_order(n);
    if (K < 0) throw std::invalid_argument("truncation K must be non-negative");
    if (precision < 53) throw std::invalid_argument("series_solution: precision below 53 bits");
    SeriesSolution s;
    s.n = n;
    s.c = c;
    s.mu = mu;
    s.alpha = alpha.with_precision(precision);
    s.precision = precision;
    s.a = detail::series_coefficients(n, c, mu, s.alpha, K, precision);
    return s;
}

/// Series for the exponent α_index (1-based, canonical labeling of the roots).
inline SeriesSolution series_solution(int n, const Rational& c, const Rational& mu, int alpha_index,
                                      int K = kDefaultTruncation, precision_t precision = kDefaultPrecision) {
    require_order(n);
    if (alpha_index < 1 || alpha_index > 2 * n)
        throw std::invalid_argument("alpha index must lie in 1.." + std::to_string(2 * n));
    NumericOptions opt;
    opt.precision = precision;
    auto alpha = numeric_roots(n, c, opt).labeled();
    return series_solution(n, c, mu, alpha[static_cast<std::size_t>(alpha_index - 1)], K, precision);
}

/// Σ_k a_k x^{α+2nk} with the principal branch of x^α.
inline Complex eval_solution(const SeriesSolution& s, const Rational& x) {
    if (x <= 0) throw std::invalid_argument("eval_solution needs x > 0");
    const precision_t prec = s.precision;
    const BigFloat xf(x, prec);
    const BigFloat step = bf::pow(xf, static_cast<unsigned long>(2 * s.n));
    Complex sum(prec);
    for (std::size_t k = s.a.size(); k-- > 0;) sum = sum * step + s.a[k];
    return real_pow(xf, s.alpha) * sum;
}

/// -μ a_K x^{α+2nK}
inline Complex residual_tail(const SeriesSolution& s, const Rational& x) {
    if (x <= 0) throw std::invalid_argument("residual_tail needs x > 0");
    const precision_t prec = s.precision;
    const BigFloat xf(x, prec);
    const int K = s.truncation();
    Complex w = s.alpha + Complex(Rational(2 * s.n * K), prec);
    return Complex(Rational(-s.mu), prec) * s.a.back() * real_pow(xf, w);
}

/// (-1)^n y^{(2n)} + c x^{-2n} y - μ y for the truncated series, term by
/// term. The k = 0 contribution (-1)^n D(α; c) x^{α-2n} is zero because α
/// solves the indicial equation, so it is not evaluated.
///
/// Consecutive terms cancel almost completely, so the sum is formed at a
/// working precision raised by the ratio of the largest term to the result.
inline Complex ode_residual(const SeriesSolution& s, const Rational& x) {
    if (x <= 0) throw std::invalid_argument("ode_residual needs x > 0");
    if (s.mu == 0) return Complex(s.precision);
    const int n = s.n;
    const int K = s.truncation();

    // Magnitudes |μ a_{k-1}| x^{Re α + 2n(k-1)} at the base precision.
    const BigFloat xb(x, s.precision);
    const BigFloat x2n = bf::pow(xb, static_cast<unsigned long>(2 * n));
    const BigFloat mu_abs(abs(s.mu), s.precision);
    BigFloat pw = bf::pow(xb, s.alpha.re);
    double largest = -1e300;
    for (int k = 0; k <= K; ++k) {
        largest = std::max(largest, detail::log2_of(mu_abs * abs(s.a[static_cast<std::size_t>(k)]) * pw));
        pw *= x2n;
    }
    const double tail = detail::log2_of(abs(residual_tail(s, x)));
    const double gap = std::max(0.0, largest - tail);
    const auto work = static_cast<precision_t>(s.precision + static_cast<precision_t>(std::ceil(gap)) + 64);

    const auto a = detail::series_coefficients(n, s.c, s.mu, s.alpha, K, work);
    const BigFloat xf(x, work);
    const BigFloat step = bf::pow(xf, static_cast<unsigned long>(2 * n));
    const Complex sgn(Rational(n % 2 == 0 ? 1 : -1), work);
    const Complex mu(s.mu, work);
    const Complex al = s.alpha.with_precision(work);
    // Σ_{k=1}^{K} [(-1)^n a_k D(α+2nk) - μ a_{k-1}] X^{k-1} - μ a_K X^K, X = x^{2n}
    Complex acc = -(mu * a[static_cast<std::size_t>(K)]);
    for (int k = K; k >= 1; --k) {
        Complex z = al + Complex(Rational(2 * n * k), work);
        Complex term = sgn * a[static_cast<std::size_t>(k)] * detail::indicial_at(n, s.c, z) -
                       mu * a[static_cast<std::size_t>(k - 1)];
        acc = acc * step + term;
    }
    return (real_pow(xf, al) * acc).with_precision(s.precision);
}

/// ∫_lower^1 |y(x)|² dx for the truncated series, integrated term by term:
/// |y|² = Σ_{j,k} a_j conj(a_k) x^{2 Re α + 2n(j+k)}.
inline BigFloat l2_norm_squared(const SeriesSolution& s, const Rational& lower) {
    if (lower <= 0 || lower >= 1) throw std::invalid_argument("l2_norm_squared needs 0 < lower < 1");
    const precision_t prec = s.precision;
    const BigFloat L(lower, prec);
    const BigFloat logL = bf::log(L);
    const BigFloat one(1L, prec);
    BigFloat total(prec);
    for (std::size_t j = 0; j < s.a.size(); ++j)
        for (std::size_t k = 0; k < s.a.size(); ++k) {
            Complex prod = s.a[j] * s.a[k].conj();
            BigFloat e1 = s.alpha.re * BigFloat(2L, prec) +
                          BigFloat(static_cast<long>(2 * s.n * (j + k)), prec) + one;
            BigFloat piece = e1.is_zero() ? -logL : (one - bf::exp(e1 * logL)) / e1;
            total += prod.re * piece;
        }
    return total;
}

/// Whether the leading power x^α is square integrable near 0.
inline bool leading_term_square_integrable(const Complex& alpha) {
    return alpha.re > BigFloat(make_rational(-1, 2), alpha.precision());
}

}  // namespace eulerop
