#pragma once

// The indicial family D(z; c) = z(z-1)···(z-2n+1) + (-1)^n c of the operator
// (-1)^n d^{2n}/dx^{2n} + c x^{-2n}, its expansion about z = -1/2 and the
// closed-form constants attached to it.

#include "bigfloat.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace eulerop {

struct IndicialFamily {
    int n = 0;
    QPolynomial P;  // D(z; 0), monic of degree 2n
    int sign = 1;   // (-1)^n, the coefficient of c

    /// D(·; c) as a polynomial in z.
    QPolynomial at(const Rational& c) const { return P + QPolynomial::constant(sign * c); }
    Rational operator()(const Rational& z, const Rational& c) const { return P(z) + sign * c; }
};

inline void require_order(int n) {
    if (n < 1) throw std::invalid_argument("order parameter n must be a positive integer");
}

inline IndicialFamily build_indicial(int n) {
    require_order(n);
    QPolynomial p = QPolynomial::constant(1);
    for (int j = 0; j < 2 * n; ++j) p *= QPolynomial{Rational(-j), Rational(1)};
    return {n, std::move(p), n % 2 == 0 ? 1 : -1};
}

/// (4n-1)!! / 2^{2n}
inline Rational q0_closed_form(int n) {
    require_order(n);
    return make_rational(double_factorial(4L * n - 1), pow(Integer(2), static_cast<unsigned long>(2 * n)));
}

/// [(2n-1)!!]² / 2^{2n}; -birman_constant(n) is the coupling at which the
/// two middle indicial roots merge at n - 1/2.
inline Rational birman_constant(int n) {
    require_order(n);
    Integer d = double_factorial(2L * n - 1);
    return make_rational(d * d, pow(Integer(2), static_cast<unsigned long>(2 * n)));
}

/// Coefficients q_0..q_{2n} of D(z - 1/2; 0); c enters D(z - 1/2; c) only
/// through the constant term q_0 + (-1)^n c.
struct ShiftedCoeffs {
    int n = 0;
    std::vector<Rational> q;

    /// q_0 + (-1)^n c
    Rational constant_term(const Rational& c) const { return q[0] + (n % 2 == 0 ? c : Rational(-c)); }
    /// D(w - 1/2; c) as a polynomial in w.
    QPolynomial shifted(const Rational& c) const {
        std::vector<Rational> v = q;
        v[0] = constant_term(c);
        return QPolynomial(std::move(v));
    }
};

inline ShiftedCoeffs shifted_coeffs(const IndicialFamily& fam) {
    QPolynomial s = taylor_shift(fam.P, make_rational(-1, 2));
    ShiftedCoeffs out{fam.n, s.coefficients()};
    out.q.resize(static_cast<std::size_t>(2 * fam.n + 1));
    if (out.q.back() != 1) throw invariant_violation("shifted indicial polynomial is not monic");
    if (out.q.front() != q0_closed_form(fam.n))
        throw invariant_violation("shifted constant term disagrees with (4n-1)!!/2^{2n}");
    return out;
}

/// Roots of [z - (n - 1/2)]^{2n} + (-1)^n c = 0, sorted by (Re, Im).
/// Conjugate pairs are built from one angle so their real parts agree exactly.
inline std::vector<Complex> beta_roots(int n, const Rational& c, precision_t precision = kDefaultPrecision) {
    require_order(n);
    if (precision < 53) throw std::invalid_argument("beta_roots: precision below 53 bits");
    const BigFloat center(make_rational(2 * n - 1, 2), precision);
    std::vector<Complex> out;
    if (c == 0) {
        out.assign(static_cast<std::size_t>(2 * n), Complex(center, BigFloat(precision)));
        return out;
    }
    // z - center is a 2n-th root of (-1)^{n-1} c
    const Rational target = (n % 2 == 1) ? c : Rational(-c);
    const BigFloat radius = bf::root(BigFloat(abs(target), precision), static_cast<unsigned long>(2 * n));
    const BigFloat pi = bf::pi(precision);
    auto push = [&](const BigFloat& theta, bool with_conjugate) {
        Complex w = polar(radius, theta);
        out.push_back({center + w.re, w.im});
        if (with_conjugate) out.push_back({center + w.re, -w.im});
    };
    if (target > 0) {
        for (int k = 0; k <= n; ++k) {
            BigFloat theta = pi * BigFloat(make_rational(k, n), precision);
            push(theta, k != 0 && k != n);
        }
        out[0].im = BigFloat(precision);
        out[out.size() - 1].im = BigFloat(precision);
    } else {
        for (int k = 0; k < n; ++k) push(pi * BigFloat(make_rational(2 * k + 1, 2 * n), precision), true);
    }
    std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
        if (a.re == b.re) return a.im < b.im;
        return a.re < b.re;
    });
    return out;
}

}  // namespace eulerop
