#pragma once

// Binary floating point at an explicit precision (MPFR), plus a minimal
// complex type on top of it. Every value carries its precision in bits;
// binary operations produce a result at the larger of the operand precisions.

#include "rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace eulerop {

using precision_t = mpfr_prec_t;

inline constexpr precision_t kDefaultPrecision = 256;

class BigFloat {
   public:
    explicit BigFloat(precision_t prec = kDefaultPrecision) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long x, precision_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(double x, precision_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigFloat(const Rational& x, precision_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const Integer& x, precision_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    precision_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }

    /// Copy rounded (or zero-extended) to `prec` bits.
    BigFloat with_precision(precision_t prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    /// Exponent e with 2^(e-1) ≤ |x| < 2^e; very negative for zero.
    long exponent() const { return is_zero() ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

    /// Exact rational value of the stored binary float.
    Rational to_rational() const {
        if (is_zero()) return 0;
        Integer m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
        if (e >= 0) return Rational(m * pow(Integer(2), static_cast<unsigned long>(e)));
        return make_rational(m, pow(Integer(2), static_cast<unsigned long>(-e)));
    }

    /// `digits` significant decimal digits, scientific notation ("-1.2345e+03").
    std::string to_string(int digits) const {
        if (is_zero()) return "0";
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
        mpfr_exp_t e = 0;
        char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
        std::string m(raw);
        mpfr_free_str(raw);
        std::string sgn;
        if (m[0] == '-') {
            sgn = "-";
            m = m.substr(1);
        }
        long exp10 = static_cast<long>(e) - 1;
        std::string out = sgn + m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += (exp10 < 0 ? "e-" : "e+") + std::to_string(std::labs(exp10));
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.precision(), b.precision()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

   private:
    mpfr_t v_;
};

namespace bf {

inline BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline BigFloat sqrt(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}
inline BigFloat log(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_log(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline BigFloat exp(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_exp(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline BigFloat sin(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_sin(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline BigFloat cos(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_cos(r.get(), a.get(), MPFR_RNDN);
    return r;
}
inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r(std::max(y.precision(), x.precision()));
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}
inline BigFloat pi(precision_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}
/// a^(1/k) for a ≥ 0.
inline BigFloat root(const BigFloat& a, unsigned long k) {
    BigFloat r(a.precision());
    mpfr_rootn_ui(r.get(), a.get(), k, MPFR_RNDN);
    return r;
}
inline BigFloat pow(const BigFloat& a, const BigFloat& e) {
    BigFloat r(std::max(a.precision(), e.precision()));
    mpfr_pow(r.get(), a.get(), e.get(), MPFR_RNDN);
    return r;
}
inline BigFloat pow(const BigFloat& a, unsigned long e) {
    BigFloat r(a.precision());
    mpfr_pow_ui(r.get(), a.get(), e, MPFR_RNDN);
    return r;
}
/// 2^e at the given precision.
inline BigFloat ldexp(long e, precision_t prec) {
    BigFloat r(1L, prec);
    mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
    return r;
}

}  // namespace bf

struct Complex {
    BigFloat re;
    BigFloat im;

    explicit Complex(precision_t prec = kDefaultPrecision) : re(prec), im(prec) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const Rational& r, precision_t prec) : re(r, prec), im(prec) {}

    precision_t precision() const { return std::max(re.precision(), im.precision()); }
    Complex with_precision(precision_t prec) const { return {re.with_precision(prec), im.with_precision(prec)}; }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        BigFloat den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    Complex& operator+=(const Complex& o) { return *this = *this + o; }
    Complex& operator-=(const Complex& o) { return *this = *this - o; }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    Complex conj() const { return {re, -im}; }
};

inline BigFloat abs(const Complex& z) { return bf::hypot(z.re, z.im); }

/// Principal-branch exp(w · log x) for real x > 0.
inline Complex real_pow(const BigFloat& x, const Complex& w) {
    BigFloat lx = bf::log(x);
    BigFloat mag = bf::exp(w.re * lx);
    BigFloat arg = w.im * lx;
    return {mag * bf::cos(arg), mag * bf::sin(arg)};
}

/// e^(iθ)
inline Complex polar(const BigFloat& r, const BigFloat& theta) { return {r * bf::cos(theta), r * bf::sin(theta)}; }

}  // namespace eulerop
