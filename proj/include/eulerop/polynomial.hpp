#pragma once

// Dense univariate polynomials with exact rational coefficients.

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace eulerop {

/// Ascending-degree coefficient list. The leading coefficient is nonzero
/// unless the polynomial is zero, in which case the list is empty.
class QPolynomial {
   public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit QPolynomial(const Rational& a) : coeffs_{a} { trim(); }

    static QPolynomial constant(const Rational& a) { return QPolynomial(std::vector<Rational>{a}); }
    static QPolynomial monomial(const Rational& a, std::size_t deg) {
        std::vector<Rational> c(deg + 1);
        c[deg] = a;
        return QPolynomial(std::move(c));
    }
    static QPolynomial x() { return monomial(Rational(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const {
        if (is_zero()) throw math_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    QPolynomial& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= s;
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator-(QPolynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
    friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QPolynomial(std::move(r));
    }
    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

inline std::string to_string(const QPolynomial& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& a = p.coefficients()[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        Rational mag = abs(a);
        if (first)
            os << (a < 0 ? "-" : "");
        else
            os << (a < 0 ? " - " : " + ");
        bool unit = mag == 1 && i > 0;
        if (!unit) os << to_string(mag);
        if (i > 0) os << (unit ? "" : "*") << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << to_string(p); }

inline QPolynomial derivative(const QPolynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p.coefficients()[i] * static_cast<unsigned long>(i);
    return QPolynomial(std::move(d));
}

/// Quotient and remainder over ℚ; b must be nonzero.
inline std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw math_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {QPolynomial{}, a};
    std::vector<Rational> rem = a.coefficients();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coefficients();
    const Rational inv_lead = 1 / b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        auto top = static_cast<std::size_t>(k) + bc.size() - 1;
        Rational q = rem[top] * inv_lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * bc[j];
    }
    rem.resize(bc.size() - 1);
    return {QPolynomial(std::move(quo)), QPolynomial(std::move(rem))};
}

inline QPolynomial operator%(const QPolynomial& a, const QPolynomial& b) { return divmod(a, b).second; }

/// a / b, requiring a zero remainder.
inline QPolynomial exact_divide(const QPolynomial& a, const QPolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw math_error("inexact division");
    return q;
}

inline QPolynomial monic(const QPolynomial& p) {
    if (p.is_zero()) throw math_error("monic of the zero polynomial");
    return p * (1 / p.leading());
}

/// Positive rational multiple of p with coprime integer coefficients. The sign
/// of p is preserved.
inline QPolynomial primitive_part(const QPolynomial& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& a : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& a : p.coefficients()) {
        Integer v = a.get_num() * (den_lcm / a.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
    return p * make_rational(den_lcm, num_gcd);
}

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) · a mod b.
inline QPolynomial pseudo_remainder(const QPolynomial& a, const QPolynomial& b) {
    if (b.is_zero()) throw math_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const Rational& lb = b.leading();
    std::size_t db = bc.size() - 1;
    for (long top = a.degree(); top >= static_cast<long>(db); --top) {
        Rational t = rem[static_cast<std::size_t>(top)];
        for (auto& r : rem) r *= lb;
        if (t == 0) continue;
        std::size_t shift = static_cast<std::size_t>(top) - db;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= t * bc[j];
    }
    rem.resize(db);
    return QPolynomial(std::move(rem));
}

/// Monic greatest common divisor (primitive remainder sequence).
inline QPolynomial gcd(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() && b.is_zero()) throw math_error("gcd of two zero polynomials");
    QPolynomial u = primitive_part(a);
    QPolynomial v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        QPolynomial r = primitive_part(pseudo_remainder(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return monic(u);
}

/// q(x) = p(x + a).
inline QPolynomial taylor_shift(const QPolynomial& p, const Rational& a) {
    if (p.degree() < 1 || a == 0) return p;
    std::vector<Rational> c = p.coefficients();
    const std::size_t d = c.size() - 1;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = d - 1; j + 1 > i; --j) c[j] += a * c[j + 1];
    return QPolynomial(std::move(c));
}

/// Monic square-free part p / gcd(p, p').
inline QPolynomial square_free_part(const QPolynomial& p) {
    if (p.is_zero()) throw math_error("square-free part of the zero polynomial");
    if (p.degree() < 1) return QPolynomial::constant(1);
    return monic(exact_divide(p, gcd(p, derivative(p))));
}

struct SquareFreeFactor {
    QPolynomial factor;  // monic, square-free, pairwise coprime with the others
    unsigned multiplicity;
};

/// Yun's square-free decomposition: p = lc(p) · ∏ factor^multiplicity.
/// Constant p yields an empty list.
inline std::vector<SquareFreeFactor> square_free_decomposition(const QPolynomial& p) {
    if (p.is_zero()) throw math_error("square-free decomposition of the zero polynomial");
    std::vector<SquareFreeFactor> out;
    if (p.degree() < 1) return out;
    QPolynomial dp = derivative(p);
    QPolynomial b = gcd(p, dp);
    QPolynomial c = exact_divide(p, b);
    QPolynomial d = exact_divide(dp, b) - derivative(c);
    for (unsigned i = 1; c.degree() > 0; ++i) {
        QPolynomial a = d.is_zero() ? monic(c) : gcd(c, d);
        if (a.degree() > 0) out.push_back({monic(a), i});
        c = exact_divide(c, a);
        d = exact_divide(d, a) - derivative(c);
    }
    return out;
}

}  // namespace eulerop
