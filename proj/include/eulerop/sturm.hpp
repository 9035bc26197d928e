#pragma once

// Sturm sequences, certified real-root counting, isolation and refinement.

#include "polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

namespace eulerop {

/// Interval endpoint; nullopt stands for -∞ as a lower bound and +∞ as an
/// upper bound.
using Bound = std::optional<Rational>;

/// The signed remainder chain p, p', -rem(p, p'), ... with every member
/// scaled by a positive rational to keep coefficients small.
class SturmSequence {
   public:
    explicit SturmSequence(const QPolynomial& p) {
        if (p.is_zero()) throw math_error("Sturm sequence of the zero polynomial");
        chain_.push_back(primitive_part(p));
        if (p.degree() < 1) return;
        chain_.push_back(primitive_part(derivative(p)));
        while (chain_.back().degree() > 0) {
            QPolynomial r = chain_[chain_.size() - 2] % chain_.back();
            if (r.is_zero()) break;
            chain_.push_back(primitive_part(-r));
        }
    }

    const std::vector<QPolynomial>& chain() const noexcept { return chain_; }
    const QPolynomial& polynomial() const noexcept { return chain_.front(); }

    /// Sign variations at a finite point, zeros dropped.
    int variations_at(const Rational& x) const {
        int count = 0;
        int last = 0;
        for (const auto& q : chain_) {
            int s = sign(q(x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int variations_at_infinity(bool positive) const {
        int count = 0;
        int last = 0;
        for (const auto& q : chain_) {
            int s = sign(q.leading());
            if (!positive && q.degree() % 2 == 1) s = -s;
            if (last != 0 && s != last) ++count;
            last = s;
        }
        return count;
    }

    int variations(const Bound& x, bool upper) const {
        return x ? variations_at(*x) : variations_at_infinity(upper);
    }

    /// Number of distinct real roots in (lo, hi]; exact for square-free input.
    int count(const Bound& lo, const Bound& hi) const {
        if (lo && hi && *hi <= *lo) return 0;
        return variations(lo, false) - variations(hi, true);
    }

   private:
    std::vector<QPolynomial> chain_;
};

/// Number of distinct real roots of p in (lo, hi]. p must be nonzero; pass a
/// square-free polynomial (e.g. square_free_part(p)).
inline int sturm_count(const QPolynomial& p, const Bound& lo = std::nullopt, const Bound& hi = std::nullopt) {
    if (p.is_zero()) throw math_error("sturm_count of the zero polynomial");
    return SturmSequence(p).count(lo, hi);
}

/// A root of `polynomial` certified to be the only one in (lo, hi].
struct IsolatingInterval {
    Rational lo;
    Rational hi;
    QPolynomial polynomial;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
};

/// Power of two bounding every |root| from above (Fujiwara's bound, rounded up).
inline Rational root_bound(const QPolynomial& p) {
    const int d = p.degree();
    if (d < 1) return 1;
    const Rational& lead = p.leading();
    long exp2 = 0;
    for (int i = 1; i <= d; ++i) {
        Rational r = abs(p.coeff(d - i) / lead);
        if (r == 0) continue;
        if (i == d) r /= 2;
        // r < 2^(ilog2(r) + 1), so r^(1/i) < 2^ceil((ilog2(r) + 1) / i)
        long e = ilog2(r) + 1;
        long k = e >= 0 ? (e + i - 1) / i : -((-e) / i);
        exp2 = std::max(exp2, k + 1);
    }
    return Rational(pow(Integer(2), static_cast<unsigned long>(exp2)));
}

namespace detail {

inline void isolate_into(const SturmSequence& s, const QPolynomial& p, const Rational& lo, const Rational& hi, int count,
                         std::vector<IsolatingInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back({lo, hi, p});
        return;
    }
    Rational mid = (lo + hi) / 2;
    int left = s.count(lo, mid);
    isolate_into(s, p, lo, mid, left, out);
    isolate_into(s, p, mid, hi, count - left, out);
}

}  // namespace detail

/// Disjoint Sturm-certified intervals, one per distinct real root, sorted
/// ascending.
inline std::vector<IsolatingInterval> isolate_real_roots(const QPolynomial& p) {
    if (p.is_zero()) throw math_error("isolate_real_roots of the zero polynomial");
    std::vector<IsolatingInterval> out;
    if (p.degree() < 1) return out;
    QPolynomial sf = primitive_part(square_free_part(p));
    SturmSequence s(sf);
    Rational bound = root_bound(sf);
    int total = s.count(Rational(-bound), bound);
    detail::isolate_into(s, sf, -bound, bound, total, out);
    return out;
}

/// Exact value of the isolated root when it is rational and easy to spot
/// (linear polynomial, or an endpoint/midpoint hit during refinement).
inline std::optional<Rational> exact_root(const IsolatingInterval& iv) {
    const auto& p = iv.polynomial;
    if (p.degree() == 1) return -p.coeff(0) / p.coeff(1);
    if (p(iv.hi) == 0) return iv.hi;
    return std::nullopt;
}

/// Bisects until hi - lo ≤ width. A rational root hit exactly collapses the
/// interval onto (root - width/2, root].
inline IsolatingInterval refine(IsolatingInterval iv, const Rational& width) {
    if (width <= 0) throw math_error("refine: width must be positive");
    if (auto r = exact_root(iv)) {
        if (iv.width() > width) {
            iv.hi = *r;
            iv.lo = *r - width / 2;
        }
        return iv;
    }
    // a simple root strictly inside (lo, hi): p changes sign across it
    const int s_hi = sign(iv.polynomial(iv.hi));
    while (iv.width() > width) {
        Rational mid = iv.midpoint();
        int sm = sign(iv.polynomial(mid));
        if (sm == 0) {
            iv.hi = mid;
            iv.lo = mid - width / 2;
            break;
        }
        if (sm == s_hi)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

/// Default refinement target: width ≤ 2^-80 · max(1, |midpoint|).
inline IsolatingInterval refine_default(const IsolatingInterval& iv) {
    Rational m = abs(iv.midpoint());
    Rational scale = m > 1 ? m : Rational(1);
    return refine(iv, scale * make_rational(Integer(1), pow(Integer(2), 80)));
}

/// Exact comparison of a rational against the isolated root: returns the sign
/// of (x - root).
inline int compare(const Rational& x, const IsolatingInterval& iv) {
    if (x <= iv.lo) return -1;
    if (x > iv.hi) return 1;
    const int sx = sign(iv.polynomial(x));
    if (sx == 0) return 0;
    const int s_hi = sign(iv.polynomial(iv.hi));
    if (s_hi == 0) return -1;
    return sx == s_hi ? 1 : -1;
}

}  // namespace eulerop
