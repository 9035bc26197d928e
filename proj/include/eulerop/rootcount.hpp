#pragma once

// Location of the indicial roots relative to the critical line Re z = -1/2.
//
// Two independent routes are provided: signs of the Hurwitz leading principal
// minors (exact, but silent when a minor vanishes) and certified
// high-precision root approximation. Roots exactly on the line are always
// counted exactly, through the real/imaginary split of D(-1/2 + iy; c).

#include "bigfloat.hpp"
#include "hurwitz_layout.hpp"
#include "indicial.hpp"
#include "poly_matrix.hpp"
#include "sturm.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace eulerop {

struct HalfPlaneCounts {
    int gt = 0;  // Re z > -1/2
    int on = 0;  // Re z = -1/2
    int lt = 0;  // Re z < -1/2

    int total() const { return gt + on + lt; }
    friend bool operator==(const HalfPlaneCounts&, const HalfPlaneCounts&) = default;
};

/// Returned by the minor-sign route when some leading principal minor of the
/// Hurwitz matrix vanishes at the queried c.
struct DegenerateSignal {
    int vanishing_minor = 0;  // 1-based index k of the first Δ_k = 0
};

/// D(-1/2 + iy; c) = A(y) + i B(y).
struct LinePair {
    QPolynomial A;  // even
    QPolynomial B;  // odd
};

inline LinePair line_pair(const ShiftedCoeffs& sc, const Rational& c) {
    QPolynomial q = sc.shifted(c);
    std::vector<Rational> a(q.size()), b(q.size());
    for (std::size_t j = 0; j < q.size(); ++j) {
        // i^j = (-1)^{j/2} for even j, i·(-1)^{(j-1)/2} for odd j
        const Rational& qj = q.coefficients()[j];
        bool negate = (j / 2) % 2 == 1;
        (j % 2 == 0 ? a : b)[j] = negate ? Rational(-qj) : qj;
    }
    return {QPolynomial(std::move(a)), QPolynomial(std::move(b))};
}

inline LinePair line_pair(int n, const Rational& c) { return line_pair(shifted_coeffs(build_indicial(n)), c); }

/// Roots (with multiplicity) on Re z = -1/2: real roots of gcd(A, B), with
/// multiplicities taken from its square-free decomposition.
inline int count_on_line(const ShiftedCoeffs& sc, const Rational& c) {
    LinePair lp = line_pair(sc, c);
    QPolynomial g = gcd(lp.A, lp.B);
    if (g.degree() < 1) return 0;
    int total = 0;
    for (const auto& f : square_free_decomposition(g))
        total += static_cast<int>(f.multiplicity) * sturm_count(f.factor);
    return total;
}

inline int count_on_line(int n, const Rational& c) { return count_on_line(shifted_coeffs(build_indicial(n)), c); }

/// Routh–Hurwitz count from the exact minors Δ_1..Δ_{2n} of H_{2n}(c): the
/// number of roots with Re z > -1/2 equals the number of sign changes in
/// 1, Δ_1, Δ_2/Δ_1, ..., Δ_{2n}/Δ_{2n-1}.
inline std::variant<HalfPlaneCounts, DegenerateSignal> count_halfplanes_exact(const ShiftedCoeffs& sc,
                                                                             const Rational& c) {
    const auto dim = static_cast<std::size_t>(2 * sc.n);
    auto minors = leading_principal_minors(hurwitz_matrix_at(sc, c), dim);
    if (!minors) {
        // locate the first vanishing minor for the caller
        std::vector<Rational> m = hurwitz_matrix_at(sc, c);
        for (std::size_t k = 1; k <= dim; ++k) {
            std::vector<Rational> sub(k * k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = m[i * dim + j];
            if (bareiss_determinant(sub, k) == 0) return DegenerateSignal{static_cast<int>(k)};
        }
        throw invariant_violation("Hurwitz minors: elimination stalled but no minor vanishes");
    }
    if (minors->back() == 0) return DegenerateSignal{static_cast<int>(dim)};

    int changes = 0;
    int last = 1;  // sign of the leading coefficient q_{2n} = 1
    Rational prev = 1;
    for (const auto& delta : *minors) {
        int s = sign(delta / prev);
        if (s != last) ++changes;
        last = s;
        prev = delta;
    }
    HalfPlaneCounts out;
    out.gt = changes;
    out.on = count_on_line(sc, c);
    if (out.on != 0) throw invariant_violation("nonzero Hurwitz minors with a root on the critical line");
    out.lt = 2 * sc.n - out.gt;
    return out;
}

inline std::variant<HalfPlaneCounts, DegenerateSignal> count_halfplanes_exact(int n, const Rational& c) {
    return count_halfplanes_exact(shifted_coeffs(build_indicial(n)), c);
}

enum class CountMethod { exact_minors, certified_numeric, hybrid };

inline std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::exact_minors: return "exact-minors";
        case CountMethod::certified_numeric: return "certified-numeric";
        case CountMethod::hybrid: return "hybrid";
    }
    return "unknown";
}

struct RootEntry {
    Complex value;
    unsigned multiplicity = 1;
    BigFloat radius;  // certified inclusion radius around value
};

struct RootInventory {
    int n = 0;
    Rational c;
    precision_t precision = kDefaultPrecision;  // bits actually used
    std::vector<RootEntry> roots;               // distinct roots, sorted by (Re, Im)
    HalfPlaneCounts counts;
    CountMethod method = CountMethod::certified_numeric;

    /// α_1..α_{2n}: every root repeated by multiplicity, in canonical order.
    std::vector<Complex> labeled() const {
        std::vector<Complex> out;
        for (const auto& r : roots)
            for (unsigned k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
        return out;
    }
};

struct NumericOptions {
    precision_t precision = kDefaultPrecision;
    int max_sweeps = 200;
    int max_escalations = 3;  // precision doubles on each escalation
};

namespace detail {

inline std::vector<BigFloat> float_coeffs(const QPolynomial& p, precision_t prec) {
    std::vector<BigFloat> out;
    out.reserve(p.size());
    for (const auto& a : p.coefficients()) out.emplace_back(a, prec);
    return out;
}

/// p(z) and p'(z) by Horner's rule.
inline void horner(const std::vector<BigFloat>& c, const Complex& z, Complex& p, Complex& dp) {
    const precision_t prec = z.precision();
    p = Complex(c.back(), BigFloat(prec));
    dp = Complex(prec);
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + Complex(c[i], BigFloat(prec));
    }
}

/// Deterministic jitter in [-1, 1) from a fixed seed; mt19937's raw output is
/// specified by the standard, unlike the distributions.
class Jitter {
   public:
    explicit Jitter(std::uint32_t seed) : gen_(seed) {}
    double next() { return static_cast<double>(gen_()) / 2147483648.0 - 1.0; }

   private:
    std::mt19937 gen_;
};

/// Starting points: the comparison roots center + R·e^{iθ_k} of
/// (z - center)^d = ±R^d, rotated off the real axis and jittered by 1e-3
/// relative.
inline std::vector<Complex> initial_guesses(const QPolynomial& f, precision_t prec) {
    const auto d = static_cast<std::size_t>(f.degree());
    Rational center = -f.coeff(d - 1) / (f.leading() * static_cast<unsigned long>(d));
    Rational at_center = abs(f(center) / f.leading());
    BigFloat radius = bf::root(BigFloat(at_center, prec), d);
    BigFloat floor(make_rational(1, 2), prec);
    if (radius < floor) radius = floor;
    const BigFloat pi = bf::pi(prec);
    Jitter jitter(0x5eed1234u);
    std::vector<Complex> z;
    z.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        double theta = (2.0 * static_cast<double>(k) + 0.8) / static_cast<double>(d);
        BigFloat th = pi * BigFloat(theta, prec) + BigFloat(1e-3 * jitter.next(), prec);
        BigFloat r = radius * BigFloat(1.0 + 1e-3 * jitter.next(), prec);
        Complex w = polar(r, th);
        z.push_back({BigFloat(center, prec) + w.re, w.im});
    }
    return z;
}

/// Aberth–Ehrlich simultaneous iteration (Gauss–Seidel updates). Returns true
/// once two consecutive sweeps move every root by less than 2^-(prec-12)
/// relative.
inline bool aberth(const std::vector<BigFloat>& c, std::vector<Complex>& z, precision_t prec, int max_sweeps) {
    const BigFloat tol = bf::ldexp(-(static_cast<long>(prec) - 12), prec);
    const BigFloat one(1L, prec);
    int quiet = 0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        BigFloat worst(prec);
        for (std::size_t k = 0; k < z.size(); ++k) {
            Complex p(prec), dp(prec);
            horner(c, z[k], p, dp);
            if (p.re.is_zero() && p.im.is_zero()) continue;
            if (dp.re.is_zero() && dp.im.is_zero()) {
                z[k].re += bf::ldexp(-(static_cast<long>(prec) / 2), prec);
                worst = one;
                continue;
            }
            Complex ratio = p / dp;
            Complex s(prec);
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) s += Complex(one, BigFloat(prec)) / (z[k] - z[j]);
            Complex w = ratio / (Complex(one, BigFloat(prec)) - ratio * s);
            z[k] -= w;
            BigFloat scale = abs(z[k]);
            if (scale < one) scale = one;
            BigFloat corr = abs(w) / scale;
            if (corr > worst) worst = corr;
        }
        quiet = worst < tol ? quiet + 1 : 0;
        if (quiet >= 2) return true;
    }
    return false;
}

/// d·|f(z)/f'(z)| plus a rounding allowance for the evaluation of f.
inline BigFloat inclusion_radius(const std::vector<BigFloat>& c, const Complex& z, precision_t prec) {
    Complex p(prec), dp(prec);
    horner(c, z, p, dp);
    const BigFloat d(static_cast<long>(c.size() - 1), prec);
    BigFloat mag = abs(z);
    BigFloat bound(prec), power(1L, prec);
    for (const auto& a : c) {
        bound += bf::abs(a) * power;
        power *= mag;
    }
    BigFloat err = bound * BigFloat(static_cast<long>(4 * c.size() + 8), prec) *
                   bf::ldexp(-static_cast<long>(prec), prec);
    BigFloat dmag = abs(dp);
    if (dmag.is_zero()) return BigFloat(1e300, prec);
    return d * (abs(p) + err) / dmag;
}

struct FactorRoots {
    std::vector<Complex> z;
    std::vector<BigFloat> radius;
};

/// Roots of one square-free factor, conjugate-symmetrized, with pairwise
/// disjoint inclusion disks. Empty optional when certification fails at this
/// precision.
inline std::optional<FactorRoots> certified_factor_roots(const QPolynomial& f, std::vector<Complex>& z,
                                                         precision_t prec, int max_sweeps) {
    const auto d = static_cast<std::size_t>(f.degree());
    FactorRoots out;
    std::vector<BigFloat> c = float_coeffs(f, prec);
    if (d == 1) {
        out.z.push_back(Complex(-f.coeff(0) / f.coeff(1), prec));
        out.radius.push_back(BigFloat(prec));
        return out;
    }
    if (!aberth(c, z, prec, max_sweeps)) return std::nullopt;

    // The k real roots (Sturm) are the k approximations closest to the axis.
    const auto n_real = static_cast<std::size_t>(sturm_count(f));
    std::vector<std::size_t> order(d);
    for (std::size_t i = 0; i < d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bf::abs(z[a].im) < bf::abs(z[b].im) || (bf::abs(z[a].im) == bf::abs(z[b].im) && a < b);
    });
    std::vector<Complex> sym;
    for (std::size_t i = 0; i < n_real; ++i) sym.push_back({z[order[i]].re, BigFloat(prec)});
    std::vector<Complex> upper, lower;
    for (std::size_t i = n_real; i < d; ++i) (z[order[i]].im.sign() > 0 ? upper : lower).push_back(z[order[i]]);
    if (upper.size() != lower.size()) return std::nullopt;
    std::vector<bool> used(lower.size(), false);
    for (const auto& u : upper) {
        std::size_t best = lower.size();
        BigFloat best_dist(prec);
        for (std::size_t j = 0; j < lower.size(); ++j) {
            if (used[j]) continue;
            BigFloat dist = abs(lower[j] - u.conj());
            if (best == lower.size() || dist < best_dist) {
                best = j;
                best_dist = dist;
            }
        }
        used[best] = true;
        sym.push_back(u);
        sym.push_back(u.conj());
    }

    for (const auto& w : sym) out.radius.push_back(inclusion_radius(c, w, prec));
    for (std::size_t i = 0; i < sym.size(); ++i)
        for (std::size_t j = i + 1; j < sym.size(); ++j)
            if (!(abs(sym[i] - sym[j]) > out.radius[i] + out.radius[j])) return std::nullopt;
    out.z = std::move(sym);
    return out;
}

inline bool canonical_less(const Complex& a, const Complex& b) {
    if (a.re == b.re) return a.im < b.im;
    return a.re < b.re;
}

}  // namespace detail

/// All 2n roots of D(·; c): exact square-free decomposition over ℚ, then
/// Aberth iteration per factor with certified inclusion disks. Roots exactly
/// on the critical line are identified through count_on_line and snapped to
/// Re = -1/2.
inline RootInventory numeric_roots(const ShiftedCoeffs& sc, const Rational& c, const NumericOptions& opt = {}) {
    if (opt.precision < 53) throw std::invalid_argument("numeric_roots: precision below 53 bits");
    const int n = sc.n;
    const IndicialFamily fam = build_indicial(n);
    const QPolynomial D = fam.at(c);
    const auto factors = square_free_decomposition(D);
    const int on_exact = count_on_line(sc, c);

    precision_t prec = opt.precision;
    std::vector<std::vector<Complex>> guesses;
    for (const auto& f : factors) guesses.push_back(detail::initial_guesses(f.factor, prec));

    for (int attempt = 0; attempt <= opt.max_escalations; ++attempt, prec *= 2) {
        RootInventory inv;
        inv.n = n;
        inv.c = c;
        inv.precision = prec;
        bool ok = true;
        const BigFloat line(make_rational(-1, 2), prec);
        int touching = 0;
        std::vector<std::pair<std::size_t, std::size_t>> touching_at;
        for (std::size_t fi = 0; fi < factors.size() && ok; ++fi) {
            for (auto& g : guesses[fi]) g = g.with_precision(prec);
            auto fr = detail::certified_factor_roots(factors[fi].factor, guesses[fi], prec, opt.max_sweeps);
            if (!fr) {
                ok = false;
                break;
            }
            const unsigned m = factors[fi].multiplicity;
            for (std::size_t k = 0; k < fr->z.size(); ++k) {
                const auto& z = fr->z[k];
                const auto& r = fr->radius[k];
                if (z.re - r > line)
                    inv.counts.gt += static_cast<int>(m);
                else if (z.re + r < line)
                    inv.counts.lt += static_cast<int>(m);
                else {
                    touching += static_cast<int>(m);
                    touching_at.emplace_back(inv.roots.size(), m);
                }
                inv.roots.push_back({z, m, r});
            }
        }
        if (!ok || touching != on_exact) continue;
        for (const auto& [idx, m] : touching_at) inv.roots[idx].value.re = line;
        inv.counts.on = on_exact;
        inv.method = on_exact > 0 ? CountMethod::hybrid : CountMethod::certified_numeric;
        std::sort(inv.roots.begin(), inv.roots.end(),
                  [](const RootEntry& a, const RootEntry& b) { return detail::canonical_less(a.value, b.value); });
        if (inv.counts.total() != 2 * n) throw invariant_violation("root inventory does not account for 2n roots");
        return inv;
    }
    throw math_error("numeric_roots: could not certify root locations for n=" + std::to_string(n) +
                     ", c=" + to_string(c));
}

inline RootInventory numeric_roots(int n, const Rational& c, const NumericOptions& opt = {}) {
    return numeric_roots(shifted_coeffs(build_indicial(n)), c, opt);
}

/// (gt, on, lt); gt is the number of power solutions x^α that are square
/// integrable near 0. Uses the exact minors when they are all nonzero and the
/// certified numeric route otherwise.
inline HalfPlaneCounts count_right(const ShiftedCoeffs& sc, const Rational& c) {
    auto exact = count_halfplanes_exact(sc, c);
    if (auto* counts = std::get_if<HalfPlaneCounts>(&exact)) return *counts;
    return numeric_roots(sc, c).counts;
}

inline HalfPlaneCounts count_right(int n, const Rational& c) { return count_right(shifted_coeffs(build_indicial(n)), c); }

}  // namespace eulerop
