#pragma once

// Certified thresholds c_n^(1) < ... < c_n^(n), the L²-count classification
// as a function of c, deficiency indices and essential self-adjointness.

#include "hurwitz.hpp"
#include "sturm.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eulerop {

/// A real algebraic threshold: either an exact rational or a root of an exact
/// polynomial certified inside an isolating interval.
class ThresholdValue {
   public:
    explicit ThresholdValue(Rational exact) : value_(std::move(exact)) {}
    explicit ThresholdValue(IsolatingInterval iv) : value_(std::move(iv)) {}

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    const Rational& exact() const { return std::get<Rational>(value_); }
    const IsolatingInterval& interval() const { return std::get<IsolatingInterval>(value_); }

    /// sign(x - value), decided exactly.
    int compare(const Rational& x) const {
        if (is_exact()) return sign(x - exact());
        return eulerop::compare(x, interval());
    }

    /// Rational enclosure (lo, hi] of width ≤ width; degenerate [v, v] for exact values.
    std::pair<Rational, Rational> enclosure(const Rational& width) const {
        if (is_exact()) return {exact(), exact()};
        IsolatingInterval iv = refine(interval(), width);
        return {iv.lo, iv.hi};
    }

    /// Midpoint of an enclosure with relative width ≤ 2^-bits.
    Rational approximate(long bits) const {
        if (is_exact()) return exact();
        const auto& iv = interval();
        Rational mag = abs(iv.lo) > abs(iv.hi) ? Rational(abs(iv.lo)) : Rational(abs(iv.hi));
        if (mag < 1) mag = 1;
        auto [lo, hi] = enclosure(mag * make_rational(Integer(1), pow(Integer(2), static_cast<unsigned long>(bits))));
        return (lo + hi) / 2;
    }

    /// Correctly rounded decimal with `digits` significant digits.
    std::string decimal(int digits) const {
        if (is_exact()) return to_decimal(exact(), digits);
        IsolatingInterval iv = interval();
        for (int round = 0; round < 400; ++round) {
            if (iv.lo != 0 && iv.hi != 0 && sign(iv.lo) == sign(iv.hi)) {
                auto a = round_significant(iv.lo, digits);
                auto b = round_significant(iv.hi, digits);
                // rounding is monotone, so equal roundings at both ends pin the root's
                if (a == b) return to_decimal(iv.hi, digits);
            }
            if (auto r = exact_root(iv)) return to_decimal(*r, digits);
            iv = refine(iv, iv.width() / (Rational(1) << 16));
        }
        throw math_error("could not round threshold to " + std::to_string(digits) + " digits");
    }

   private:
    std::variant<Rational, IsolatingInterval> value_;
};

struct ThresholdSet {
    int n = 0;
    std::vector<ThresholdValue> entries;  // strictly increasing
    std::size_t distinguished = 0;        // 0-based index of (-1)^{n-1} q_0
    QPolynomial hPoly;                    // constant for n = 1

    const ThresholdValue& top() const { return entries.back(); }
};

/// The distinguished threshold (-1)^{n-1} (4n-1)!!/2^{2n}.
inline Rational distinguished_threshold(int n) {
    Rational q0 = q0_closed_form(n);
    return n % 2 == 1 ? q0 : Rational(-q0);
}

/// Isolates the roots of h_{n-1}, merges in the distinguished rational and
/// checks the ordering/sign structure. Throws invariant_violation whenever the
/// certified data contradicts that structure.
inline ThresholdSet threshold_set(int n) {
    require_order(n);
    ThresholdSet ts;
    ts.n = n;
    const Rational special = distinguished_threshold(n);
    if (n == 1) {
        ts.entries.emplace_back(special);
        ts.hPoly = build_hurwitz(1).hPoly;
        return ts;
    }
    HurwitzFamily fam = build_hurwitz(n);
    ts.hPoly = fam.hPoly;
    auto roots = isolate_real_roots(fam.hPoly);
    if (static_cast<int>(roots.size()) != n - 1 || sturm_count(square_free_part(fam.hPoly)) != n - 1 ||
        square_free_part(fam.hPoly).degree() != n - 1)
        throw invariant_violation("h_{n-1} does not have n-1 distinct real roots");

    bool inserted = false;
    for (auto& iv : roots) {
        ThresholdValue tv = exact_root(iv) ? ThresholdValue(*exact_root(iv)) : ThresholdValue(iv);
        int cmp = tv.compare(special);
        if (cmp == 0) throw invariant_violation("distinguished threshold is also a root of h_{n-1}");
        if (!inserted && cmp < 0) {
            ts.distinguished = ts.entries.size();
            ts.entries.emplace_back(special);
            inserted = true;
        }
        ts.entries.push_back(std::move(tv));
    }
    if (!inserted) {
        ts.distinguished = ts.entries.size();
        ts.entries.emplace_back(special);
    }

    if (ts.distinguished + 1 != static_cast<std::size_t>((n + 1) / 2))
        throw invariant_violation("distinguished threshold is not at position ceil(n/2)");
    int negatives = 0;
    for (const auto& e : ts.entries) negatives += e.compare(Rational(0)) > 0 ? 1 : 0;
    if (negatives != n / 2) throw invariant_violation("threshold sign split differs from floor(n/2) negatives");
    if (ts.top().compare(q0_closed_form(n)) > 0) throw invariant_violation("largest threshold is below q_0");
    return ts;
}

/// Process-wide cache; each ThresholdSet is built at most once.
inline std::shared_ptr<const ThresholdSet> cached_threshold_set(int n) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const ThresholdSet>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto ts = std::make_shared<const ThresholdSet>(threshold_set(n));
    cache.emplace(n, ts);
    return ts;
}

struct SelfAdjointThreshold {
    std::string decimal;
    Rational lo;  // certified enclosure lo < c_n ≤ hi (lo == hi when exact)
    Rational hi;
    bool exact = false;
};

/// c_n = c_n^(n), rounded to `digits` significant digits.
inline SelfAdjointThreshold selfadjoint_threshold(int n, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be at least 1");
    auto ts = cached_threshold_set(n);
    const auto& top = ts->top();
    SelfAdjointThreshold out;
    out.decimal = top.decimal(digits);
    out.exact = top.is_exact();
    if (out.exact) {
        out.lo = out.hi = top.exact();
    } else {
        Rational mag = abs(top.interval().hi);
        auto [lo, hi] = top.enclosure(mag * make_rational(Integer(1), pow(Integer(10), static_cast<unsigned long>(digits + 2))));
        out.lo = lo;
        out.hi = hi;
    }
    return out;
}

/// Number of solutions of τ y = μ y that are square integrable near 0, from
/// the certified position of c relative to the thresholds.
inline int classify(const ThresholdSet& ts, const Rational& c) {
    const int n = ts.n;
    if (n == 1) return ts.entries[0].compare(c) >= 0 ? 1 : 2;
    const auto& t = ts.entries;
    auto cmp = [&](int k) { return t[static_cast<std::size_t>(k - 1)].compare(c); };  // sign(c - c^(k))
    if (cmp(n) >= 0) return n;
    if (cmp(1) <= 0) return n + 1;
    const int f = n / 2;
    for (int k = 1; k <= n - 1; ++k) {
        const int lo = cmp(k);
        const int hi = cmp(k + 1);
        if (k > f && lo >= 0 && hi < 0) return n + 2 * (n - k);
        if (k == f && lo > 0 && hi < 0) return 2 * n;
        if (k < f && lo > 0 && hi <= 0) return n + 2 * k + 1;
    }
    throw invariant_violation("classification bands do not cover c = " + to_string(c));
}

inline int classify(int n, const Rational& c) { return classify(*cached_threshold_set(n), c); }

/// Deficiency indices n_± of the minimal operator: classify - n, in [0, n].
inline int deficiency_indices(int n, const Rational& c) {
    int d = classify(n, c) - n;
    if (d < 0 || d > n) throw invariant_violation("deficiency index outside [0, n]");
    return d;
}

inline bool is_essentially_selfadjoint(int n, const Rational& c) {
    auto ts = cached_threshold_set(n);
    bool by_count = classify(*ts, c) == n;
    bool by_threshold = ts->top().compare(c) >= 0;
    if (by_count != by_threshold) throw invariant_violation("self-adjointness: count and threshold comparison disagree");
    return by_count;
}

struct ClassificationBand {
    std::optional<ThresholdValue> low;   // nullopt = -∞
    std::optional<ThresholdValue> high;  // nullopt = +∞
    bool lowClosed = false;
    bool highClosed = false;
    int count = 0;
};

/// Partition of ℝ into maximal intervals of constant count.
inline std::vector<ClassificationBand> band_table(const ThresholdSet& ts) {
    const int n = ts.n;
    const auto& t = ts.entries;
    auto at = [&](int k) { return t[static_cast<std::size_t>(k - 1)]; };
    std::vector<ClassificationBand> bands;
    if (n == 1) {
        bands.push_back({std::nullopt, at(1), false, false, 2});
        bands.push_back({at(1), std::nullopt, true, false, 1});
        return bands;
    }
    const int f = n / 2;
    bands.push_back({std::nullopt, at(1), false, true, n + 1});
    for (int k = 1; k < f; ++k) bands.push_back({at(k), at(k + 1), false, true, n + 2 * k + 1});
    bands.push_back({at(f), at(f + 1), false, false, 2 * n});
    for (int k = f + 1; k <= n - 1; ++k) bands.push_back({at(k), at(k + 1), true, false, n + 2 * (n - k)});
    bands.push_back({at(n), std::nullopt, true, false, n});
    return bands;
}

inline std::vector<ClassificationBand> band_table(int n) { return band_table(*cached_threshold_set(n)); }

}  // namespace eulerop
