#pragma once

// Growth of the self-adjointness threshold c_n against (2n²/π)^{2n}, and the
// bracket 2n²/π < c_n^{1/(2n)} < n / sin(π/(2n)).

#include "thresholds.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace eulerop {

struct AsymptoticRow {
    int n = 0;
    std::string cn;               // c_n
    std::string conjectureValue;  // (2n²/π)^{2n}
    std::string lowerBound;       // 2n²/π
    std::string midValue;         // c_n^{1/(2n)}
    std::string upperBound;       // n / sin(π/(2n))
    bool sandwich = false;        // lowerBound < midValue < upperBound, checked at full precision
};

/// c_n rounded correctly to `digits` significant digits (at most 50).
inline std::string cn_highprec(int n, int digits) {
    if (digits < 1 || digits > 50) throw std::invalid_argument("digits must lie in 1..50");
    return selfadjoint_threshold(n, digits).decimal;
}

namespace detail {

inline precision_t table_precision(int digits, int guard_bits) {
    return static_cast<precision_t>(digits * 4 + 32 + guard_bits);
}

inline std::string render(const BigFloat& v, int digits) { return to_decimal(v.to_rational(), digits); }

/// Fills every column of the row at `digits` significant digits.
inline AsymptoticRow asymptotic_row(int n, int digits, int guard_bits) {
    const precision_t prec = table_precision(digits, guard_bits);
    const auto ts = cached_threshold_set(n);
    const ThresholdValue& top = ts->top();

    AsymptoticRow row;
    row.n = n;
    row.cn = top.decimal(digits);

    const BigFloat pi = bf::pi(prec);
    const BigFloat two_n_sq(static_cast<long>(2 * n * n), prec);
    const BigFloat lower = two_n_sq / pi;
    const BigFloat conj = bf::pow(lower, static_cast<unsigned long>(2 * n));
    const BigFloat cn(top.approximate(static_cast<long>(prec) + 8), prec);
    const BigFloat mid = bf::root(cn, static_cast<unsigned long>(2 * n));
    const BigFloat upper =
        BigFloat(static_cast<long>(n), prec) / bf::sin(pi / BigFloat(static_cast<long>(2 * n), prec));

    row.conjectureValue = render(conj, digits);
    row.lowerBound = render(lower, digits);
    row.midValue = render(mid, digits);
    row.upperBound = render(upper, digits);
    row.sandwich = lower < mid && mid < upper;
    return row;
}

}  // namespace detail

/// Rows 1..nMax comparing c_n with (2n²/π)^{2n}.
inline std::vector<AsymptoticRow> table_a2(int nMax, int digits = 6, int guard_bits = 0) {
    if (nMax < 1) throw std::invalid_argument("nMax must be at least 1");
    std::vector<AsymptoticRow> rows;
    for (int n = 1; n <= nMax; ++n) rows.push_back(detail::asymptotic_row(n, digits, guard_bits));
    return rows;
}

/// Rows 1..nMax of the bracket 2n²/π < c_n^{1/(2n)} < n / sin(π/(2n)).
inline std::vector<AsymptoticRow> table_a3(int nMax, int digits = 8, int guard_bits = 0) {
    if (nMax < 1) throw std::invalid_argument("nMax must be at least 1");
    std::vector<AsymptoticRow> rows;
    for (int n = 1; n <= nMax; ++n) rows.push_back(detail::asymptotic_row(n, digits, guard_bits));
    return rows;
}

}  // namespace eulerop
