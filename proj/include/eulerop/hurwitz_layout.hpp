#pragma once

// Interleaved Hurwitz layout shared by the symbolic (entries in ℚ[c]) and the
// pointwise (entries in ℚ) matrices.
//
// With a_k = q_{2n-k} (a_0 = q_{2n} = 1 is the leading coefficient), entry
// (i, j), 1-based, is a_{2j-i}; indices outside 0..2n give zero. Odd rows
// therefore start q_{2n-1}, q_{2n-3}, ... and even rows q_{2n}, q_{2n-2}, ...
// The constant coefficient q_0 + (-1)^n c (index k = 2n) only ever lands in
// even rows, and the last column is zero except for its bottom entry.

#include "indicial.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eulerop {

/// Index j of the shifted coefficient q_j at Hurwitz position (row, col),
/// both 0-based, or nullopt for a structural zero.
inline std::optional<int> hurwitz_coefficient_index(int n, std::size_t row, std::size_t col) {
    const int k = 2 * (static_cast<int>(col) + 1) - (static_cast<int>(row) + 1);
    if (k < 0 || k > 2 * n) return std::nullopt;
    return 2 * n - k;
}

/// H_{2n}(c) at a fixed rational c, row-major.
inline std::vector<Rational> hurwitz_matrix_at(const ShiftedCoeffs& sc, const Rational& c) {
    const auto dim = static_cast<std::size_t>(2 * sc.n);
    std::vector<Rational> m(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (auto idx = hurwitz_coefficient_index(sc.n, i, j))
                m[i * dim + j] = *idx == 0 ? sc.constant_term(c) : sc.q[static_cast<std::size_t>(*idx)];
    return m;
}

}  // namespace eulerop
