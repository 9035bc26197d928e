#pragma once

// The Hurwitz matrix H_{2n}(c) over ℚ[c], its determinant, and the
// degree-(n-1) factor h_{n-1} whose roots are the non-distinguished
// thresholds.
//
// Normalization: h_{n-1} is the polynomial that equals the Orlando product
// ∏_{j<k} [(α_j + 1/2) + (α_k + 1/2)] with no extra sign. With the layout of
// hurwitz_layout.hpp the determinant then factors as
//     det H_{2n}(c) = (-1)^n · [q_0 + (-1)^n c] · h_{n-1}(c),
// the sign coming from Orlando's (-1)^{2n(2n-1)/2} factor.

#include "hurwitz_layout.hpp"
#include "poly_matrix.hpp"
#include "rootcount.hpp"

#include <cstddef>
#include <vector>

namespace eulerop {

struct HurwitzFamily {
    int n = 0;
    QPolyMatrix matrix{0, 0};  // 2n×2n, entries of degree ≤ 1 in c
    QPolynomial det;           // degree n in c
    QPolynomial hPoly;         // degree n-1 in c
    QPolynomial linearFactor;  // q_0 + (-1)^n c

    /// (-1)^n, relating det to linearFactor · hPoly.
    int orientation() const { return n % 2 == 0 ? 1 : -1; }
};

/// H_{2n}(c) with entries in ℚ[c]; c appears only through q_0 + (-1)^n c.
inline QPolyMatrix hurwitz_matrix(const ShiftedCoeffs& sc) {
    const auto dim = static_cast<std::size_t>(2 * sc.n);
    QPolyMatrix m(dim, dim);
    const QPolynomial constant{sc.q[0], Rational(sc.n % 2 == 0 ? 1 : -1)};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (auto idx = hurwitz_coefficient_index(sc.n, i, j))
                m(i, j) = *idx == 0 ? constant : QPolynomial::constant(sc.q[static_cast<std::size_t>(*idx)]);
    return m;
}

inline HurwitzFamily build_hurwitz(int n) {
    require_order(n);
    const ShiftedCoeffs sc = shifted_coeffs(build_indicial(n));
    HurwitzFamily fam;
    fam.n = n;
    fam.matrix = hurwitz_matrix(sc);
    fam.linearFactor = QPolynomial{sc.q[0], Rational(n % 2 == 0 ? 1 : -1)};

    // Scaling every entry by 2^{2n} clears all denominators of the q_j, so the
    // elimination runs on integer polynomials; undo the scale afterwards.
    const std::size_t dim = fam.matrix.rows();
    const Rational scale(pow(Integer(2), static_cast<unsigned long>(2 * n)));
    std::vector<QPolynomial> scaled = fam.matrix.entries();
    for (auto& e : scaled) e *= scale;
    QPolynomial det = bareiss_determinant(std::move(scaled), dim);
    fam.det = det * make_rational(Integer(1), pow(Integer(2), static_cast<unsigned long>(2 * n * dim)));

    QPolynomial h = exact_divide(fam.det, fam.linearFactor);  // throws on a layout bug
    fam.hPoly = fam.orientation() == 1 ? h : -h;
    if (fam.hPoly.degree() != n - 1) throw invariant_violation("h_{n-1} does not have degree n-1");
    return fam;
}

/// ∏_{j<k} [(α_j + 1/2) + (α_k + 1/2)] over the numerically computed roots,
/// repeated by multiplicity.
inline Complex orlando_product(int n, const Rational& c, precision_t precision = kDefaultPrecision) {
    NumericOptions opt;
    opt.precision = precision;
    RootInventory inv = numeric_roots(n, c, opt);
    std::vector<Complex> alpha = inv.labeled();
    const precision_t prec = inv.precision;
    const Complex one(Rational(1), prec);
    Complex prod = one;
    for (std::size_t j = 0; j < alpha.size(); ++j)
        for (std::size_t k = j + 1; k < alpha.size(); ++k) prod *= alpha[j] + alpha[k] + one;
    return prod;
}

/// |orlando_product - h_{n-1}(c)| / max(1, |h_{n-1}(c)|)
inline BigFloat orlando_check(const HurwitzFamily& fam, const Rational& c, precision_t precision = kDefaultPrecision) {
    Complex prod = orlando_product(fam.n, c, precision);
    const precision_t prec = prod.precision();
    BigFloat h(fam.hPoly(c), prec);
    BigFloat diff = bf::hypot(prod.re - h, prod.im);
    BigFloat scale = bf::abs(h);
    const BigFloat one(1L, prec);
    if (scale < one) scale = one;
    return diff / scale;
}

inline BigFloat orlando_check(int n, const Rational& c, precision_t precision = kDefaultPrecision) {
    return orlando_check(build_hurwitz(n), c, precision);
}

}  // namespace eulerop
