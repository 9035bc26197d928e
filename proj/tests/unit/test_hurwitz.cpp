#include <eulerop/hurwitz.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace eulerop;

namespace {

Rational cofactor_det(const std::vector<Rational>& a, std::size_t n) {
    if (n == 1) return a[0];
    Rational total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[col] == 0) continue;
        std::vector<Rational> minor;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j != col) minor.push_back(a[i * n + j]);
        Rational term = a[col] * cofactor_det(minor, n - 1);
        total += col % 2 == 0 ? term : Rational(-term);
    }
    return total;
}

}  // namespace

TEST(Hurwitz, LayoutPlacesConstantTermInEvenRowsOnly) {
    for (int n = 1; n <= 5; ++n) {
        const auto dim = static_cast<std::size_t>(2 * n);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) {
                auto idx = hurwitz_coefficient_index(n, i, j);
                if (idx && *idx == 0) EXPECT_EQ(i % 2, 1u) << "0-based odd index is an even row";
                if (j + 1 == dim && i + 1 != dim) EXPECT_FALSE(idx.has_value());
            }
        EXPECT_EQ(*hurwitz_coefficient_index(n, dim - 1, dim - 1), 0);
        EXPECT_EQ(*hurwitz_coefficient_index(n, 0, 0), 2 * n - 1);
    }
}

TEST(Hurwitz, ThresholdPolynomialsForSmallN) {
    EXPECT_EQ(build_hurwitz(1).hPoly, QPolynomial({2}));
    EXPECT_EQ(build_hurwitz(2).hPoly, QPolynomial({2880, -64}));
    EXPECT_EQ(build_hurwitz(3).hPoly, QPolynomial({Rational(146313216000L), 207083520, -5832}));
}

TEST(Hurwitz, DeterminantFactorsThroughLinearFactor) {
    for (int n = 1; n <= 6; ++n) {
        auto fam = build_hurwitz(n);
        EXPECT_EQ(fam.det, fam.linearFactor * fam.hPoly * Rational(fam.orientation()));
        EXPECT_EQ(fam.det.degree(), n);
    }
}

TEST(Hurwitz, SymbolicDeterminantMatchesCofactorExpansion) {
    testing_support::RationalGen gen(6);
    for (int n = 1; n <= 3; ++n) {
        auto fam = build_hurwitz(n);
        auto sc = shifted_coeffs(build_indicial(n));
        for (int k = 0; k < 4; ++k) {
            Rational c = gen.next(1000, 9);
            EXPECT_EQ(fam.det(c), cofactor_det(hurwitz_matrix_at(sc, c), static_cast<std::size_t>(2 * n)));
        }
    }
}

TEST(Hurwitz, LeadingCoefficientLaw) {
    for (int n = 1; n <= 10; ++n) {
        Rational expected(pow(Integer(2L * n * n), static_cast<unsigned long>(n)));
        if ((n / 2) % 2 == 1) expected = -expected;
        EXPECT_EQ(build_hurwitz(n).hPoly.leading(), expected) << n;
    }
}

TEST(Hurwitz, OrlandoProductAtZeroIsAnExactInteger) {
    // at c = 0 the roots are 0..2n-1, so the product is ∏_{j<k} (j + k + 1)
    for (int n = 1; n <= 5; ++n) {
        Integer expected = 1;
        for (int j = 0; j < 2 * n; ++j)
            for (int k = j + 1; k < 2 * n; ++k) expected *= j + k + 1;
        EXPECT_EQ(build_hurwitz(n).hPoly(Rational(0)), Rational(expected)) << n;
    }
    EXPECT_EQ(build_hurwitz(3).hPoly(Rational(0)), Rational(146313216000L));
}

TEST(Hurwitz, OrlandoIdentityAtRandomCouplings) {
    testing_support::RationalGen gen(13);
    for (int n = 1; n <= 4; ++n) {
        auto fam = build_hurwitz(n);
        for (int k = 0; k < 5; ++k) {
            Rational c = gen.next(200000, 11);
            EXPECT_LT(orlando_check(fam, c).to_double(), 1e-40) << n << " " << c;
        }
    }
}
