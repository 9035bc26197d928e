#include <eulerop/rootcount.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace eulerop;

TEST(RootCount, LinePairSplitsRealAndImaginaryParts) {
    // n = 1, c = 0: D(w - 1/2) = w^2 - 2w + 3/4; at w = iy: (3/4 - y^2) + i(-2y)
    auto lp = line_pair(1, Rational(0));
    EXPECT_EQ(lp.A, QPolynomial({make_rational(3, 4), 0, -1}));
    EXPECT_EQ(lp.B, QPolynomial({0, -2}));
}

TEST(RootCount, ExactCountsAwayFromThresholds) {
    auto r = count_halfplanes_exact(2, Rational(1));
    ASSERT_TRUE(std::holds_alternative<HalfPlaneCounts>(r));
    EXPECT_EQ(std::get<HalfPlaneCounts>(r), (HalfPlaneCounts{4, 0, 0}));
    auto s = count_halfplanes_exact(1, Rational(10));
    EXPECT_EQ(std::get<HalfPlaneCounts>(s), (HalfPlaneCounts{1, 0, 1}));
}

TEST(RootCount, DegenerateAtThresholds) {
    EXPECT_TRUE(std::holds_alternative<DegenerateSignal>(count_halfplanes_exact(2, Rational(45))));
    EXPECT_TRUE(std::holds_alternative<DegenerateSignal>(count_halfplanes_exact(1, make_rational(3, 4))));
    EXPECT_EQ(count_on_line(2, Rational(45)), 2);
    EXPECT_EQ(count_on_line(2, make_rational(-105, 16)), 1);  // simple root at -1/2, mirror at 7/2
    EXPECT_EQ(count_on_line(1, make_rational(3, 4)), 1);  // (z + 1/2)(z - 3/2)
}

TEST(RootCount, NumericRootsAtKnownPoints) {
    // c = 45, n = 2: roots -1/2 ± i√11/2 and 7/2 ± i√11/2
    auto inv = numeric_roots(2, Rational(45));
    EXPECT_EQ(inv.counts, (HalfPlaneCounts{2, 2, 0}));
    auto a = inv.labeled();
    ASSERT_EQ(a.size(), 4u);
    EXPECT_EQ(a[0].re.to_double(), -0.5);
    EXPECT_NEAR(std::abs(a[0].im.to_double()), std::sqrt(11.0) / 2, 1e-14);
    EXPECT_NEAR(a[3].re.to_double(), 3.5, 1e-14);
    // c = 1, n = 2: two double roots (3 ± √5)/2
    auto dbl = numeric_roots(2, Rational(1));
    ASSERT_EQ(dbl.roots.size(), 2u);
    EXPECT_EQ(dbl.roots[0].multiplicity, 2u);
    EXPECT_NEAR(dbl.roots[0].value.re.to_double(), (3 - std::sqrt(5.0)) / 2, 1e-14);
}

TEST(RootCount, RoutesAgreeOnRandomCouplings) {
    testing_support::RationalGen gen(99);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 15; ++trial) {
            Rational c = gen.next(static_cast<long>(std::pow(10.0, n + 1)), 7);
            auto exact = count_halfplanes_exact(n, c);
            auto numeric = numeric_roots(n, c);
            EXPECT_EQ(numeric.counts.total(), 2 * n);
            if (auto* e = std::get_if<HalfPlaneCounts>(&exact)) EXPECT_EQ(*e, numeric.counts) << n << " " << c;
            EXPECT_EQ(count_right(n, c), numeric.counts);
        }
}

TEST(RootCount, RealPartsOccurAtMostTwice) {
    testing_support::RationalGen gen(5);
    for (int n = 2; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            auto a = numeric_roots(n, gen.next(100000, 3)).labeled();
            for (std::size_t i = 0; i < a.size(); ++i) {
                int same = 0;
                for (const auto& b : a)
                    if (bf::abs(a[i].re - b.re) < BigFloat(1e-40, 256)) ++same;
                EXPECT_LE(same, 2);
            }
        }
}

TEST(RootCount, CanonicalOrderAndConjugateSymmetry) {
    auto inv = numeric_roots(3, Rational(-5000));
    auto a = inv.labeled();
    for (std::size_t k = 1; k < a.size(); ++k) EXPECT_TRUE(a[k - 1].re <= a[k].re);
    for (const auto& r : inv.roots) {
        bool found = false;
        for (const auto& s : inv.roots)
            if (s.value.re == r.value.re && s.value.im == -r.value.im) found = true;
        EXPECT_TRUE(found);
    }
}

TEST(RootCount, RejectsTooLowPrecision) {
    NumericOptions opt;
    opt.precision = 20;
    EXPECT_THROW(numeric_roots(2, Rational(1), opt), std::invalid_argument);
}
