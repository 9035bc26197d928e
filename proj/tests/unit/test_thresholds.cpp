#include <eulerop/thresholds.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace eulerop;

TEST(Thresholds, ExactSetsForNOneAndTwo) {
    auto t1 = threshold_set(1);
    ASSERT_EQ(t1.entries.size(), 1u);
    EXPECT_EQ(t1.entries[0].exact(), make_rational(3, 4));
    auto t2 = threshold_set(2);
    ASSERT_EQ(t2.entries.size(), 2u);
    EXPECT_EQ(t2.entries[0].exact(), make_rational(-105, 16));
    EXPECT_EQ(t2.entries[1].exact(), Rational(45));
    EXPECT_EQ(t2.distinguished, 0u);
}

TEST(Thresholds, NThreeMatchesQuadraticAndDistinguishedValue) {
    auto ts = threshold_set(3);
    ASSERT_EQ(ts.entries.size(), 3u);
    EXPECT_EQ(ts.entries[1].exact(), make_rational(10395, 64));
    // the other two are the roots of 27c^2 - 958720c - 677376000, i.e.
    // 2240(214 ± 7√1009)/27
    QPolynomial quad{Rational(-677376000), Rational(-958720), Rational(27)};
    for (std::size_t k : {0u, 2u}) {
        auto enc = ts.entries[k].enclosure(make_rational(1, 1000000));
        EXPECT_NE(sign(quad(enc.first)), sign(quad(enc.second)));
    }
    double s = std::sqrt(1009.0);
    EXPECT_NEAR(ts.entries[0].approximate(60).get_d(), 2240.0 * (214 - 7 * s) / 27, 1e-8);
    EXPECT_NEAR(ts.entries[2].approximate(60).get_d(), 2240.0 * (214 + 7 * s) / 27, 1e-6);
}

TEST(Thresholds, SelfAdjointThresholdDigits) {
    EXPECT_EQ(selfadjoint_threshold(1, 3).decimal, "0.750");
    EXPECT_EQ(selfadjoint_threshold(2, 2).decimal, "45");
    EXPECT_EQ(selfadjoint_threshold(3, 14).decimal, "36201.164528336");
    EXPECT_EQ(selfadjoint_threshold(3, 15).decimal, "36201.1645283357");
    EXPECT_EQ(selfadjoint_threshold(4, 16).decimal, "117089256.9368802");
    auto s = selfadjoint_threshold(3, 10);
    EXPECT_FALSE(s.exact);
    EXPECT_LT(s.lo, s.hi);
    EXPECT_THROW(selfadjoint_threshold(3, 0), std::invalid_argument);
}

TEST(Thresholds, StructureForSmallN) {
    for (int n = 1; n <= 8; ++n) {
        auto ts = threshold_set(n);
        ASSERT_EQ(static_cast<int>(ts.entries.size()), n);
        for (std::size_t k = 1; k < ts.entries.size(); ++k) {
            auto lo = ts.entries[k - 1].approximate(64), hi = ts.entries[k].approximate(64);
            EXPECT_LT(lo, hi);
        }
        EXPECT_EQ(ts.distinguished + 1, static_cast<std::size_t>((n + 1) / 2));
        EXPECT_EQ(ts.entries[ts.distinguished].exact(), distinguished_threshold(n));
        int negatives = 0;
        for (const auto& e : ts.entries) negatives += e.compare(Rational(0)) > 0;
        EXPECT_EQ(negatives, n / 2);
        EXPECT_LE(ts.top().compare(q0_closed_form(n)), 0);
    }
}

TEST(Thresholds, ClassificationForNOne) {
    EXPECT_EQ(classify(1, make_rational(3, 4)), 1);
    EXPECT_EQ(classify(1, make_rational(74, 100)), 2);
    EXPECT_EQ(classify(1, Rational(-100)), 2);
    EXPECT_EQ(classify(1, Rational(100)), 1);
}

TEST(Thresholds, ClassificationForNTwoIncludingBoundaries) {
    EXPECT_EQ(classify(2, Rational(-1000)), 3);
    EXPECT_EQ(classify(2, make_rational(-105, 16)), 3);
    EXPECT_EQ(classify(2, make_rational(-105, 16) + make_rational(1, 1000000)), 4);
    EXPECT_EQ(classify(2, Rational(0)), 4);
    EXPECT_EQ(classify(2, Rational(45) - make_rational(1, 1000000)), 4);
    EXPECT_EQ(classify(2, Rational(45)), 2);
    EXPECT_EQ(classify(2, Rational(1000)), 2);
}

TEST(Thresholds, ClassificationForNThree) {
    auto ts = threshold_set(3);
    Rational c1 = ts.entries[0].approximate(80), c3 = ts.entries[2].approximate(80);
    EXPECT_EQ(classify(3, Rational(-1000)), 4);
    EXPECT_EQ(classify(3, Rational(-600)), 6);
    EXPECT_EQ(classify(3, make_rational(10395, 64)), 5);
    EXPECT_EQ(classify(3, make_rational(10395, 64) - make_rational(1, 1000)), 6);
    EXPECT_EQ(classify(3, Rational(200)), 5);
    EXPECT_EQ(classify(3, Rational(40000)), 3);
    EXPECT_EQ(classify(3, c1 - make_rational(1, 100)), 4);
    EXPECT_EQ(classify(3, c1 + make_rational(1, 100)), 6);
    EXPECT_EQ(classify(3, c3 + make_rational(1, 100)), 3);
    EXPECT_EQ(classify(3, c3 - make_rational(1, 100)), 5);
}

TEST(Thresholds, ClassificationAgreesWithRootCounting) {
    testing_support::RationalGen gen(31);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k < 20; ++k) {
            Rational c = gen.next(static_cast<long>(std::pow(10.0, 2 * n)), 13);
            EXPECT_EQ(classify(n, c), count_right(n, c).gt) << n << " " << c;
        }
}

TEST(Thresholds, DeficiencyAndSelfAdjointness) {
    EXPECT_EQ(deficiency_indices(2, Rational(0)), 2);
    EXPECT_EQ(deficiency_indices(2, Rational(45)), 0);
    EXPECT_TRUE(is_essentially_selfadjoint(2, Rational(45)));
    EXPECT_FALSE(is_essentially_selfadjoint(2, make_rational(449, 10)));
    EXPECT_TRUE(is_essentially_selfadjoint(3, Rational(36202)));
    EXPECT_FALSE(is_essentially_selfadjoint(3, Rational(36201)));
}

TEST(Thresholds, BandTablesCoverTheLine) {
    auto b1 = band_table(1);
    ASSERT_EQ(b1.size(), 2u);
    EXPECT_EQ(b1[0].count, 2);
    EXPECT_TRUE(b1[1].lowClosed);
    EXPECT_EQ(b1[1].count, 1);

    auto b2 = band_table(2);
    ASSERT_EQ(b2.size(), 3u);
    EXPECT_EQ(b2[0].count, 3);
    EXPECT_TRUE(b2[0].highClosed);  // c = -105/16 belongs to the count-3 band
    EXPECT_EQ(b2[1].count, 4);
    EXPECT_FALSE(b2[1].lowClosed);
    EXPECT_FALSE(b2[1].highClosed);
    EXPECT_EQ(b2[2].count, 2);
    EXPECT_TRUE(b2[2].lowClosed);

    for (int n = 1; n <= 5; ++n) {
        auto bands = band_table(n);
        EXPECT_EQ(static_cast<int>(bands.size()), n + 1);
        EXPECT_FALSE(bands.front().low.has_value());
        EXPECT_FALSE(bands.back().high.has_value());
        // each boundary is closed on exactly one side
        for (std::size_t k = 1; k < bands.size(); ++k) EXPECT_NE(bands[k - 1].highClosed, bands[k].lowClosed);
        EXPECT_EQ(bands.back().count, n);
    }
}
