#include <eulerop/figure.hpp>

#include <gtest/gtest.h>

using namespace eulerop;

namespace {

bool close(const BigFloat& a, const BigFloat& b) { return bf::abs(a - b) < BigFloat(1e-40, a.precision()); }

}  // namespace

TEST(Figure, CouplingFromAxis) {
    EXPECT_EQ(coupling_from_axis(3, Rational(2)), 64);
    EXPECT_EQ(coupling_from_axis(3, Rational(-2)), -64);
    EXPECT_EQ(coupling_from_axis(1, make_rational(1, 2)), make_rational(1, 4));
}

TEST(Figure, OriginGivesIntegerRealParts) {
    auto p = figure_point(3, Rational(0));
    ASSERT_EQ(p.reAlpha.size(), 6u);
    for (int j = 0; j < 6; ++j) {
        const BigFloat& a = p.reAlpha[static_cast<std::size_t>(j)];
        EXPECT_TRUE(close(a, BigFloat(static_cast<long>(j), a.precision())));
    }
    for (const auto& b : p.reBeta) EXPECT_TRUE(close(b, BigFloat(make_rational(5, 2), b.precision())));
}

TEST(Figure, LargePositiveCouplingPairsMiddleRoots) {
    auto p = figure_point(3, Rational(8));  // c = 8^6
    const auto& a = p.reAlpha;
    EXPECT_TRUE(close(a[1], a[2]));
    EXPECT_TRUE(close(a[3], a[4]));
    EXPECT_FALSE(close(a[0], a[1]));
    EXPECT_FALSE(close(a[4], a[5]));
}

TEST(Figure, LargeNegativeCouplingGivesThreePairs) {
    auto p = figure_point(3, Rational(-8));
    const auto& a = p.reAlpha;
    EXPECT_TRUE(close(a[0], a[1]));
    EXPECT_TRUE(close(a[2], a[3]));
    EXPECT_TRUE(close(a[4], a[5]));
    EXPECT_FALSE(close(a[1], a[2]));
}

TEST(Figure, DataFollowsTheGrid) {
    std::vector<Rational> xs{Rational(-1), Rational(0), Rational(1)};
    auto rows = figure1_data(2, xs);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].c, -1);
    EXPECT_EQ(rows[2].c, 1);
    EXPECT_EQ(rows[2].reAlpha.size(), 4u);
}
