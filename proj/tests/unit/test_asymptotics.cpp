#include <eulerop/asymptotics.hpp>

#include <gtest/gtest.h>

using namespace eulerop;

namespace {

// Round a rendered decimal to the significant digits of a printed value.
std::string at_digits(const std::string& value, int digits) { return to_decimal(parse_rational(value), digits); }

}  // namespace

TEST(Asymptotics, HighPrecisionThresholds) {
    EXPECT_EQ(cn_highprec(3, 6), "36201.2");
    EXPECT_EQ(cn_highprec(5, 6), "1.04858e+12");
    EXPECT_EQ(cn_highprec(12, 6), "1.24167e+47");
    EXPECT_EQ(cn_highprec(3, 30).substr(0, 17), "36201.16452833566");
    EXPECT_THROW(cn_highprec(3, 51), std::invalid_argument);
}

TEST(Asymptotics, TableTwoRows) {
    auto rows = table_a2(6);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].cn, "0.750000");
    EXPECT_EQ(at_digits(rows[0].conjectureValue, 5), "0.40529");
    EXPECT_EQ(rows[1].cn, "45.0000");
    EXPECT_EQ(rows[1].conjectureValue, "42.0495");
    EXPECT_EQ(rows[5].cn, "2.10674e+16");
    EXPECT_EQ(rows[5].conjectureValue, "2.09987e+16");
}

TEST(Asymptotics, RatioDecreasesTowardOne) {
    auto rows = table_a2(12, 12);
    double prev = 1e300;
    for (std::size_t k = 2; k < rows.size(); ++k) {
        double ratio = Rational(parse_rational(rows[k].cn) / parse_rational(rows[k].conjectureValue)).get_d();
        EXPECT_LT(ratio, prev);
        EXPECT_GT(ratio, 1.0);
        prev = ratio;
    }
    const auto& r12 = table_a3(12, 12).back();
    EXPECT_LT(Rational(parse_rational(r12.midValue) / parse_rational(r12.lowerBound)).get_d(), 1.0001);
}

TEST(Asymptotics, TableThreeRowsAndSandwich) {
    auto rows = table_a3(10);
    EXPECT_EQ(at_digits(rows[0].lowerBound, 7), "0.6366198");
    EXPECT_EQ(at_digits(rows[0].midValue, 7), "0.8660254");
    EXPECT_EQ(rows[0].upperBound, "1.0000000");
    EXPECT_EQ(rows[9].lowerBound, "63.661977");
    EXPECT_EQ(rows[9].midValue, "63.664305");
    EXPECT_EQ(rows[9].upperBound, "63.924532");
    for (const auto& r : rows) EXPECT_TRUE(r.sandwich) << r.n;
}

TEST(Asymptotics, DigitsStableUnderGuardBits) {
    auto base = table_a3(8);
    auto guarded = table_a3(8, 8, 16);
    for (std::size_t k = 0; k < base.size(); ++k) {
        EXPECT_EQ(base[k].lowerBound, guarded[k].lowerBound);
        EXPECT_EQ(base[k].midValue, guarded[k].midValue);
        EXPECT_EQ(base[k].upperBound, guarded[k].upperBound);
    }
    auto a = table_a2(8);
    auto b = table_a2(8, 6, 16);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].conjectureValue, b[k].conjectureValue);
}

TEST(Asymptotics, RejectsEmptyTables) {
    EXPECT_THROW(table_a2(0), std::invalid_argument);
    EXPECT_THROW(table_a3(0), std::invalid_argument);
}
