#include <eulerop/rational.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace eulerop;

TEST(Rational, MakeRationalNormalizes) {
    Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_THROW(make_rational(1, 0), math_error);
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("-105/16"), make_rational(-105, 16));
    EXPECT_EQ(parse_rational("45"), Rational(45));
    EXPECT_EQ(parse_rational("0.74"), make_rational(37, 50));
    EXPECT_EQ(parse_rational("-6.5625"), make_rational(-105, 16));
    EXPECT_EQ(parse_rational("1.5e-3"), make_rational(3, 2000));
    EXPECT_EQ(parse_rational("2E2"), Rational(200));
    EXPECT_EQ(parse_rational(" .5 "), make_rational(1, 2));
    EXPECT_EQ(parse_rational("3/-4"), make_rational(-3, 4));
}

TEST(Rational, RejectsMalformedLiterals) {
    for (const char* bad : {"", "-", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "0x10", "1/2/3", "--1"})
        EXPECT_FALSE(try_parse_rational(bad).has_value()) << bad;
    EXPECT_THROW(parse_rational("nope"), std::invalid_argument);
}

TEST(Rational, RoundTripThroughToString) {
    testing_support::RationalGen gen(7);
    for (int i = 0; i < 200; ++i) {
        Rational r = gen.next(1000000, 1000);
        EXPECT_EQ(parse_rational(to_string(r)), r);
    }
}

TEST(Rational, DoubleFactorial) {
    EXPECT_EQ(double_factorial(-1), 1);
    EXPECT_EQ(double_factorial(1), 1);
    EXPECT_EQ(double_factorial(7), 105);
    EXPECT_EQ(double_factorial(11), 10395);
    EXPECT_THROW(double_factorial(-3), math_error);
}

TEST(Rational, RoundSignificantTiesAwayFromZero) {
    auto [m, e] = round_significant(make_rational(125, 100), 2);
    EXPECT_EQ(m, 13);
    EXPECT_EQ(e, 0);
    auto [m2, e2] = round_significant(make_rational(-125, 100), 2);
    EXPECT_EQ(m2, -13);
    EXPECT_EQ(e2, 0);
    auto [m3, e3] = round_significant(Rational(9999), 3);
    EXPECT_EQ(m3, 100);
    EXPECT_EQ(e3, 4);
}

TEST(Rational, ToDecimalFormats) {
    EXPECT_EQ(to_decimal(make_rational(3, 4), 6), "0.750000");
    EXPECT_EQ(to_decimal(Rational(45), 6), "45.0000");
    EXPECT_EQ(to_decimal(make_rational(-105, 16), 4), "-6.563");
    EXPECT_EQ(to_decimal(Rational(1048576000000L), 6), "1.04858e+12");
    EXPECT_EQ(to_decimal(make_rational(1, 1000000000), 3), "1.00e-9");
    EXPECT_EQ(to_decimal(make_rational(1, 1000), 2), "0.0010");
    EXPECT_EQ(to_decimal(Rational(0), 5), "0");
}

TEST(Rational, Ilog2IsExactOnPowersOfTwo) {
    EXPECT_EQ(ilog2(Rational(1024)), 10);
    EXPECT_EQ(ilog2(make_rational(1, 8)), -3);
}
