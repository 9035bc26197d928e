#include <eulerop/polynomial.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace eulerop;

namespace {

QPolynomial random_poly(testing_support::RationalGen& gen, int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(gen.next(50, 7));
    if (c.back() == 0) c.back() = 1;
    return QPolynomial(c);
}

QPolynomial from_roots(const std::vector<Rational>& roots) {
    QPolynomial p = QPolynomial::constant(1);
    for (const auto& r : roots) p *= QPolynomial{-r, Rational(1)};
    return p;
}

}  // namespace

TEST(Polynomial, TrimsAndReportsDegree) {
    EXPECT_EQ(QPolynomial({1, 0, 0}).degree(), 0);
    EXPECT_EQ(QPolynomial().degree(), -1);
    EXPECT_TRUE(QPolynomial({0, 0}).is_zero());
}

TEST(Polynomial, ArithmeticAndEvaluation) {
    QPolynomial p{1, 2, 3};  // 1 + 2x + 3x^2
    QPolynomial q{-1, 1};
    EXPECT_EQ(p * q, QPolynomial({-1, -1, -1, 3}));
    EXPECT_EQ(p(Rational(2)), 17);
    EXPECT_EQ(p + (-p), QPolynomial());
    EXPECT_EQ(derivative(p), QPolynomial({2, 6}));
    EXPECT_EQ(to_string(p, "c"), "3*c^2 + 2*c + 1");
}

TEST(Polynomial, DivmodIdentityOnRandomInputs) {
    testing_support::RationalGen gen(11);
    for (int i = 0; i < 50; ++i) {
        QPolynomial a = random_poly(gen, static_cast<int>(gen.uniform(0, 8)));
        QPolynomial b = random_poly(gen, static_cast<int>(gen.uniform(0, 5)));
        auto [q, r] = divmod(a, b);
        EXPECT_EQ(q * b + r, a);
        EXPECT_LT(r.degree(), b.degree() == 0 ? 0 : b.degree());
    }
    EXPECT_THROW(divmod(QPolynomial{1}, QPolynomial()), math_error);
}

TEST(Polynomial, ExactDivideRejectsRemainder) {
    QPolynomial p = from_roots({Rational(1), Rational(2)});
    EXPECT_EQ(exact_divide(p, QPolynomial{-1, 1}), QPolynomial({-2, 1}));
    EXPECT_THROW(exact_divide(p, QPolynomial{-3, 1}), math_error);
}

TEST(Polynomial, GcdOfProductsWithCommonFactor) {
    testing_support::RationalGen gen(3);
    for (int i = 0; i < 30; ++i) {
        QPolynomial common = monic(random_poly(gen, 2));
        QPolynomial a = common * QPolynomial{gen.next(9, 1) + Rational(100), Rational(1)};
        QPolynomial b = common * QPolynomial{gen.next(9, 1) - Rational(100), Rational(1)};
        EXPECT_EQ(gcd(a, b), common);
    }
    EXPECT_EQ(gcd(QPolynomial{0, 3}, QPolynomial()), QPolynomial({0, 1}));
    EXPECT_THROW(gcd(QPolynomial(), QPolynomial()), math_error);
}

TEST(Polynomial, TaylorShiftMatchesComposition) {
    testing_support::RationalGen gen(5);
    for (int i = 0; i < 20; ++i) {
        QPolynomial p = random_poly(gen, 6);
        Rational a = gen.next(10, 4);
        QPolynomial s = taylor_shift(p, a);
        for (int k = 0; k < 5; ++k) {
            Rational x = gen.next(20, 3);
            EXPECT_EQ(s(x), p(x + a));
        }
    }
}

TEST(Polynomial, PrimitivePartScalesByAPositiveRational) {
    QPolynomial p{make_rational(2, 3), make_rational(-4, 9)};
    EXPECT_EQ(primitive_part(p), QPolynomial({3, -2}));
    EXPECT_EQ(primitive_part(QPolynomial{6, 4}), QPolynomial({3, 2}));
}

TEST(Polynomial, SquareFreeDecompositionRecoversMultiplicities) {
    QPolynomial a{-1, 1}, b{2, 1}, c{1, 0, 1};
    QPolynomial p = a * b * b * c * c * c * Rational(5);
    auto parts = square_free_decomposition(p);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0].multiplicity, 1u);
    EXPECT_EQ(parts[0].factor, a);
    EXPECT_EQ(parts[1].multiplicity, 2u);
    EXPECT_EQ(parts[1].factor, b);
    EXPECT_EQ(parts[2].multiplicity, 3u);
    EXPECT_EQ(parts[2].factor, c);
    EXPECT_EQ(square_free_part(p), monic(a * b * c));
}
