#include <gtest/gtest.h>

#include "eccspec/integer.hpp"
#include "eccspec/polynomial.hpp"

using namespace eccspec;

namespace {

IntPolynomial p4_poly() { return IntPolynomial({16, 0, -17, 0, 1}); }

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("-1"), Rational(-1));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(IntPolynomial, CsvRoundTrip) {
  EXPECT_EQ(p4_poly().to_descending_csv(), "1,0,-17,0,16");
  EXPECT_EQ(IntPolynomial::from_descending_csv("1,0,-17,0,16"), p4_poly());
  EXPECT_EQ(IntPolynomial().to_descending_csv(), "0");
  EXPECT_THROW(IntPolynomial::from_descending_csv("1,x"), std::invalid_argument);
}

TEST(IntPolynomial, FactorsMultiplyOut) {
  const IntPolynomial f = IntPolynomial::linear_factor(-1) * IntPolynomial::linear_factor(1) *
                          IntPolynomial::linear_factor(-4) * IntPolynomial::linear_factor(4);
  EXPECT_EQ(f, p4_poly());
  EXPECT_EQ(IntPolynomial::linear_factor(2).pow(3), IntPolynomial({-8, 12, -6, 1}));
  EXPECT_EQ(IntPolynomial({1, 1}).pow(0), IntPolynomial::constant(1));
}

TEST(IntPolynomial, PrettyPrint) {
  EXPECT_EQ(p4_poly().to_pretty('x'), "x^4 - 17x^2 + 16");
  EXPECT_EQ(IntPolynomial({0, -1}).to_pretty('x'), "-x");
  EXPECT_EQ(IntPolynomial().to_pretty('x'), "0");
}

TEST(IntPolynomial, Evaluate) {
  EXPECT_EQ(p4_poly().evaluate(Integer(4)), 0);
  EXPECT_EQ(p4_poly().evaluate(Integer(2)), -36);
  EXPECT_EQ(p4_poly().evaluate(Rational(1, 2)), Rational(16) - Rational(17, 4) + Rational(1, 16));
  EXPECT_EQ(p4_poly().sign_at(Rational(0)), 1);
}

TEST(DivideExact, Quotients) {
  const auto q = divide_exact(p4_poly(), IntPolynomial({1, 1}));
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, IntPolynomial({16, -16, -1, 1}));
  EXPECT_FALSE(divide_exact(IntPolynomial({1, 0, 1}), IntPolynomial({1, 1})));
  EXPECT_FALSE(divide_exact(IntPolynomial({1, 1}), IntPolynomial({1, 0, 1})));
  EXPECT_FALSE(divide_exact(IntPolynomial({1, 1}), IntPolynomial({1, 2})));
  EXPECT_EQ(*divide_exact(IntPolynomial(), IntPolynomial({1, 1})), IntPolynomial());
  EXPECT_THROW(divide_exact(p4_poly(), IntPolynomial()), std::invalid_argument);
}

TEST(DivideExact, TableRowAtSixteen) {
  // (x+1)^11 (x+2)^3 (x^2 - 17x + 18)
  const IntPolynomial rest({18, -17, 1});
  const IntPolynomial fixed = IntPolynomial({1, 1}).pow(11) * IntPolynomial({2, 1}).pow(3);
  const auto q = divide_exact(fixed * rest, fixed);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, rest);
}

TEST(RootMultiplicity, CountsRepeatedRoots) {
  const IntPolynomial k3({-2, -3, 0, 1});
  EXPECT_EQ(root_multiplicity(k3, Rational(-1)), 2u);
  EXPECT_EQ(root_multiplicity(k3, Rational(2)), 1u);
  EXPECT_EQ(root_multiplicity(p4_poly(), Rational(-1)), 1u);
  EXPECT_EQ(root_multiplicity(p4_poly(), Rational(3)), 0u);
  EXPECT_EQ(root_multiplicity(IntPolynomial({-1, 2}).pow(3), Rational(1, 2)), 3u);
  EXPECT_THROW(root_multiplicity(IntPolynomial(), Rational(0)), std::invalid_argument);
}

TEST(Lagrange, Interpolates) {
  const RatPolynomial affine = lagrange_interpolate({{Rational(16), Rational(18)}, {Rational(17), Rational(20)}});
  EXPECT_EQ(affine, RatPolynomial({Rational(-14), Rational(2)}));
  EXPECT_EQ(lagrange_interpolate({{Rational(0), Rational(5)}}), RatPolynomial({Rational(5)}));
  const RatPolynomial square = lagrange_interpolate(
      {{Rational(1), Rational(1)}, {Rational(2), Rational(4)}, {Rational(3), Rational(9)}});
  EXPECT_EQ(square, RatPolynomial({Rational(0), Rational(0), Rational(1)}));
  EXPECT_THROW(lagrange_interpolate({}), std::invalid_argument);
  EXPECT_THROW(lagrange_interpolate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}), std::invalid_argument);
}

TEST(IntPolynomial, DigestDistinguishes) {
  EXPECT_EQ(p4_poly().digest(), IntPolynomial::from_descending_csv("1,0,-17,0,16").digest());
  EXPECT_NE(p4_poly().digest(), IntPolynomial({16, 0, -17, 0, 2}).digest());
}
