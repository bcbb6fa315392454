#include <gtest/gtest.h>

#include <cmath>

#include "gasket/eigen.hpp"
#include "gasket/matrix.hpp"
#include "gasket/numeric.hpp"
#include "gasket/polynomial.hpp"
#include "gasket/quadnum.hpp"

using namespace gasket;

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), rat(1, 2));
  EXPECT_EQ(parse_rational("0.25"), rat(1, 4));
  EXPECT_EQ(parse_rational("-7"), rat(-7));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(rat(3, 10), rat(4, 10)), rat(1, 3));
  EXPECT_EQ(simplest_between(rat(2), rat(2)), rat(2));
}

TEST(QuadNum, FieldArithmetic) {
  QuadNum a(rat(4, 3), rat(1, 15));
  QuadNum b = a * a.conj();
  EXPECT_TRUE(b.is_rational());
  EXPECT_EQ(b.p(), a.norm());
  QuadNum c = a / a;
  EXPECT_EQ(c, QuadNum(1));
  EXPECT_EQ(pow(a, 3), a * a * a);
  EXPECT_NEAR(a.to_double(), 4.0 / 3 + std::sqrt(205.0) / 15, 1e-15);
}

TEST(QuadNum, OrderingUsesExactSign) {
  QuadNum x(rat(-7, 6), rat(1, 6));  // about 1.22
  EXPECT_GT(x, QuadNum(rat(6, 5)));
  EXPECT_LT(x, QuadNum(rat(5, 4)));
  EXPECT_EQ(x.sign(), 1);
}

TEST(QuadNum, MixedRadicandsRejected) {
  QuadNum a(rat(1), rat(1), 2);
  QuadNum b(rat(1), rat(1), 3);
  EXPECT_THROW(a + b, std::domain_error);
}

TEST(Poly, ProductAndMean) {
  Poly a = Poly::from_rationals({rat(0), rat(2, 3), rat(1, 3)});
  Poly b = a * a;
  EXPECT_EQ(b.total(), rat(1));
  EXPECT_EQ(b.mean(), 2 * a.mean());
  EXPECT_EQ(a.mean(), rat(4, 3));
}

TEST(Eigen, CharacteristicPolynomialOfTriangular) {
  Matrix<Rational> m = {{rat(2), rat(1)}, {rat(0), rat(3)}};
  RatPoly p = char_poly(m);
  EXPECT_EQ(p, RatPoly({rat(6), rat(-5), rat(1)}));
  AlgebraicValue d = dominant_eigenvalue(m);
  ASSERT_TRUE(d.exact);
  EXPECT_EQ(d.value, QuadNum(3));
}

TEST(Eigen, QuadraticDominantRootIsExact) {
  // x^2 - x - 1: golden ratio.
  Matrix<Rational> m = {{rat(1), rat(1)}, {rat(1), rat(0)}};
  AlgebraicValue d = dominant_eigenvalue(m);
  ASSERT_TRUE(d.exact);
  EXPECT_EQ(d.value.p(), rat(1, 2));
  EXPECT_EQ(d.value.q(), rat(1, 2));
  EXPECT_EQ(d.value.radicand(), 5);
}

TEST(Eigen, PerronVectorsAreNormalized) {
  Matrix<Rational> m = {{rat(1), rat(2)}, {rat(3), rat(2)}};
  PerronData p = perron(m);
  EXPECT_EQ(p.value.value, QuadNum(4));
  QuadNum s = p.left[0] + p.left[1];
  EXPECT_EQ(s, QuadNum(1));
  EXPECT_EQ(p.left[0] * p.right[0] + p.left[1] * p.right[1], QuadNum(1));
}

TEST(Matrix, DeterminantFractionFree) {
  Matrix<Integer> m = {{Integer(2), Integer(-1), Integer(0)}, {Integer(-1), Integer(2), Integer(-1)}, {Integer(0), Integer(-1), Integer(2)}};
  EXPECT_EQ(determinant(m), 4);
}
