#include <gtest/gtest.h>

#include <type_traits>

#include "test_util.hpp"

using namespace fdcalc;
using namespace fdcalc::test;

namespace {

X sqrt_of(long n) { return X::sqrt(Rational(n)); }
const X I = X::imaginary_unit();

template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };

}  // namespace

TEST(ExactScalar, RationalizesReciprocalOfSquareRoot) {
  EXPECT_EQ((X(1L) / sqrt_of(2)).to_string(), "1/2*sqrt(2)");
}

TEST(ExactScalar, ProductOfSquareRootsCombinesRadicands) {
  EXPECT_EQ(sqrt_of(2) * sqrt_of(3), sqrt_of(6));
  EXPECT_EQ((sqrt_of(2) * sqrt_of(3)).to_string(), "1/1*sqrt(6)");
  EXPECT_EQ(sqrt_of(6) * sqrt_of(2), X(2L) * sqrt_of(3));
}

TEST(ExactScalar, ImaginaryUnitSquaresToMinusOne) {
  EXPECT_EQ(I * I, X(-1L));
  EXPECT_EQ(sqrt_of(-4), X(2L) * I);
}

TEST(ExactScalar, SquareRootExtractsSquareParts) {
  EXPECT_EQ(sqrt_of(8), X(2L) * sqrt_of(2));
  EXPECT_EQ(X::sqrt(Rational(1, 2)), q(1, 2) * sqrt_of(2));
  EXPECT_EQ(sqrt_of(9), X(3L));
  EXPECT_TRUE(X::sqrt(Rational(0)).is_zero());
}

TEST(ExactScalar, CanonicalTextOrdersKeysByGeneratorCount) {
  X a = q(-3, 4) + q(1, 2) * sqrt_of(2) + I * sqrt_of(6);
  EXPECT_EQ(a.to_string(), "-3/4 + 1/2*sqrt(2) + 1/1*i*sqrt(6)");
  EXPECT_EQ(X(0L).to_string(), "0");
  EXPECT_EQ(X(5L).to_string(), "5/1");
  X b = sqrt_of(3) + sqrt_of(2) + I;
  EXPECT_EQ(b.to_string(), "1/1*i + 1/1*sqrt(2) + 1/1*sqrt(3)");
}

TEST(ExactScalar, IntegerTest) {
  EXPECT_EQ(is_integer(X(5L)), Integer(5));
  EXPECT_FALSE(is_integer(q(1, 2)));
  EXPECT_EQ(is_integer(sqrt_of(2) - sqrt_of(2) + X(3L)), Integer(3));
  EXPECT_FALSE(is_integer(X(3L) + sqrt_of(2)));
}

TEST(ExactScalar, DivisionByZeroThrows) {
  EXPECT_THROW(X(1L) / X(0L), DivisionByZero);
  EXPECT_THROW((sqrt_of(2) - sqrt_of(2)).inverse(), DivisionByZero);
}

TEST(ExactScalar, InverseOfMultiGeneratorElement) {
  X a = X(1L) + sqrt_of(2) + sqrt_of(3) + I * sqrt_of(5);
  EXPECT_EQ(a * a.inverse(), X(1L));
}

TEST(ExactScalar, ExactSquareRootInsideTower) {
  // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
  auto r = exact_sqrt(X(3L) + X(2L) * sqrt_of(2));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, X(3L) + X(2L) * sqrt_of(2));
  // sqrt(2i) = 1 + i
  auto s = exact_sqrt(X(2L) * I);
  ASSERT_TRUE(s);
  EXPECT_EQ(*s * *s, X(2L) * I);
}

TEST(ExactScalar, FieldAxiomsOnRandomElements) {
  RandomSource rs(11);
  for (int n = 0; n < 10000; ++n) {
    const X a = random_scalar(rs), b = random_scalar(rs), c = random_scalar(rs);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      ASSERT_EQ(a * a.inverse(), X(1L)) << a.to_string();
    }
  }
}

TEST(ExactScalar, MixingBackendsDoesNotCompile) {
  static_assert(!Addable<ExactScalar, NumericScalar>);
  static_assert(!Addable<NumericScalar, ExactScalar>);
  static_assert(Addable<ExactScalar, ExactScalar>);
  static_assert(Scalar<ExactScalar> && Scalar<NumericScalar>);
}

TEST(NumericScalar, PrecisionIsInheritedAndNeverDowngraded) {
  NumericScalar a(1L, 256), b(2L, 64);
  EXPECT_EQ((a + b).precision(), 256u);
  EXPECT_EQ((b * b).precision(), 64u);
  EXPECT_GE(NumericScalar(1L, 10).precision(), kMinPrecision);
}

TEST(NumericScalar, DivisionByZeroThrows) {
  EXPECT_THROW(NumericScalar(1L, 128) / NumericScalar(0L, 128), DivisionByZero);
}

TEST(NumericScalar, IntegerTestUsesTolerance) {
  NumericScalar a = NumericScalar::from_rational(Rational(3), 128) +
                    NumericScalar(Real::pow2(-100, 128), Real(0L, 128));
  EXPECT_EQ(is_integer(a, Tolerance{1e-20}), Integer(3));
  EXPECT_FALSE(is_integer(a, Tolerance{1e-40}));
}

TEST(NumericScalar, AmbiguousIntegerOffsetThrows) {
  const unsigned prec = 128;  // default tolerance 2^-64, ambiguity band up to 2^-32
  NumericScalar near(Real(2L, prec) + Real::pow2(-40, prec), Real(0L, prec));
  EXPECT_THROW(integer_offset(near), AmbiguousShift);
  NumericScalar exactish(Real(2L, prec) + Real::pow2(-100, prec), Real(0L, prec));
  EXPECT_EQ(integer_offset(exactish), 2L);
  NumericScalar far(Real(2L, prec) + Real::pow2(-3, prec), Real(0L, prec));
  EXPECT_FALSE(integer_offset(far));
}

TEST(NumericScalar, EmbeddingIsMultiplicative) {
  RandomSource rs(23);
  const unsigned prec = 128;
  const Real bound = Real::pow2(8 - static_cast<long>(prec), prec);
  for (int n = 0; n < 2000; ++n) {
    const X a = random_scalar(rs, 1000), b = random_scalar(rs, 1000);
    const NumericScalar lhs = to_numeric(a * b, prec);
    const NumericScalar rhs = to_numeric(a, prec) * to_numeric(b, prec);
    const Real scale = Real(1L, prec) + abs(lhs);
    ASSERT_TRUE(abs(lhs - rhs) / scale < bound) << a.to_string() << " * " << b.to_string();
  }
}
