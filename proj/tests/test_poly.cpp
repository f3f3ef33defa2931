#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace fdcalc;
using namespace fdcalc::test;

TEST(Poly, AdditionOfSharpTripleGivesLinearPolynomial) {
  P a = z() * (z() - c(1));
  P b = -((z() - c(4)) * (z() - c(5)));
  EXPECT_EQ(a + b, ipoly({-20, 8}));
}

TEST(Poly, RingBasics) {
  P p = ipoly({1, 2, 3});
  EXPECT_EQ(p + P(), p);
  EXPECT_EQ((z() - c(1)) * (z() + c(1)), ipoly({-1, 0, 1}));
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Poly, ZeroHasMinusInfinityDegree) {
  EXPECT_TRUE(P().degree().is_minus_infinity());
  EXPECT_THROW(P().degree().value(), Error);
  EXPECT_EQ(P().degree() + Degree(3), Degree());
  EXPECT_LT(P().degree(), c(7).degree());
  EXPECT_EQ(c(7).degree(), Degree(0));
}

TEST(Poly, ExactDivision) {
  P z2z1 = z() * z() * (z() - c(1));
  EXPECT_EQ(divexact(z2z1, z() * (z() - c(1))), z());
  EXPECT_EQ(divexact(ipoly({0, 1, 1}), z()), ipoly({1, 1}));
  try {
    divexact(ipoly({0, 0, 0, 1}), z() - c(1));
    FAIL();
  } catch (const NotDivisible& e) {
    EXPECT_EQ(e.remainder(), "1");
  }
  EXPECT_THROW(divmod(z(), P()), DivisionByZero);
}

TEST(Poly, GcdExamples) {
  P f = z() * (z() - c(1)) * (z() - c(2));
  P g = (z() - c(2)) * (z() - c(3)) * (z() - c(4));
  EXPECT_EQ(gcd(f, g), z() - c(2));
  EXPECT_EQ(gcd(ipoly({2, 4}), P()), z() + P(q(1, 2)));
  EXPECT_EQ(gcd(z() * z(), z() * z() * z()), z() * z());
  EXPECT_THROW(gcd(P(), P()), Error);
}

TEST(Poly, Evaluation) {
  P f = z() * (z() - c(1)) * (z() - c(2));
  EXPECT_EQ(f(X(3L)), X(6L));
  EXPECT_EQ(ipoly({7, 1, 1})(X(0L)), X(7L));
  EXPECT_EQ((pow(z(), 2) * pow(z() - c(1), 3))(X(1L)), X(0L));
}

TEST(Poly, ExpandFactoredForm) {
  EXPECT_EQ(expand(roots(1, {{0, 2}, {1, 1}, {2, 1}})), ipoly({0, 0, 2, -3, 1}));
}

TEST(Poly, FactorOverQuadraticExtension) {
  FP f = factor(ipoly({-2, 0, 1}));
  ASSERT_EQ(f.roots.size(), 2u);
  EXPECT_EQ(f.roots[0].root * f.roots[0].root, X(2L));
  EXPECT_EQ(f.roots[0].root + f.roots[1].root, X(0L));
}

TEST(Poly, FactorRejectsIrreducibleCubic) {
  EXPECT_THROW(factor(ipoly({-2, 0, 0, 1})), RootsUnavailable);
  EXPECT_THROW(factor(ipoly({1, 1, 0, 1})), RootsUnavailable);
}

TEST(Poly, FactorUsesHints) {
  const X s = X::sqrt(Rational(2));
  P p = (z() - P(s)) * (z() + P(s)) * (z() - c(3)) * (z() - P(X::imaginary_unit()));
  FP f = factor(p, {X::imaginary_unit()});
  EXPECT_EQ(expand(f), p);
  EXPECT_EQ(f.degree(), 4u);
}

TEST(Poly, ClassicalRadical) {
  EXPECT_EQ(classical_rad(roots(1, {{0, 2}, {1, 3}})), z() * (z() - c(1)));
  EXPECT_EQ(classical_rad(roots(5, {})), c(1));
  FP abc = roots(-32, {{0, 1}, {1, 1}, {4, 1}, {5, 1}});
  abc.roots.push_back({q(5, 2), 1});
  abc = normalized(abc);
  EXPECT_EQ(classical_rad(abc).degree(), Degree(5));
}

TEST(Poly, PrintsInParseableDescendingForm) {
  EXPECT_EQ(to_string(ipoly({0, 2, -3, 1})), "z^3 - 3*z^2 + 2*z");
  EXPECT_EQ(to_string(P()), "0");
  EXPECT_EQ(to_string(P(q(-1, 2)) * z()), "-1/2*z");
}

TEST(PolyProperties, DegreeOfProductIsSumOfDegrees) {
  RandomSource rs(3);
  for (int n = 0; n < 10000; ++n) {
    P a = random_poly(rs, 6), b = random_poly(rs, 6);
    if (a.is_zero() || b.is_zero()) continue;
    ASSERT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(PolyProperties, EuclideanGcdMatchesRootMultiplicities) {
  RandomSource rs(5);
  const RootGrid grid{-3, 3, 1};
  for (int n = 0; n < 1000; ++n) {
    FP f = random_chain_poly(rs, 3, 3, grid), g = random_chain_poly(rs, 3, 3, grid);
    ASSERT_EQ(gcd(expand(f), expand(g)), factored_gcd(f, g));
  }
}

TEST(PolyProperties, ExpandAfterFactorIsIdentity) {
  RandomSource rs(7);
  int factored = 0;
  for (int n = 0; n < 1000; ++n) {
    P p = random_poly(rs, 4);
    if (p.is_zero()) continue;
    try {
      ASSERT_EQ(expand(factor(p)), p) << to_string(p);
      ++factored;
    } catch (const RootsUnavailable&) {
    }
  }
  EXPECT_GT(factored, 300);
}

TEST(NumericRoots, AberthRecoversRootsAndClustersMultiplicities) {
  const unsigned prec = 256;
  P p = expand(roots(2, {{1, 2}, {-3, 1}, {4, 1}}));
  auto f = factor(to_numeric(p, prec), Tolerance{1e-30});
  ASSERT_EQ(f.degree(), 4u);
  ASSERT_EQ(f.roots.size(), 3u);
  unsigned mult_at_one = 0;
  for (const auto& r : f.roots)
    if (near_zero(r.root - NumericScalar(1L, prec), Tolerance{1e-30})) mult_at_one = r.multiplicity;
  EXPECT_EQ(mult_at_one, 2u);
}
