#include <gtest/gtest.h>

#include "known_instances.hpp"
#include "test_util.hpp"

using namespace fdcalc;
using namespace fdcalc::test;

namespace {

const Hypothesis* find(const std::vector<Hypothesis>& hs, const std::string& name) {
  for (const auto& h : hs)
    if (h.name == name) return &h;
  return nullptr;
}

}  // namespace

TEST(MasonClassical, Examples) {
  auto t = parse_all(sharp_triple());
  auto r = mason_classical(t[0], t[1], t[2]);
  EXPECT_TRUE(r.equation_holds);
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 4);
  EXPECT_EQ(r.verdict, Verdict::holds);

  auto u = mason_classical(roots(1, {}), roots(1, {{0, 1}}), roots(1, {{-1, 1}}));
  EXPECT_TRUE(u.hypotheses_hold());
  EXPECT_EQ(u.lhs, 1);
  EXPECT_EQ(u.rhs, 1);
  EXPECT_TRUE(u.sharp);

  auto v = mason_classical(roots(1, {{0, 1}}), roots(1, {{0, 1}}), roots(2, {{0, 1}}));
  EXPECT_TRUE(v.equation_holds);
  ASSERT_NE(find(v.hypotheses, "relatively_prime"), nullptr);
  EXPECT_FALSE(find(v.hypotheses, "relatively_prime")->holds);
  EXPECT_EQ(v.verdict, Verdict::not_applicable);
}

TEST(MasonDelta, SharpTriple) {
  auto t = parse_all(sharp_triple());
  auto r = mason_delta(t[0], t[1], t[2]);
  EXPECT_TRUE(r.equation_holds);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_EQ(r.lhs, 2);
  EXPECT_EQ(r.rhs, 2);
  EXPECT_EQ(r.rhs_kappa, 2);
  EXPECT_EQ(r.slack, 0);
  EXPECT_TRUE(r.sharp);
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(MasonDelta, FallingSquares) {
  auto t = parse_all(falling_square_triple());
  auto r = mason_delta(falling_power(t[0], 2), falling_power(t[1], 2), falling_power(t[2], 2));
  EXPECT_TRUE(r.equation_holds);
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_EQ(r.verdict, Verdict::holds);
  EXPECT_GE(r.slack, 0);
}

TEST(MasonDelta, FailedEquationIsNotApplicable) {
  auto r = mason_delta(roots(1, {{0, 1}}), roots(1, {{3, 1}}), roots(1, {{7, 1}}));
  EXPECT_FALSE(r.equation_holds);
  EXPECT_EQ(r.verdict, Verdict::not_applicable);
}

TEST(MasonDeltaExt, QuinticChainsAreSharp) {
  auto fs = parse_all(quintic_chain_quadruple());
  auto r = mason_delta_ext(fs);
  EXPECT_TRUE(r.equation_holds);
  for (const char* h : {"pairwise_shifting_prime", "min_degree", "linearly_independent"}) {
    ASSERT_NE(find(r.hypotheses, h), nullptr) << h;
    EXPECT_TRUE(find(r.hypotheses, h)->holds) << h;
  }
  EXPECT_EQ(r.lhs, 5);
  EXPECT_EQ(rad_delta_q(product(fs), 2).degree(), Degree(8));
  EXPECT_EQ(r.rhs, 5);
  EXPECT_EQ(r.rhs2, 7);
  EXPECT_EQ(r.slack, 0);
  EXPECT_TRUE(r.sharp);
}

TEST(MasonDeltaExt, ThreeTermsReduceToDifferenceForm) {
  auto t = parse_all(sharp_triple());
  auto ext = mason_delta_ext(t);
  auto base = mason_delta(t[0], t[1], t[2]);
  EXPECT_EQ(ext.rhs, base.rhs);
  EXPECT_EQ(ext.rhs2, base.rhs);
  EXPECT_EQ(ext.lhs, base.lhs);
}

TEST(MasonDeltaExt, DependentSummandsFlagged) {
  // the first two summands are proportional
  std::vector<FP> gs{roots(1, {{0, 1}, {7, 1}}), roots(2, {{0, 1}, {7, 1}}), roots(1, {{2, 1}, {3, 1}})};
  gs.push_back(factor(expand(gs[0]) + expand(gs[1]) + expand(gs[2])));
  auto r = mason_delta_ext(gs);
  EXPECT_TRUE(r.equation_holds);
  ASSERT_NE(find(r.hypotheses, "linearly_independent"), nullptr);
  EXPECT_FALSE(find(r.hypotheses, "linearly_independent")->holds);
  EXPECT_EQ(r.verdict, Verdict::not_applicable);
}

TEST(Fermat, FallingSquaresHold) {
  auto t = parse_all(falling_square_triple());
  auto r = fermat_check(t[0], t[1], t[2], 2);
  EXPECT_TRUE(r.identity_holds);
  EXPECT_EQ(r.residual, "0");
  EXPECT_TRUE(r.hypotheses_hold());
  EXPECT_EQ(r.bound, Rational(2));
  EXPECT_TRUE(r.within_bound);
  EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(Fermat, CubeOfSameTripleFails) {
  auto t = parse_all(falling_square_triple());
  auto r = fermat_check(t[0], t[1], t[2], 3);
  EXPECT_FALSE(r.identity_holds);
  EXPECT_NE(r.residual, "0");
  EXPECT_TRUE(r.residual_sup > Real(0L, 128));
  EXPECT_EQ(r.verdict, Verdict::not_applicable);
}

TEST(Fermat, ConstantsAndLinearCase) {
  auto k = fermat_check(roots(3, {}), roots(4, {}), roots(7, {}), 1);
  EXPECT_TRUE(k.identity_holds);
  EXPECT_EQ(k.bound, Rational(1));

  auto l = fermat_check(roots(1, {{0, 1}}), roots(1, {}), roots(1, {{-1, 1}}), 1);
  EXPECT_TRUE(l.identity_holds);
  EXPECT_EQ(l.bound, Rational(1));
  EXPECT_TRUE(l.within_bound);
  EXPECT_THROW(fermat_check(roots(1, {}), roots(1, {}), roots(2, {}), 0), Error);
}

TEST(FermatMulti, UnitTriads) {
  for (const auto& srcs : {linear_unit_triad(), quadratic_unit_triad()}) {
    auto r = fermat_multi_check(parse_all(srcs), 2, true);
    EXPECT_TRUE(r.identity_holds) << r.residual;
    EXPECT_EQ(r.m, 3u);
    EXPECT_EQ(r.bound, Rational(5));
    EXPECT_TRUE(r.within_bound);
    EXPECT_TRUE(r.hypotheses_hold());
    EXPECT_EQ(r.verdict, Verdict::holds);
  }
}

TEST(FermatMulti, GeneralBoundIsExactRational) {
  // z + 1 + (-z) = 1 as a sum of first falling powers with right side 1^(1 falling).
  std::vector<FP> fs{roots(1, {{-1, 1}}), roots(-1, {{0, 1}}), roots(1, {})};
  auto r = fermat_multi_check(fs, 1, false);
  EXPECT_TRUE(r.identity_holds);
  EXPECT_EQ(r.bound, Rational(2));  // 4 - 1 - 2/2
  EXPECT_FALSE(r.hypotheses_hold());  // the right side is constant
}

TEST(Generator, DifferenceInequalityHoldsOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    auto fs = gen_mason_instance(2, seed);
    auto r = mason_delta(fs[0], fs[1], fs[2]);
    ASSERT_TRUE(r.equation_holds && r.hypotheses_hold());
    ASSERT_GE(r.slack, 0) << "seed " << seed;
    ASSERT_EQ(r.rhs_kappa, r.rhs);
  }
}

TEST(Generator, ExtendedInequalityHoldsOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto fs = gen_mason_instance(3, seed);
    auto r = mason_delta_ext(fs);
    ASSERT_TRUE(r.equation_holds && r.hypotheses_hold());
    ASSERT_GE(r.slack, 0) << "seed " << seed;
    ASSERT_GE(*r.slack2, r.slack);
  }
}

TEST(Generator, DeterministicPerSeed) {
  EXPECT_EQ(gen_mason_instance(2, 99), gen_mason_instance(2, 99));
  EXPECT_EQ(gen_mason_instance(3, 7), gen_mason_instance(3, 7));
}

TEST(Generator, EmptyFeasibleSetExhaustsBudget) {
  MasonInstanceOptions opt;
  opt.grid = {0, 0, 1};
  opt.min_degree = opt.max_degree = 2;
  opt.budget = 200;
  try {
    gen_mason_instance(3, 1, opt);
    FAIL();
  } catch (const SamplingBudgetExhausted& e) {
    EXPECT_EQ(e.attempts(), 200u);
  }
}

TEST(Reports, DeterministicForFixedInputs) {
  auto fs = parse_all(quintic_chain_quadruple());
  auto a = mason_delta_ext(fs), b = mason_delta_ext(fs);
  EXPECT_EQ(a.rhs, b.rhs);
  EXPECT_EQ(a.hypotheses.size(), b.hypotheses.size());
  for (std::size_t i = 0; i < a.hypotheses.size(); ++i) EXPECT_EQ(a.hypotheses[i].witness, b.hypotheses[i].witness);
}
