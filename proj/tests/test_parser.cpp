#include <gtest/gtest.h>

#include <string>

#include "test_util.hpp"

using namespace fdcalc;
using namespace fdcalc::test;

TEST(Parser, FallingPowerNode) {
  Expr e = parse("ff(z,3)");
  EXPECT_EQ(e.kind, Expr::Kind::ff);
  EXPECT_EQ(e.k, 3);
  ASSERT_EQ(e.children.size(), 1u);
  EXPECT_EQ(e.children[0].kind, Expr::Kind::var);
  EXPECT_EQ(eval_expr(e), ipoly({0, 2, -3, 1}));
}

TEST(Parser, SurdCoefficients) {
  const X s = X::sqrt(Rational(2));
  P expect = P(q(-1, 2) * s) * z() * z() + z() + P(q(1, 2) * s);
  EXPECT_EQ(parse_poly("-(1/2)*(sqrt(2)*z^2 - 2*z - sqrt(2))"), expect);
}

TEST(Parser, SyntaxErrorCarriesOffset) {
  try {
    parse("z + * 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_NE(std::string(e.what()).find("offset 4"), std::string::npos);
  }
}

TEST(Parser, RejectsMalformedInput) {
  for (const char* bad : {"2z", "", "z +", "(z", "ff(z)", "ff(z,-1)", "sqrt(z)", "z^", "z/2", "(z+1)/2",
                          "shift(z,)", "1/0", "zz", "roots(1; 2)", "roots(1; z:1)"}) {
    EXPECT_THROW(parse_poly(bad), Error) << bad;
  }
}

TEST(Parser, NormalizesSquareRoots) {
  EXPECT_EQ(parse_scalar("sqrt(8)"), X(2L) * X::sqrt(Rational(2)));
  EXPECT_EQ(parse_scalar("sqrt(0)"), X(0L));
}

TEST(Parser, PowerBindsTighterThanMinus) {
  EXPECT_EQ(parse_poly("-z^2"), -(z() * z()));
  EXPECT_EQ(parse_poly("(-z)^2"), z() * z());
  EXPECT_EQ(parse_poly("2^3"), c(8));
}

TEST(Parser, LiteralsAreDecimal) {
  EXPECT_EQ(parse_scalar("010"), X(10L));
  EXPECT_EQ(parse_scalar("009/003"), X(3L));
}

TEST(Parser, Evaluations) {
  EXPECT_EQ(parse_poly("shift(z^2, 1)"), ipoly({1, 2, 1}));
  EXPECT_EQ(parse_poly("shift(z, -3)"), ipoly({-3, 1}));
  EXPECT_EQ(parse_poly("rf(z, 2)"), ipoly({0, 1, 1}));
  EXPECT_EQ(parse_poly("ff(z - 2/5, 5)"), falling_factorial_poly(q(2, 5), 5));
  EXPECT_EQ(parse_poly("i*i"), c(-1));
  EXPECT_EQ(parse_poly("  z\t+\n1 "), ipoly({1, 1}));
}

TEST(Parser, RootsLiteral) {
  FP f = parse_factored("roots(3; 0:2, 1/2:1, sqrt(2):1)");
  EXPECT_EQ(f.lead, X(3L));
  EXPECT_EQ(f.degree(), 4u);
  EXPECT_EQ(ord(f, X(0L)), 2u);
  EXPECT_EQ(ord(f, X::sqrt(Rational(2))), 1u);
  EXPECT_EQ(parse_poly("roots(1; 0:2, 1:1)"), expand(roots(1, {{0, 2}, {1, 1}})));
  EXPECT_EQ(parse_factored("roots(5)"), roots(5, {}));
  EXPECT_THROW(parse_factored("roots(0; 1:1)"), Error);
}

TEST(Parser, FactoredEvaluationKeepsStructure) {
  FP f = parse_factored("-ff(z+3/5,5)");
  EXPECT_EQ(f.lead, X(-1L));
  EXPECT_EQ(f.degree(), 5u);
  EXPECT_EQ(expand(f), parse_poly("-ff(z+3/5,5)"));
  FP g = parse_factored("z^2*(z-1)");
  EXPECT_EQ(g, roots(1, {{0, 2}, {1, 1}}));
}

TEST(Parser, NestingLimit) {
  std::string deep(kMaxNesting + 10, '(');
  deep += "z";
  deep += std::string(kMaxNesting + 10, ')');
  EXPECT_THROW(parse(deep), ParseError);
  std::string ok(50, '(');
  ok += "z" + std::string(50, ')');
  EXPECT_EQ(parse_poly(ok), z());
}

TEST(Parser, ExponentLimit) {
  EXPECT_THROW(parse("z^100000"), ParseError);
  EXPECT_THROW(parse("ff(z, 99999999999999999999)"), ParseError);
}

TEST(ParserProperties, PrintThenParseRoundtrip) {
  RandomSource rs(83);
  for (int n = 0; n < 1000; ++n) {
    P p;
    if (n % 2) {
      p = random_poly(rs, 8);
    } else {
      std::vector<X> cs;
      const long d = rs.integer(0, 5);
      for (long k = 0; k <= d; ++k) cs.push_back(random_scalar(rs, 6));
      p = P(std::move(cs));
    }
    const std::string text = to_string(p);
    ASSERT_EQ(parse_poly(text), p) << text;
  }
}

TEST(ParserProperties, FuzzNeverCrashes) {
  RandomSource rs(89);
  const std::string alphabet = "z i0123456789+-*/^(),;:sqrtffrfshiftroots\t";
  int parsed = 0;
  for (int n = 0; n < 100000; ++n) {
    const long len = rs.integer(0, 24);
    std::string s;
    for (long k = 0; k < len; ++k) {
      if (rs.integer(0, 9) == 0) {
        s += static_cast<char>(rs.integer(0, 255));
      } else {
        s += alphabet[static_cast<std::size_t>(rs.integer(0, static_cast<long>(alphabet.size()) - 1))];
      }
    }
    try {
      parse(s);
      ++parsed;
    } catch (const ParseError& e) {
      ASSERT_LE(e.offset(), s.size()) << s;
    }
  }
  EXPECT_GT(parsed, 0);
}
