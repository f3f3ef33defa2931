#pragma once

// Expression front-end.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' uint)?
//   atom   := rational | 'i' | 'sqrt' '(' uint ')' | 'z' | '(' expr ')'
//           | ('ff' | 'rf') '(' expr ',' uint ')'
//           | 'shift' '(' expr ',' int ')'
//           | 'roots' '(' expr [';' [expr ':' uint (',' expr ':' uint)*]] ')'
//   rational := uint ('/' uint)?
//
// '^' binds tighter than unary minus, so -z^2 is -(z^2).  There is no
// implicit multiplication: 2z is an error.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdcalc/diffcalc.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/factored.hpp"
#include "fdcalc/poly.hpp"

namespace fdcalc {

struct Expr {
  enum class Kind { number, imaginary, sqrt, var, neg, add, sub, mul, pow, ff, rf, shift, roots };

  Kind kind;
  std::size_t offset = 0;
  Rational value;               // number; sqrt radicand
  long k = 0;                   // exponent, falling/raising length, shift amount
  std::vector<Expr> children;   // roots: lead, then the root expressions
  std::vector<unsigned> mults;  // roots: multiplicities, parallel to children[1..]
};

inline constexpr std::size_t kMaxNesting = 256;
inline constexpr long kMaxExponent = 4096;

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view src) : s_(src) {}

  Expr parse() {
    Expr e = expr();
    skip();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxNesting) p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "', found end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool at_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  Integer uint_literal() {
    if (!at_digit()) fail(pos_ >= s_.size() ? "expected a number, found end of input" : "expected a number");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  long small_uint(long max, const char* what) {
    const std::size_t at = (skip(), pos_);
    Integer n = uint_literal();
    if (n > max) throw ParseError(at, std::string(what) + " exceeds " + std::to_string(max));
    return n.get_si();
  }

  long small_int(long max) {
    bool neg = accept('-');
    if (!neg) accept('+');
    long v = small_uint(max, "shift");
    return neg ? -v : v;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Expr node(Expr::Kind kind, std::size_t at) {
    Expr e{};
    e.kind = kind;
    e.offset = at;
    return e;
  }

  Expr expr() {
    DepthGuard g(*this);
    Expr lhs = term();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      Expr::Kind kind;
      if (accept('+')) {
        kind = Expr::Kind::add;
      } else if (accept('-')) {
        kind = Expr::Kind::sub;
      } else {
        return lhs;
      }
      Expr e = node(kind, at);
      e.children.push_back(std::move(lhs));
      e.children.push_back(term());
      lhs = std::move(e);
    }
  }

  Expr term() {
    Expr lhs = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      Expr e = node(Expr::Kind::mul, at);
      e.children.push_back(std::move(lhs));
      e.children.push_back(unary());
      lhs = std::move(e);
    }
  }

  Expr unary() {
    DepthGuard g(*this);
    skip();
    const std::size_t at = pos_;
    if (accept('-')) {
      Expr e = node(Expr::Kind::neg, at);
      e.children.push_back(unary());
      return e;
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    skip();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    Expr e = node(Expr::Kind::pow, at);
    e.k = small_uint(kMaxExponent, "exponent");
    e.children.push_back(std::move(base));
    return e;
  }

  Expr atom() {
    DepthGuard g(*this);
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::number, at);
      Integer num = uint_literal();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t den_at = (skip(), pos_);
        den = uint_literal();
        if (den == 0) throw ParseError(den_at, "zero denominator");
      }
      e.value = Rational(num, den);
      e.value.canonicalize();
      return e;
    }
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    const std::string id = identifier();
    if (id == "z") return node(Expr::Kind::var, at);
    if (id == "i") return node(Expr::Kind::imaginary, at);
    if (id == "sqrt") {
      Expr e = node(Expr::Kind::sqrt, at);
      expect('(');
      const std::size_t arg_at = (skip(), pos_);
      Integer n = uint_literal();
      if (!n.fits_ulong_p()) throw ParseError(arg_at, "radicand exceeds 64 bits");
      e.value = Rational(n);
      expect(')');
      return e;
    }
    if (id == "ff" || id == "rf" || id == "shift") {
      Expr e = node(id == "ff" ? Expr::Kind::ff : id == "rf" ? Expr::Kind::rf : Expr::Kind::shift, at);
      expect('(');
      e.children.push_back(expr());
      expect(',');
      e.k = id == "shift" ? small_int(1L << 40) : small_uint(kMaxExponent, "factorial length");
      expect(')');
      return e;
    }
    if (id == "roots") {
      Expr e = node(Expr::Kind::roots, at);
      expect('(');
      e.children.push_back(expr());
      if (accept(';')) {
        skip();
        if (pos_ < s_.size() && s_[pos_] != ')') {
          do {
            e.children.push_back(expr());
            expect(':');
            const std::size_t m_at = (skip(), pos_);
            const long m = small_uint(kMaxExponent, "multiplicity");
            if (m == 0) throw ParseError(m_at, "multiplicity must be positive");
            e.mults.push_back(static_cast<unsigned>(m));
          } while (accept(','));
        }
      }
      expect(')');
      return e;
    }
    throw ParseError(at, "unknown identifier '" + id + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view src) { return detail::Parser(src).parse(); }

namespace detail {

inline ExactScalar constant_of(const Poly<ExactScalar>& p, const Expr& at, const char* what) {
  if (!p.is_constant()) throw ParseError(at.offset, std::string(what) + " must be a constant");
  return p.coeff(0);
}

}  // namespace detail

/// Expanded polynomial over the exact field.
inline Poly<ExactScalar> eval_expr(const Expr& e) {
  using P = Poly<ExactScalar>;
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return P(ExactScalar(e.value));
    case K::imaginary: return P(ExactScalar::imaginary_unit());
    case K::sqrt: return P(ExactScalar::sqrt(e.value));
    case K::var: return P::z();
    case K::neg: return -eval_expr(e.children[0]);
    case K::add: return eval_expr(e.children[0]) + eval_expr(e.children[1]);
    case K::sub: return eval_expr(e.children[0]) - eval_expr(e.children[1]);
    case K::mul: return eval_expr(e.children[0]) * eval_expr(e.children[1]);
    case K::pow: return pow(eval_expr(e.children[0]), static_cast<unsigned>(e.k));
    case K::ff: return falling_power(eval_expr(e.children[0]), static_cast<unsigned>(e.k));
    case K::rf: return raising_power(eval_expr(e.children[0]), static_cast<unsigned>(e.k));
    case K::shift: return shift(eval_expr(e.children[0]), e.k);
    case K::roots: {
      P p(detail::constant_of(eval_expr(e.children[0]), e.children[0], "leading coefficient"));
      for (std::size_t j = 1; j < e.children.size(); ++j) {
        const ExactScalar r = detail::constant_of(eval_expr(e.children[j]), e.children[j], "root");
        p = p * pow(P::linear(r), e.mults[j - 1]);
      }
      return p;
    }
  }
  throw Error("unknown expression node");
}

/// Factored form.  Products, powers, falling/raising powers, shifts and roots
/// literals keep their factors; a sum is expanded and factored.
inline FactoredPoly<ExactScalar> eval_factored(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::var: return FactoredPoly<ExactScalar>{ExactScalar(1L), {{ExactScalar(0L), 1}}};
    case K::neg: {
      auto f = eval_factored(e.children[0]);
      f.lead = -f.lead;
      return f;
    }
    case K::mul: return multiply(eval_factored(e.children[0]), eval_factored(e.children[1]));
    case K::pow: return power(eval_factored(e.children[0]), static_cast<unsigned>(e.k));
    case K::ff: return falling_power(eval_factored(e.children[0]), static_cast<unsigned>(e.k));
    case K::rf: return raising_power(eval_factored(e.children[0]), static_cast<unsigned>(e.k));
    case K::shift: return shifted(eval_factored(e.children[0]), e.k);
    case K::roots: {
      FactoredPoly<ExactScalar> f{
          detail::constant_of(eval_expr(e.children[0]), e.children[0], "leading coefficient"), {}};
      if (f.lead.is_zero()) throw Error("leading coefficient of a roots literal is zero");
      for (std::size_t j = 1; j < e.children.size(); ++j)
        f.roots.push_back(
            {detail::constant_of(eval_expr(e.children[j]), e.children[j], "root"), e.mults[j - 1]});
      return normalized(std::move(f));
    }
    default: {
      Poly<ExactScalar> p = eval_expr(e);
      if (p.is_zero()) throw Error("the zero polynomial has no factored form");
      return factor(p);
    }
  }
}

inline Poly<ExactScalar> parse_poly(std::string_view src) { return eval_expr(parse(src)); }
inline FactoredPoly<ExactScalar> parse_factored(std::string_view src) { return eval_factored(parse(src)); }

/// Constant expression as a scalar, e.g. "1/2*sqrt(2)".
inline ExactScalar parse_scalar(std::string_view src) {
  Expr e = parse(src);
  return detail::constant_of(eval_expr(e), e, "value");
}

}  // namespace fdcalc
