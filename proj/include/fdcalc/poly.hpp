#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdcalc/errors.hpp"
#include "fdcalc/field.hpp"

namespace fdcalc {

/// Polynomial degree; the zero polynomial has degree minus infinity.
class Degree {
 public:
  constexpr Degree() = default;  // minus infinity
  constexpr explicit Degree(std::size_t d) : d_(d) {}
  static constexpr Degree minus_infinity() { return {}; }

  constexpr bool is_minus_infinity() const { return !d_.has_value(); }
  std::size_t value() const {
    if (!d_) throw Error("degree of the zero polynomial is minus infinity");
    return *d_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.d_ || !b.d_) return {};
    return Degree(*a.d_ + *b.d_);
  }
  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.d_ || !b.d_) return a.d_.has_value() <=> b.d_.has_value();
    return *a.d_ <=> *b.d_;
  }
  friend constexpr bool operator==(Degree a, std::size_t b) { return a.d_ == b; }

  std::string to_string() const { return d_ ? std::to_string(*d_) : "-inf"; }

 private:
  std::optional<std::size_t> d_;
};

/// Dense univariate polynomial in z, coefficients in ascending powers.
/// The leading coefficient is structurally nonzero; zero is the empty list.
template <Scalar F>
class Poly {
 public:
  using scalar_type = F;

  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const F& constant) {
    if (!fdcalc::is_zero(constant)) c_.push_back(constant);
  }

  static Poly z() { return Poly(std::vector<F>{F(0L), F(1L)}); }
  /// z - root
  static Poly linear(const F& root) { return Poly(std::vector<F>{-root, scalar_from(1L, root)}); }
  static Poly monomial(const F& c, std::size_t k) {
    std::vector<F> v(k + 1, scalar_from(0L, c));
    v[k] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const noexcept { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree() : Degree(c_.size() - 1); }
  /// Degree with the zero polynomial mapped to 0; for bookkeeping in inequalities.
  std::size_t degree_or_zero() const { return c_.empty() ? 0 : c_.size() - 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  const std::vector<F>& coeffs() const noexcept { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0L); }
  const F& lead() const {
    if (c_.empty()) throw Error("zero polynomial has no leading coefficient");
    return c_.back();
  }

  /// Horner evaluation.
  F operator()(const F& x) const {
    if (c_.empty()) return scalar_from(0L, x);
    F acc = c_.back();
    for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    const Poly& big = p.c_.size() >= q.c_.size() ? p : q;
    const Poly& small = p.c_.size() >= q.c_.size() ? q : p;
    std::vector<F> r = big.c_;
    for (std::size_t k = 0; k < small.c_.size(); ++k) r[k] = r[k] + small.c_[k];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<F> r(p.c_.size() + q.c_.size() - 1, F(0L));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
      if (fdcalc::is_zero(p.c_[i])) continue;
      for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] = r[i + j] + p.c_[i] * q.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const F& s, const Poly& p) {
    if (fdcalc::is_zero(s)) return {};
    std::vector<F> r = p.c_;
    for (auto& a : r) a = s * a;
    return Poly(std::move(r));
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Structural equality; for the numeric backend use an explicit tolerance instead.
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim() {
    while (!c_.empty() && fdcalc::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <Scalar F>
Poly<F> pow(const Poly<F>& p, unsigned n) {
  Poly<F> r(F(1L));
  for (unsigned k = 0; k < n; ++k) r = r * p;
  return r;
}

template <Scalar F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  F inv = F(1L) / p.lead();
  return inv * p;
}

/// Quotient and remainder over the coefficient field.
template <Scalar F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& p, const Poly<F>& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.degree() < q.degree()) return {Poly<F>(), p};
  std::vector<F> rem = p.coeffs();
  const auto& d = q.coeffs();
  const std::size_t dq = d.size() - 1;
  const F inv_lead = F(1L) / d.back();
  std::vector<F> quot(rem.size() - dq, F(0L));
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (is_zero(rem[k])) continue;
    F c = rem[k] * inv_lead;
    quot[k - dq] = c;
    for (std::size_t j = 0; j < dq; ++j) rem[k - dq + j] = rem[k - dq + j] - c * d[j];
    rem[k] = F(0L);
  }
  rem.resize(dq);
  return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <Scalar F>
std::string to_string(const Poly<F>& p);

/// p / q, required to be exact; throws NotDivisible carrying the remainder.
template <Scalar F>
Poly<F> divexact(const Poly<F>& p, const Poly<F>& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw NotDivisible(to_string(rem));
  return quot;
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) is rejected.
template <Scalar F>
Poly<F> gcd(Poly<F> p, Poly<F> q) {
  if (p.is_zero() && q.is_zero()) throw Error("gcd(0, 0) is undefined");
  p = monic(p);
  q = monic(q);
  while (!q.is_zero()) {
    Poly<F> r = monic(divmod(p, q).second);
    p = std::move(q);
    q = std::move(r);
  }
  return p;
}

namespace detail {

inline std::string coefficient_text(const ExactScalar& c, bool& negative) {
  negative = false;
  if (c.is_rational()) {
    Rational q = c.rational_part();
    negative = q < 0;
    q = abs(q);
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  auto terms = c.canonical_terms();
  if (terms.size() == 1) {
    // single monomial: 3/2*sqrt(2), i, 2*i*sqrt(3)
    Rational q = terms[0].value;
    negative = q < 0;
    q = abs(q);
    std::string s;
    if (q != 1)
      s = (q.get_den() == 1 ? q.get_num().get_str()
                            : q.get_num().get_str() + "/" + q.get_den().get_str()) + "*";
    if (terms[0].key.imaginary) s += "i";
    if (terms[0].key.radicand != 1) {
      if (terms[0].key.imaginary) s += "*";
      s += "sqrt(" + std::to_string(terms[0].key.radicand) + ")";
    }
    return s;
  }
  return "(" + c.to_string() + ")";
}

inline std::string coefficient_text(const NumericScalar& c, bool& negative) {
  negative = false;
  if (c.imag().is_zero()) {
    negative = c.real().sign() < 0;
    return abs(c.real()).to_string();
  }
  return "(" + c.to_string() + ")";
}

}  // namespace detail

/// Expression text in descending powers, e.g. `z^3 - 3*z^2 + 2*z`.  For the
/// exact backend the text is accepted back by the parser.
template <Scalar F>
std::string to_string(const Poly<F>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (is_zero(c[k])) continue;
    bool neg = false;
    std::string coef = detail::coefficient_text(c[k], neg);
    std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
    std::string term;
    if (mono.empty()) {
      term = coef;
    } else if (coef == "1") {
      term = mono;
    } else {
      term = coef + "*" + mono;
    }
    if (out.empty()) {
      out = neg ? "-" + term : term;
    } else {
      out += neg ? " - " + term : " + " + term;
    }
  }
  return out;
}

/// Embedding of an exact polynomial into the numeric backend.
inline Poly<NumericScalar> to_numeric(const Poly<ExactScalar>& p, unsigned prec) {
  std::vector<NumericScalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.push_back(to_numeric(a, prec));
  return Poly<NumericScalar>(std::move(c));
}

/// Largest coefficient modulus.
inline Real coefficient_sup(const Poly<NumericScalar>& p, unsigned prec) {
  Real m(0L, prec);
  for (const auto& a : p.coeffs()) {
    Real v = abs(a);
    if (m < v) m = v;
  }
  return m;
}

}  // namespace fdcalc
