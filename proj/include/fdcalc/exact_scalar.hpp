#pragma once

// Exact arithmetic in Q(i, sqrt(2), sqrt(3), sqrt(5), ...).
//
// An element is a finite Q-linear combination of basis monomials i^e * sqrt(n)
// with e in {0, 1} and n square-free.  The generators are i and sqrt(p) for
// primes p, so sqrt(6) is the monomial sqrt(2)*sqrt(3) and every element has
// exactly one representation.  Any finite set of declared square roots lives
// inside this field, so scalars from different "contexts" mix without lifting.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fdcalc/errors.hpp"

namespace fdcalc {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return p;
  return n;
}

inline std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > UINT64_MAX) throw Error("radicand exceeds 64 bits");
  return static_cast<std::uint64_t>(r);
}

}  // namespace detail

/// n = root^2 * squarefree for n > 0.
struct SquareFreeSplit {
  Integer root;
  Integer squarefree;
};

inline SquareFreeSplit split_square_free(Integer n) {
  if (n <= 0) throw Error("split_square_free needs a positive integer");
  Integer root = 1, free = 1;
  constexpr unsigned long kTrialBound = 100000;
  for (unsigned long p = 2; p <= kTrialBound && Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) root *= p;
    if (e % 2 == 1) free *= p;
  }
  if (n > 1) {
    // Every prime factor of the cofactor exceeds the trial bound.
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
      Integer s;
      mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
      root *= s;
    } else if (n < Integer(kTrialBound) * kTrialBound * kTrialBound) {
      free *= n;  // prime, or a product of two distinct primes
    } else {
      throw Error("cannot certify the square-free part of " + n.get_str());
    }
  }
  return {root, free};
}

/// The basis monomial i^imaginary * sqrt(radicand), radicand square-free.
struct RadicalKey {
  bool imaginary = false;
  std::uint64_t radicand = 1;

  bool is_one() const noexcept { return !imaginary && radicand == 1; }

  /// Sorted generator codes: 0 stands for i, a prime p for sqrt(p).
  std::vector<std::uint64_t> generators() const {
    std::vector<std::uint64_t> g;
    if (imaginary) g.push_back(0);
    for (auto p : detail::prime_factors(radicand)) g.push_back(p);
    return g;
  }

  bool contains(std::uint64_t gen) const noexcept {
    return gen == 0 ? imaginary : (radicand % gen == 0);
  }

  RadicalKey without(std::uint64_t gen) const noexcept {
    return gen == 0 ? RadicalKey{false, radicand} : RadicalKey{imaginary, radicand / gen};
  }

  /// key * key as a rational: (-1)^imaginary * radicand.
  Integer square() const {
    Integer s = static_cast<unsigned long>(radicand);
    return imaginary ? Integer(-s) : s;
  }

  friend auto operator<=>(const RadicalKey&, const RadicalKey&) = default;
};

/// Order used by the canonical text form: fewer generators first, then
/// lexicographic on the sorted generator list (i before every square root).
inline bool canonical_key_less(const RadicalKey& a, const RadicalKey& b) {
  if (a == b) return false;
  auto ga = a.generators(), gb = b.generators();
  if (ga.size() != gb.size()) return ga.size() < gb.size();
  return ga < gb;
}

/// Product of two basis monomials: (factor, key) with key square-free.
inline std::pair<Integer, RadicalKey> multiply_keys(const RadicalKey& a, const RadicalKey& b) {
  std::uint64_t g = std::gcd(a.radicand, b.radicand);
  RadicalKey k{a.imaginary != b.imaginary,
               detail::checked_product(a.radicand / g, b.radicand / g)};
  Integer factor = static_cast<unsigned long>(g);
  if (a.imaginary && b.imaginary) factor = -factor;
  return {factor, k};
}

class ExactScalar {
 public:
  struct Term {
    RadicalKey key;
    Rational value;
    friend bool operator==(const Term&, const Term&) = default;
  };

  ExactScalar() = default;
  ExactScalar(long v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(const Integer& v) : rational_(v) {}  // NOLINT
  ExactScalar(const Rational& v) : rational_(v) { rational_.canonicalize(); }  // NOLINT

  static ExactScalar imaginary_unit() { return monomial(RadicalKey{true, 1}, Rational(1)); }

  /// sqrt(q) normalized: sqrt(8) = 2*sqrt(2), sqrt(1/2) = (1/2)*sqrt(2), sqrt(-1) = i.
  static ExactScalar sqrt(const Rational& q) {
    if (q == 0) return {};
    Integer n = abs(q.get_num()) * q.get_den();
    auto [root, free] = split_square_free(n);
    Rational coef(root, q.get_den());
    coef.canonicalize();
    if (!free.fits_ulong_p()) throw Error("radicand exceeds 64 bits");
    return monomial(RadicalKey{q < 0, free.get_ui()}, coef);
  }

  static ExactScalar monomial(const RadicalKey& key, const Rational& value) {
    ExactScalar s;
    if (value == 0) return s;
    if (key.is_one()) {
      s.rational_ = value;
    } else {
      s.terms_.push_back({key, value});
    }
    return s;
  }

  /// Generator by code (0 = i, prime p = sqrt(p)).
  static ExactScalar generator(std::uint64_t code) {
    return code == 0 ? imaginary_unit() : monomial(RadicalKey{false, code}, Rational(1));
  }

  bool is_zero() const noexcept { return rational_ == 0 && terms_.empty(); }
  bool is_rational() const noexcept { return terms_.empty(); }
  const Rational& rational_part() const noexcept { return rational_; }
  std::span<const Term> radical_terms() const noexcept { return terms_; }

  /// Coefficient of a basis monomial.
  Rational coefficient(const RadicalKey& key) const {
    if (key.is_one()) return rational_;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, const RadicalKey& k) { return t.key < k; });
    return (it != terms_.end() && it->key == key) ? it->value : Rational(0);
  }

  /// All terms including the rational one, in canonical text order.
  std::vector<Term> canonical_terms() const {
    std::vector<Term> out;
    if (rational_ != 0) out.push_back({RadicalKey{}, rational_});
    std::vector<Term> rest = terms_;
    std::sort(rest.begin(), rest.end(),
              [](const Term& a, const Term& b) { return canonical_key_less(a.key, b.key); });
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }

  ExactScalar operator-() const {
    ExactScalar r = *this;
    r.rational_ = -r.rational_;
    for (auto& t : r.terms_) t.value = -t.value;
    return r;
  }

  ExactScalar& operator+=(const ExactScalar& o) {
    rational_ += o.rational_;
    if (!o.terms_.empty()) merge(o.terms_, false);
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    rational_ -= o.rational_;
    if (!o.terms_.empty()) merge(o.terms_, true);
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }

  friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
    if (a.terms_.empty() && b.terms_.empty()) return ExactScalar(Rational(a.rational_ * b.rational_));
    if (b.terms_.empty()) return a.scaled(b.rational_);
    if (a.terms_.empty()) return b.scaled(a.rational_);
    ExactScalar r;
    r.rational_ = a.rational_ * b.rational_;
    std::vector<Term> acc;
    acc.reserve((a.terms_.size() + 1) * (b.terms_.size() + 1));
    auto push = [&](const RadicalKey& ka, const Rational& va, const RadicalKey& kb,
                    const Rational& vb) {
      auto [f, k] = multiply_keys(ka, kb);
      Rational v = va * vb * f;
      if (k.is_one()) {
        r.rational_ += v;
      } else {
        acc.push_back({k, v});
      }
    };
    if (a.rational_ != 0)
      for (const auto& tb : b.terms_) push(RadicalKey{}, a.rational_, tb.key, tb.value);
    for (const auto& ta : a.terms_) {
      if (b.rational_ != 0) push(ta.key, ta.value, RadicalKey{}, b.rational_);
      for (const auto& tb : b.terms_) push(ta.key, ta.value, tb.key, tb.value);
    }
    std::sort(acc.begin(), acc.end(), [](const Term& x, const Term& y) { return x.key < y.key; });
    for (auto& t : acc) {
      if (!r.terms_.empty() && r.terms_.back().key == t.key) {
        r.terms_.back().value += t.value;
      } else {
        r.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(r.terms_, [](const Term& t) { return t.value == 0; });
    return r;
  }

  friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
    if (b.terms_.empty()) {
      if (b.rational_ == 0) throw DivisionByZero();
      return a.scaled(Rational(1 / b.rational_));
    }
    return a * b.inverse();
  }

  ExactScalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (terms_.empty()) return ExactScalar(Rational(1 / rational_));
    if (rational_ == 0 && terms_.size() == 1) {
      // (v*k)^-1 = k / (v * k^2)
      const Term& t = terms_.front();
      return monomial(t.key, Rational(1 / (t.value * Rational(t.key.square()))));
    }
    // Multiply by the conjugate with respect to one generator; the product no
    // longer involves that generator, so the recursion terminates.
    std::uint64_t gen = pick_generator();
    ExactScalar conj = conjugate_in(gen);
    ExactScalar norm = *this * conj;
    return conj * norm.inverse();
  }

  /// Split as x + y*g where neither x nor y involves the generator g.
  std::pair<ExactScalar, ExactScalar> split(std::uint64_t gen) const {
    ExactScalar x, y;
    x.rational_ = rational_;
    for (const auto& t : terms_) {
      if (t.key.contains(gen)) {
        y += monomial(t.key.without(gen), t.value);
      } else {
        x += monomial(t.key, t.value);
      }
    }
    return {x, y};
  }

  /// Image under the automorphism g -> -g.
  ExactScalar conjugate_in(std::uint64_t gen) const {
    ExactScalar r = *this;
    for (auto& t : r.terms_)
      if (t.key.contains(gen)) t.value = -t.value;
    return r;
  }

  /// Complex conjugate.
  ExactScalar conj() const { return conjugate_in(0); }

  /// Some generator occurring in a non-rational term (i preferred).
  std::uint64_t pick_generator() const {
    for (const auto& t : terms_)
      if (t.key.imaginary) return 0;
    return detail::smallest_prime_factor(terms_.front().key.radicand);
  }

  /// Generators occurring in this element, sorted.
  std::vector<std::uint64_t> generators() const {
    std::vector<std::uint64_t> g;
    for (const auto& t : terms_) {
      auto k = t.key.generators();
      g.insert(g.end(), k.begin(), k.end());
    }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }

  /// Canonical text: `-3/4 + 1/2*sqrt(2) + 1/1*i*sqrt(6)`; zero is `0`.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : canonical_terms()) {
      bool neg = t.value < 0;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      Rational mag = abs(t.value);
      out += mag.get_num().get_str() + "/" + mag.get_den().get_str();
      if (t.key.imaginary) out += "*i";
      if (t.key.radicand != 1) out += "*sqrt(" + std::to_string(t.key.radicand) + ")";
    }
    return out;
  }

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

 private:
  ExactScalar scaled(const Rational& f) const {
    ExactScalar r;
    if (f == 0) return r;
    r.rational_ = rational_ * f;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.key, t.value * f});
    return r;
  }

  void merge(const std::vector<Term>& other, bool negate) {
    std::vector<Term> out;
    out.reserve(terms_.size() + other.size());
    auto i = terms_.begin();
    auto j = other.begin();
    while (i != terms_.end() || j != other.end()) {
      if (j == other.end() || (i != terms_.end() && i->key < j->key)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->key < i->key) {
        out.push_back({j->key, negate ? Rational(-j->value) : j->value});
        ++j;
      } else {
        Rational v = negate ? Rational(i->value - j->value) : Rational(i->value + j->value);
        if (v != 0) out.push_back({i->key, v});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  Rational rational_;        // coefficient of the trivial monomial
  std::vector<Term> terms_;  // nontrivial monomials, sorted by key, nonzero values
};

/// (true, n) iff the scalar is the integer n.
inline std::optional<Integer> is_integer(const ExactScalar& a) {
  if (!a.is_rational() || a.rational_part().get_den() != 1) return std::nullopt;
  return a.rational_part().get_num();
}

inline bool is_zero(const ExactScalar& a) { return a.is_zero(); }

inline std::string to_string(const ExactScalar& a) { return a.to_string(); }

/// Square root inside the field when one exists (possibly adjoining a new
/// square root of a rational). Returns nullopt when none is found.
inline std::optional<ExactScalar> exact_sqrt(const ExactScalar& d, int depth = 0) {
  if (d.is_zero()) return ExactScalar{};
  if (d.is_rational()) return ExactScalar::sqrt(d.rational_part());
  if (depth > 8) return std::nullopt;
  // d = a + b*g, look for x = u + v*g: u^2 + e*v^2 = a, 2uv = b with e = g^2.
  const std::uint64_t gen = d.pick_generator();
  const ExactScalar g = ExactScalar::generator(gen);
  const ExactScalar e = g * g;
  auto [a, b] = d.split(gen);
  auto norm_root = exact_sqrt(a * a - e * b * b, depth + 1);
  if (!norm_root) return std::nullopt;
  for (int sign : {1, -1}) {
    ExactScalar half = (a + ExactScalar(sign) * *norm_root) / ExactScalar(2);
    ExactScalar x;
    if (half.is_zero()) {
      auto v = exact_sqrt(a / e, depth + 1);
      if (!v) continue;
      x = *v * g;
    } else {
      auto u = exact_sqrt(half, depth + 1);
      if (!u) continue;
      x = *u + (b / (ExactScalar(2) * *u)) * g;
    }
    if (x * x == d) return x;
  }
  return std::nullopt;
}

}  // namespace fdcalc
