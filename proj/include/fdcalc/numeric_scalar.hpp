#pragma once

// Arbitrary-precision complex numbers on top of MPFR.
//
// Every value carries its own precision in bits. A binary operation produces
// a result at the larger of the two operand precisions, so mixing never
// lowers precision. Integers are created at 64 bits, which represents them
// exactly.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fdcalc/errors.hpp"
#include "fdcalc/exact_scalar.hpp"

namespace fdcalc {

inline constexpr unsigned kMinPrecision = 64;

class Real {
 public:
  explicit Real(unsigned prec = kMinPrecision) {
    mpfr_init2(v_, std::max(prec, kMinPrecision));
    mpfr_set_zero(v_, 1);
  }
  Real(long v, unsigned prec) : Real(prec) { mpfr_set_si(v_, v, MPFR_RNDN); }
  Real(const Rational& q, unsigned prec) : Real(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  Real(const Integer& z, unsigned prec) : Real(prec) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
  Real(double d, unsigned prec) : Real(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Nearest integer.
  Integer round() const {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDN);
    return z;
  }

  static Real pow2(long e, unsigned prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }
  static Real pi(unsigned prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }
  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real abs(const Real& a) { return unary(a, mpfr_abs); }
  friend Real sqrt(const Real& a) { return unary(a, mpfr_sqrt); }
  friend Real cos(const Real& a) { return unary(a, mpfr_cos); }
  friend Real sin(const Real& a) { return unary(a, mpfr_sin); }
  friend Real hypot(const Real& a, const Real& b) { return binary(a, b, mpfr_hypot); }
  friend Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return b < a; }
  friend bool operator<=(const Real& a, const Real& b) { return !(b < a); }

  /// Decimal text with the given number of significant digits.
  std::string to_string(int digits = 20) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

 private:
  template <class Op>
  static Real binary(const Real& a, const Real& b, Op op) {
    Real r(std::max(a.precision(), b.precision()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  template <class Op>
  static Real unary(const Real& a, Op op) {
    Real r(a.precision());
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

/// Complex number with MPFR parts; both parts share one precision.
class NumericScalar {
 public:
  NumericScalar() = default;
  NumericScalar(long v, unsigned prec = kMinPrecision)  // NOLINT(google-explicit-constructor)
      : re_(v, prec), im_(0L, prec) {}
  NumericScalar(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    unsigned p = std::max(re_.precision(), im_.precision());
    if (re_.precision() != p) re_ = re_ + Real(p);
    if (im_.precision() != p) im_ = im_ + Real(p);
  }
  static NumericScalar from_rational(const Rational& q, unsigned prec) {
    return {Real(q, prec), Real(0L, prec)};
  }
  static NumericScalar polar(const Real& r, const Real& theta) {
    return {r * cos(theta), r * sin(theta)};
  }

  const Real& real() const { return re_; }
  const Real& imag() const { return im_; }
  unsigned precision() const { return std::max(re_.precision(), im_.precision()); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  NumericScalar operator-() const { return {-re_, -im_}; }
  friend NumericScalar operator+(const NumericScalar& a, const NumericScalar& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend NumericScalar operator-(const NumericScalar& a, const NumericScalar& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend NumericScalar operator*(const NumericScalar& a, const NumericScalar& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend NumericScalar operator/(const NumericScalar& a, const NumericScalar& b) {
    if (b.is_zero()) throw DivisionByZero();
    Real den = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
  }
  NumericScalar& operator+=(const NumericScalar& o) { return *this = *this + o; }
  NumericScalar& operator-=(const NumericScalar& o) { return *this = *this - o; }
  NumericScalar& operator*=(const NumericScalar& o) { return *this = *this * o; }
  NumericScalar& operator/=(const NumericScalar& o) { return *this = *this / o; }

  NumericScalar inverse() const { return NumericScalar(1L, precision()) / *this; }

  /// Structural equality (bitwise equal parts). Use a tolerance for numeric closeness.
  friend bool operator==(const NumericScalar& a, const NumericScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string(int digits = 20) const {
    if (im_.is_zero()) return re_.to_string(digits);
    std::string s = re_.to_string(digits);
    if (im_.sign() < 0) {
      s += " - " + (-im_).to_string(digits);
    } else {
      s += " + " + im_.to_string(digits);
    }
    return s + "*i";
  }

 private:
  Real re_;
  Real im_;
};

inline Real abs(const NumericScalar& a) { return hypot(a.real(), a.imag()); }

/// Principal square root.
inline NumericScalar sqrt(const NumericScalar& a) {
  if (a.is_zero()) return a;
  Real r = abs(a);
  Real two(2L, a.precision());
  Real re = sqrt((r + a.real()) / two);
  Real im = sqrt((r - a.real()) / two);
  if (a.imag().sign() < 0) im = -im;
  return {re, im};
}

inline bool is_zero(const NumericScalar& a) { return a.is_zero(); }

inline std::string to_string(const NumericScalar& a) { return a.to_string(); }

/// Embedding of the exact field into C at the given precision.
inline NumericScalar to_numeric(const ExactScalar& a, unsigned prec) {
  prec = std::max(prec, kMinPrecision);
  NumericScalar out(0L, prec);
  for (const auto& t : a.canonical_terms()) {
    Real mag = Real(t.value, prec) *
               sqrt(Real(Integer(static_cast<unsigned long>(t.key.radicand)), prec));
    out = out + (t.key.imaginary ? NumericScalar(Real(0L, prec), mag) : NumericScalar(mag, Real(0L, prec)));
  }
  return out;
}

}  // namespace fdcalc
