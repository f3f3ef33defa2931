#pragma once

// The scalar abstraction shared by every other module.  Algorithms are
// templates over a Scalar type; ExactScalar and NumericScalar are the two
// backends.  Because the backend is part of the type, mixing them in one
// expression is rejected at compile time.

#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <type_traits>

#include "fdcalc/errors.hpp"
#include "fdcalc/exact_scalar.hpp"
#include "fdcalc/numeric_scalar.hpp"

namespace fdcalc {

template <class T>
concept Scalar = std::copyable<T> && std::constructible_from<T, long> &&
                 requires(const T a, const T b) {
                   { a + b } -> std::same_as<T>;
                   { a - b } -> std::same_as<T>;
                   { a * b } -> std::same_as<T>;
                   { a / b } -> std::same_as<T>;
                   { -a } -> std::same_as<T>;
                   { a == b } -> std::convertible_to<bool>;
                   { is_zero(a) } -> std::convertible_to<bool>;
                   { to_string(a) } -> std::convertible_to<std::string>;
                 };

template <class T>
inline constexpr bool is_exact_v = std::is_same_v<T, ExactScalar>;

/// Closeness threshold for the numeric backend; ignored by the exact one.
/// A zero value selects the default 2^(-precision/2) of the operand.
struct Tolerance {
  double value = 0.0;
};

inline Real effective_tolerance(const Tolerance& tol, unsigned prec) {
  if (tol.value > 0) return Real(tol.value, prec);
  return Real::pow2(-static_cast<long>(prec / 2), prec);
}

inline bool near_zero(const ExactScalar& a, const Tolerance& = {}) { return a.is_zero(); }

inline bool near_zero(const NumericScalar& a, const Tolerance& tol = {}) {
  return abs(a) < effective_tolerance(tol, a.precision());
}

template <Scalar F>
bool same_value(const F& a, const F& b, const Tolerance& tol = {}) {
  return near_zero(a - b, tol);
}

/// Integer test for the numeric backend: within tolerance of an integer.
inline std::optional<Integer> is_integer(const NumericScalar& a, const Tolerance& tol = {}) {
  Integer n = a.real().round();
  NumericScalar d = a - NumericScalar(Real(n, a.precision()), Real(0L, a.precision()));
  if (abs(d) < effective_tolerance(tol, a.precision())) return n;
  return std::nullopt;
}

inline std::optional<long> integer_offset(const ExactScalar& d, const Tolerance& = {}) {
  auto n = is_integer(d);
  if (!n) return std::nullopt;
  if (!n->fits_slong_p()) throw Error("integer shift does not fit a machine word");
  return n->get_si();
}

/// Decides whether a root difference is an integer.  Distances to the nearest
/// integer between the tolerance and its square root are treated as undecidable.
inline std::optional<long> integer_offset(const NumericScalar& d, const Tolerance& tol = {}) {
  const unsigned prec = d.precision();
  Real eps = effective_tolerance(tol, prec);
  Integer n = d.real().round();
  Real dist = abs(d - NumericScalar(Real(n, prec), Real(0L, prec)));
  if (dist < eps) {
    if (!n.fits_slong_p()) throw Error("integer shift does not fit a machine word");
    return n.get_si();
  }
  if (dist < sqrt(eps)) {
    throw AmbiguousShift("difference " + d.to_string() + " is within " + dist.to_string(6) +
                         " of an integer");
  }
  return std::nullopt;
}

/// Deterministic total order used to sort roots and shift classes.
inline bool scalar_order(const ExactScalar& a, const ExactScalar& b) {
  return a.to_string() < b.to_string();
}

inline bool scalar_order(const NumericScalar& a, const NumericScalar& b) {
  if (!(a.real() == b.real())) return a.real() < b.real();
  return a.imag() < b.imag();
}

/// A scalar built from an integer with the precision of `like` (exact: plain integer).
inline ExactScalar scalar_from(long v, const ExactScalar&) { return ExactScalar(v); }
inline NumericScalar scalar_from(long v, const NumericScalar& like) {
  return NumericScalar(v, like.precision());
}

}  // namespace fdcalc
