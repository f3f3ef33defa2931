#pragma once

// Forward-difference calculus on polynomials: shifts, Delta and its powers,
// falling / raising factorial expressions and the Newton (falling factorial)
// basis.

#include <utility>
#include <vector>

#include "fdcalc/field.hpp"
#include "fdcalc/poly.hpp"

namespace fdcalc {

/// Row n of Pascal's triangle: C(n, 0), ..., C(n, n).
inline std::vector<Integer> binomial_row(unsigned n) {
  std::vector<Integer> row{1};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

template <Scalar F>
F scalar_from(const Integer& n, const F& like) {
  if constexpr (is_exact_v<F>) {
    return ExactScalar(n);
  } else {
    return NumericScalar(Real(n, like.precision()), Real(0L, like.precision()));
  }
}

/// p(z + h) by Horner's scheme in the linear polynomial z + h.
template <Scalar F>
Poly<F> shift(const Poly<F>& p, const F& h) {
  if (p.is_zero()) return p;
  const auto& c = p.coeffs();
  const Poly<F> lin(std::vector<F>{h, scalar_from(1L, h)});
  Poly<F> acc(c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * lin + Poly<F>(c[k]);
  return acc;
}

template <Scalar F>
Poly<F> shift(const Poly<F>& p, long k) {
  return shift(p, F(k));
}

/// Delta p(z) = p(z + 1) - p(z).
template <Scalar F>
Poly<F> delta(const Poly<F>& p) {
  return shift(p, 1L) - p;
}

/// Delta^k p by k-fold application; Delta^0 p = p.
template <Scalar F>
Poly<F> delta_k(Poly<F> p, unsigned k) {
  for (unsigned j = 0; j < k && !p.is_zero(); ++j) p = delta(p);
  return p;
}

/// Delta^k p via sum_j C(k, j) (-1)^(k-j) p(z + j); used as a cross-check.
template <Scalar F>
Poly<F> delta_k_binomial(const Poly<F>& p, unsigned k) {
  const auto row = binomial_row(k);
  Poly<F> r;
  for (unsigned j = 0; j <= k; ++j) {
    F c = scalar_from(row[j], F(0L));
    if ((k - j) % 2 == 1) c = -c;
    r = r + c * shift(p, static_cast<long>(j));
  }
  return r;
}

/// p(z) p(z - 1) ... p(z - n + 1); falling_power(p, 0) = 1.
template <Scalar F>
Poly<F> falling_power(const Poly<F>& p, unsigned n) {
  Poly<F> r(F(1L));
  for (unsigned j = 0; j < n; ++j) r = r * shift(p, -static_cast<long>(j));
  return r;
}

/// p(z) p(z + 1) ... p(z + n - 1); raising_power(p, 0) = 1.
template <Scalar F>
Poly<F> raising_power(const Poly<F>& p, unsigned n) {
  Poly<F> r(F(1L));
  for (unsigned j = 0; j < n; ++j) r = r * shift(p, static_cast<long>(j));
  return r;
}

/// (z - z0)^(n falling) = (z - z0)(z - z0 - 1)...(z - z0 - n + 1).
template <Scalar F>
Poly<F> falling_factorial_poly(const F& z0, unsigned n) {
  return falling_power(Poly<F>::linear(z0), n);
}

/// P(z) = sum_j coeffs[j] (z - base)^(j falling).
template <Scalar F>
struct NewtonExpansion {
  F base;
  std::vector<F> coeffs;
  friend bool operator==(const NewtonExpansion&, const NewtonExpansion&) = default;
};

/// Coefficients a_j = Delta^j p(z0) / j!.
template <Scalar F>
NewtonExpansion<F> to_newton(const Poly<F>& p, const F& z0) {
  NewtonExpansion<F> e{z0, {}};
  Poly<F> d = p;
  for (unsigned j = 0; !d.is_zero(); ++j) {
    e.coeffs.push_back(d(z0) / scalar_from(factorial(j), z0));
    d = delta(d);
  }
  return e;
}

template <Scalar F>
Poly<F> from_newton(const NewtonExpansion<F>& e) {
  Poly<F> r;
  Poly<F> basis(F(1L));  // (z - base)^(j falling)
  for (std::size_t j = 0; j < e.coeffs.size(); ++j) {
    r = r + e.coeffs[j] * basis;
    basis = basis * Poly<F>::linear(e.base + scalar_from(static_cast<long>(j), e.base));
  }
  return r;
}

/// Checks at one point both
///   p(z + k)     = sum_j C(k, j) Delta^j p(z)
///   Delta^k p(z) = sum_j C(k, j) (-1)^(k-j) p(z + j).
template <Scalar F>
std::pair<bool, bool> binomial_transform_check(const Poly<F>& p, const F& z, unsigned k,
                                               const Tolerance& tol = {}) {
  const auto row = binomial_row(k);
  F forward = scalar_from(0L, z);
  Poly<F> d = p;
  for (unsigned j = 0; j <= k; ++j) {
    forward = forward + scalar_from(row[j], z) * d(z);
    d = delta(d);
  }
  const bool first = same_value(p(z + scalar_from(static_cast<long>(k), z)), forward, tol);

  F backward = scalar_from(0L, z);
  for (unsigned j = 0; j <= k; ++j) {
    F c = scalar_from(row[j], z);
    if ((k - j) % 2 == 1) c = -c;
    backward = backward + c * p(z + scalar_from(static_cast<long>(j), z));
  }
  const bool second = same_value(delta_k(p, k)(z), backward, tol);
  return {first, second};
}

}  // namespace fdcalc
