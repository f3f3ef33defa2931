#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdcalc/errors.hpp"
#include "fdcalc/field.hpp"
#include "fdcalc/poly.hpp"

namespace fdcalc {

template <Scalar F>
struct RootMultiplicity {
  F root;
  unsigned multiplicity = 1;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// lead * prod (z - root)^multiplicity.
template <Scalar F>
struct FactoredPoly {
  F lead{1L};
  std::vector<RootMultiplicity<F>> roots;

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& r : roots) d += r.multiplicity;
    return d;
  }
  bool is_constant() const { return roots.empty(); }

  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
};

/// Merge equal roots (exact equality, or closeness for the numeric backend)
/// and sort them into the deterministic root order.
template <Scalar F>
FactoredPoly<F> normalized(FactoredPoly<F> f, const Tolerance& tol = {}) {
  if (is_zero(f.lead)) throw Error("the zero polynomial has no factored form");
  std::vector<RootMultiplicity<F>> merged;
  for (auto& r : f.roots) {
    if (r.multiplicity == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const auto& m) { return same_value(m.root, r.root, tol); });
    if (it == merged.end()) {
      merged.push_back(std::move(r));
    } else {
      it->multiplicity += r.multiplicity;
    }
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return scalar_order(a.root, b.root); });
  f.roots = std::move(merged);
  return f;
}

template <Scalar F>
FactoredPoly<F> make_factored(F lead, std::vector<RootMultiplicity<F>> roots,
                              const Tolerance& tol = {}) {
  return normalized(FactoredPoly<F>{std::move(lead), std::move(roots)}, tol);
}

template <Scalar F>
FactoredPoly<F> constant_factored(const F& c) {
  if (is_zero(c)) throw Error("the zero polynomial has no factored form");
  return FactoredPoly<F>{c, {}};
}

template <Scalar F>
Poly<F> expand(const FactoredPoly<F>& f) {
  Poly<F> p(f.lead);
  for (const auto& r : f.roots) p = p * pow(Poly<F>::linear(r.root), r.multiplicity);
  return p;
}

template <Scalar F>
FactoredPoly<F> multiply(const FactoredPoly<F>& a, const FactoredPoly<F>& b,
                         const Tolerance& tol = {}) {
  FactoredPoly<F> r{a.lead * b.lead, a.roots};
  r.roots.insert(r.roots.end(), b.roots.begin(), b.roots.end());
  return normalized(std::move(r), tol);
}

template <Scalar F>
FactoredPoly<F> product(const std::vector<FactoredPoly<F>>& fs, const Tolerance& tol = {}) {
  FactoredPoly<F> r{F(1L), {}};
  for (const auto& f : fs) {
    r.lead = r.lead * f.lead;
    r.roots.insert(r.roots.end(), f.roots.begin(), f.roots.end());
  }
  return normalized(std::move(r), tol);
}

/// Order of vanishing at w.
template <Scalar F>
unsigned ord(const FactoredPoly<F>& f, const F& w, const Tolerance& tol = {}) {
  for (const auto& r : f.roots)
    if (same_value(r.root, w, tol)) return r.multiplicity;
  return 0;
}

/// Classical radical: monic product of the distinct linear factors.
template <Scalar F>
Poly<F> classical_rad(const FactoredPoly<F>& f) {
  Poly<F> p(F(1L));
  for (const auto& r : f.roots) p = p * Poly<F>::linear(r.root);
  return p;
}

/// Factored form of f(z + k): every root moves by -k.
template <Scalar F>
FactoredPoly<F> shifted(const FactoredPoly<F>& f, long k) {
  FactoredPoly<F> r = f;
  for (auto& x : r.roots) x.root = x.root - scalar_from(k, x.root);
  return normalized(std::move(r));
}

template <Scalar F>
FactoredPoly<F> power(const FactoredPoly<F>& f, unsigned n) {
  FactoredPoly<F> r{F(1L), f.roots};
  for (unsigned k = 0; k < n; ++k) r.lead = r.lead * f.lead;
  for (auto& x : r.roots) x.multiplicity *= n;
  std::erase_if(r.roots, [](const auto& x) { return x.multiplicity == 0; });
  return r;
}

/// f(z) f(z-1) ... f(z-n+1) in factored form.
template <Scalar F>
FactoredPoly<F> falling_power(const FactoredPoly<F>& f, unsigned n, const Tolerance& tol = {}) {
  std::vector<FactoredPoly<F>> parts;
  for (unsigned j = 0; j < n; ++j) parts.push_back(shifted(f, -static_cast<long>(j)));
  return product(parts, tol);
}

/// f(z) f(z+1) ... f(z+n-1) in factored form.
template <Scalar F>
FactoredPoly<F> raising_power(const FactoredPoly<F>& f, unsigned n, const Tolerance& tol = {}) {
  std::vector<FactoredPoly<F>> parts;
  for (unsigned j = 0; j < n; ++j) parts.push_back(shifted(f, static_cast<long>(j)));
  return product(parts, tol);
}

/// (z - start)(z - start - 1)...(z - start - n + 1) in factored form.
template <Scalar F>
FactoredPoly<F> falling_factorial(const F& start, unsigned n) {
  FactoredPoly<F> r{scalar_from(1L, start), {}};
  for (unsigned j = 0; j < n; ++j) r.roots.push_back({start + scalar_from(j, start), 1});
  return normalized(std::move(r));
}

template <Scalar F>
FactoredPoly<F> monic(FactoredPoly<F> f) {
  f.lead = scalar_from(1L, f.lead);
  return f;
}

// ---------------------------------------------------------------------------
// Root finding, exact backend.

namespace detail {

/// Divides out (z - r) as often as it divides p; returns the count.
template <Scalar F>
unsigned strip_root(Poly<F>& p, const F& r) {
  unsigned m = 0;
  const Poly<F> lin = Poly<F>::linear(r);
  while (!p.is_zero() && is_zero(p(r))) {
    p = divmod(p, lin).first;
    ++m;
  }
  return m;
}

inline std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<std::pair<Integer, unsigned>> fac;
  for (unsigned long p = 2; p <= 100000 && Integer(p) * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    if (e) fac.emplace_back(Integer(p), e);
  }
  // A leftover cofactor is treated as prime; a composite one only makes the
  // candidate set smaller, never wrong, since every candidate is verified.
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : fac) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

/// Rational roots of a polynomial with rational coefficients (rational root theorem).
inline std::vector<Rational> rational_roots(const Poly<ExactScalar>& p) {
  std::vector<Rational> out;
  if (p.degree() < Degree(1)) return out;
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return out;
  // Integer coefficients with zero constant term stripped.
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational_part().get_den_mpz_t());
  std::vector<Integer> a;
  for (const auto& c : p.coeffs()) a.push_back(Integer(Rational(c.rational_part() * den_lcm)));
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) out.emplace_back(0);
  if (a.size() - low < 2) return out;
  const auto num = divisors(a[low]);
  const auto den = divisors(a.back());
  if (num.size() * den.size() > 200000) return out;
  const Poly<ExactScalar> q(std::vector<ExactScalar>(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end()));
  std::vector<Rational> seen;
  for (const auto& n : num) {
    for (const auto& d : den) {
      for (int s : {1, -1}) {
        Rational cand(Integer(n * s), d);
        cand.canonicalize();
        if (std::find(seen.begin(), seen.end(), cand) != seen.end()) continue;
        seen.push_back(cand);
        if (q(ExactScalar(cand)).is_zero()) out.push_back(cand);
      }
    }
  }
  return out;
}

}  // namespace detail

/// Splits p into linear factors over the exact field.  Roots come from
/// (i) the hint list, verified by division, (ii) the rational root theorem,
/// (iii) the quadratic formula on what is left when its degree is at most 2.
/// Anything else raises RootsUnavailable.
inline FactoredPoly<ExactScalar> factor(const Poly<ExactScalar>& p,
                                        const std::vector<ExactScalar>& hint = {}) {
  if (p.is_zero()) throw Error("the zero polynomial has no factored form");
  FactoredPoly<ExactScalar> out{p.lead(), {}};
  Poly<ExactScalar> rest = monic(p);
  auto take = [&](const ExactScalar& r) {
    unsigned m = detail::strip_root(rest, r);
    if (m > 0) out.roots.push_back({r, m});
  };
  for (const auto& r : hint) take(r);
  if (rest.degree() >= Degree(1)) {
    for (const auto& r : detail::rational_roots(rest)) take(ExactScalar(r));
  }
  if (rest.degree() == 1) {
    take(-rest.coeff(0) / rest.coeff(1));
  } else if (rest.degree() == 2) {
    // z^2 + b z + c (rest is monic)
    const ExactScalar b = rest.coeff(1), c = rest.coeff(0);
    const ExactScalar disc = b * b - ExactScalar(4) * c;
    auto s = exact_sqrt(disc);
    if (!s) throw RootsUnavailable("no exact square root of the discriminant " + disc.to_string());
    const ExactScalar half(Rational(1, 2));
    take((-b + *s) * half);
    take((-b - *s) * half);
  }
  if (rest.degree() >= Degree(1)) {
    throw RootsUnavailable("cannot split a factor of degree " + rest.degree().to_string() +
                           " exactly; supply the roots");
  }
  return normalized(std::move(out));
}

// ---------------------------------------------------------------------------
// Root finding, numeric backend.

struct AberthOptions {
  unsigned max_iterations = 2000;
};

/// All complex roots by Aberth-Ehrlich iteration; approximate roots closer than
/// the tolerance are merged and the cluster size becomes the multiplicity.
inline FactoredPoly<NumericScalar> factor(const Poly<NumericScalar>& p, const Tolerance& tol = {},
                                          AberthOptions opt = {}) {
  if (p.is_zero()) throw Error("the zero polynomial has no factored form");
  const unsigned prec = p.lead().precision();
  FactoredPoly<NumericScalar> out{p.lead(), {}};
  if (p.degree() == 0) return out;
  const std::size_t n = p.degree().value();
  const Poly<NumericScalar> mp = monic(p);
  // derivative
  std::vector<NumericScalar> dc;
  for (std::size_t k = 1; k < mp.coeffs().size(); ++k)
    dc.push_back(NumericScalar(static_cast<long>(k), prec) * mp.coeffs()[k]);
  const Poly<NumericScalar> dp(std::move(dc));

  Real radius(1L, prec);
  for (std::size_t k = 0; k < n; ++k) {
    Real a = abs(mp.coeff(k));
    if (radius < a + Real(1L, prec)) radius = a + Real(1L, prec);
  }
  radius = radius / Real(2L, prec);
  std::vector<NumericScalar> z;
  const Real two_pi = Real::pi(prec) * Real(2L, prec);
  for (std::size_t k = 0; k < n; ++k) {
    Real theta = two_pi * Real(static_cast<long>(k), prec) / Real(static_cast<long>(n), prec) +
                 Real(0.4, prec);
    z.push_back(NumericScalar::polar(radius, theta));
  }
  const Real stop = Real::pow2(-static_cast<long>(prec) + 8, prec);
  for (unsigned it = 0; it < opt.max_iterations; ++it) {
    Real worst(0L, prec);
    for (std::size_t k = 0; k < n; ++k) {
      NumericScalar pv = mp(z[k]);
      if (pv.is_zero()) continue;
      NumericScalar ratio = pv / dp(z[k]);
      NumericScalar sum(0L, prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        NumericScalar d = z[k] - z[j];
        if (!d.is_zero()) sum = sum + d.inverse();
      }
      NumericScalar step = ratio / (NumericScalar(1L, prec) - ratio * sum);
      z[k] = z[k] - step;
      Real s = abs(step) / (Real(1L, prec) + abs(z[k]));
      if (worst < s) worst = s;
    }
    if (worst < stop) break;
  }
  // Cluster merge: union of roots closer than the tolerance.
  const Real eps = effective_tolerance(tol, prec);
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(z[i] - z[j]) < eps) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters[find(i)].push_back(i);
  for (const auto& [rep, members] : clusters) {
    NumericScalar mean(0L, prec);
    for (auto i : members) mean = mean + z[i];
    mean = mean / NumericScalar(static_cast<long>(members.size()), prec);
    out.roots.push_back({mean, static_cast<unsigned>(members.size())});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return scalar_order(a.root, b.root); });
  return out;
}

inline FactoredPoly<NumericScalar> to_numeric(const FactoredPoly<ExactScalar>& f, unsigned prec) {
  FactoredPoly<NumericScalar> r{to_numeric(f.lead, prec), {}};
  for (const auto& x : f.roots) r.roots.push_back({to_numeric(x.root, prec), x.multiplicity});
  std::sort(r.roots.begin(), r.roots.end(),
            [](const auto& a, const auto& b) { return scalar_order(a.root, b.root); });
  return r;
}

}  // namespace fdcalc
