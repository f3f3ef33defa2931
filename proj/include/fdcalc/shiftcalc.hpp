#pragma once

// Shifting zeros and the difference radicals built on them.
//
// A polynomial P factors uniquely as
//
//     P(z) = A * prod_j (z - z_j)^(n_j falling),
//
// where each (z_j, n_j) is a chain of zeros z_j, z_j + 1, ..., z_j + n_j - 1.
// The chains are found greedily inside each class of roots that differ by
// integers: take the smallest remaining root, extend it upward while the next
// integer translate still has multiplicity left, and repeat.  Everything in
// this header derives from that chain list or from the root multiplicities.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdcalc/diffcalc.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/factored.hpp"
#include "fdcalc/field.hpp"
#include "fdcalc/poly.hpp"

namespace fdcalc {

// ---------------------------------------------------------------------------
// Heights

/// Height of the shifting zero z0: the length n of the run
/// p(z0) = p(z0 + 1) = ... = p(z0 + n - 1) = 0 with p(z0 + n) != 0.
/// Zero when p(z0) != 0.
template <Scalar F>
unsigned shifting_zero_height(const Poly<F>& p, const F& z0, const Tolerance& tol = {}) {
  if (p.is_zero()) throw Error("the zero polynomial has no shifting zeros of finite height");
  unsigned n = 0;
  while (near_zero(p(z0 + scalar_from(static_cast<long>(n), z0)), tol)) ++n;
  return n;
}

/// The same height from the definition: Delta^k p(z0) = 0 for k < n, Delta^n p(z0) != 0.
template <Scalar F>
unsigned shifting_zero_height_by_delta(const Poly<F>& p, const F& z0, const Tolerance& tol = {}) {
  if (p.is_zero()) throw Error("the zero polynomial has no shifting zeros of finite height");
  unsigned n = 0;
  Poly<F> d = p;
  while (near_zero(d(z0), tol)) {
    d = delta(d);
    ++n;
  }
  return n;
}

/// Height read off the root multiset.
template <Scalar F>
unsigned shifting_zero_height(const FactoredPoly<F>& f, const F& z0, const Tolerance& tol = {}) {
  unsigned n = 0;
  while (ord(f, z0 + scalar_from(static_cast<long>(n), z0), tol) > 0) ++n;
  return n;
}

template <Scalar F>
struct FactorAt {
  unsigned height;
  Poly<F> cofactor;
};

/// p = (z - z0)^(n falling) * g with n the height at z0 and g(z0 + n) != 0.
template <Scalar F>
FactorAt<F> factor_at(const Poly<F>& p, const F& z0, const Tolerance& tol = {}) {
  const unsigned n = shifting_zero_height(p, z0, tol);
  if (n == 0) throw NotAZero(to_string(z0) + " is not a zero of " + to_string(p));
  return {n, divexact(p, falling_factorial_poly(z0, n))};
}

// ---------------------------------------------------------------------------
// Shift classes and chains

/// Roots that differ from one another by integers.
template <Scalar F>
struct ShiftClass {
  F representative;                     // the member with the smallest offset
  std::map<long, unsigned> members;     // offset from representative -> multiplicity
};

namespace detail {

template <Scalar F>
std::optional<long> root_offset(const F& a, const F& b, const Tolerance& tol) {
  try {
    return integer_offset(a - b, tol);
  } catch (const AmbiguousShift& e) {
    throw AmbiguousShift("cannot decide whether roots " + to_string(a) + " and " + to_string(b) +
                         " differ by an integer: " + e.what());
  }
}

}  // namespace detail

/// Partition of the roots into integer-shift classes, ordered by the
/// canonical text of their representatives.
template <Scalar F>
std::vector<ShiftClass<F>> shift_classes(const FactoredPoly<F>& f, const Tolerance& tol = {}) {
  struct Pending {
    F anchor;
    std::vector<std::pair<long, unsigned>> members;  // offset from anchor
  };
  std::vector<Pending> pending;
  for (const auto& r : f.roots) {
    bool placed = false;
    for (auto& cls : pending) {
      if (auto k = detail::root_offset(r.root, cls.anchor, tol)) {
        cls.members.emplace_back(*k, r.multiplicity);
        placed = true;
        break;
      }
    }
    if (!placed) pending.push_back({r.root, {{0L, r.multiplicity}}});
  }
  std::vector<ShiftClass<F>> out;
  for (auto& cls : pending) {
    long low = cls.members.front().first;
    for (const auto& [k, m] : cls.members) low = std::min(low, k);
    ShiftClass<F> sc{cls.anchor + scalar_from(low, cls.anchor), {}};
    for (const auto& [k, m] : cls.members) sc.members[k - low] += m;
    out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return scalar_order(a.representative, b.representative);
  });
  return out;
}

template <Scalar F>
struct Chain {
  F start;
  unsigned length;
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// P = lead * prod (z - start)^(length falling), chains in emission order.
template <Scalar F>
struct ChainDecomposition {
  F lead;
  std::vector<Chain<F>> chains;

  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& c : chains) d += c.length;
    return d;
  }
  friend bool operator==(const ChainDecomposition&, const ChainDecomposition&) = default;
};

template <Scalar F>
ChainDecomposition<F> chain_decomposition(const FactoredPoly<F>& f, const Tolerance& tol = {}) {
  ChainDecomposition<F> out{f.lead, {}};
  for (auto& cls : shift_classes(f, tol)) {
    auto& left = cls.members;
    while (!left.empty()) {
      const long a = left.begin()->first;
      unsigned len = 0;
      for (auto it = left.find(a); it != left.end() && it->first == a + static_cast<long>(len);) {
        ++len;
        if (--it->second == 0) {
          it = left.erase(it);
        } else {
          ++it;
        }
      }
      out.chains.push_back({cls.representative + scalar_from(a, cls.representative), len});
    }
  }
  return out;
}

/// Factored form of a chain decomposition.
template <Scalar F>
FactoredPoly<F> to_factored(const ChainDecomposition<F>& cd, const Tolerance& tol = {}) {
  FactoredPoly<F> f{cd.lead, {}};
  for (const auto& c : cd.chains)
    for (unsigned j = 0; j < c.length; ++j)
      f.roots.push_back({c.start + scalar_from(static_cast<long>(j), c.start), 1});
  return normalized(std::move(f), tol);
}

namespace detail {

/// prod over chains of (z - start)^(min(length, cap) falling), monic, factored.
template <Scalar F>
FactoredPoly<F> truncated_chain_product(const ChainDecomposition<F>& cd, unsigned cap,
                                        const Tolerance& tol) {
  FactoredPoly<F> f{F(1L), {}};
  for (const auto& c : cd.chains)
    for (unsigned j = 0; j < std::min(c.length, cap); ++j)
      f.roots.push_back({c.start + scalar_from(static_cast<long>(j), c.start), 1});
  return normalized(std::move(f), tol);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Radicals

/// Difference radical: monic product of (z - start) over the chain starts.
template <Scalar F>
FactoredPoly<F> rad_delta_factored(const FactoredPoly<F>& f, const Tolerance& tol = {}) {
  return detail::truncated_chain_product(chain_decomposition(f, tol), 1, tol);
}

template <Scalar F>
Poly<F> rad_delta(const FactoredPoly<F>& f, const Tolerance& tol = {}) {
  return expand(rad_delta_factored(f, tol));
}

/// Difference radical from multiplicities alone: (z - w) appears
/// max(0, ord_w - ord_(w-1)) times.  Cross-check for rad_delta.
template <Scalar F>
FactoredPoly<F> rad_delta_by_orders(const FactoredPoly<F>& f, const Tolerance& tol = {}) {
  FactoredPoly<F> r{F(1L), {}};
  for (const auto& x : f.roots) {
    const unsigned below = ord(f, x.root - scalar_from(1L, x.root), tol);
    if (x.multiplicity > below) r.roots.push_back({x.root, x.multiplicity - below});
  }
  return normalized(std::move(r), tol);
}

/// kappa-difference radical: prod_w (z - w)^(ord_w - min(ord_w, ord_(w+kappa))).
template <Scalar F>
FactoredPoly<F> rad_kappa_factored(const FactoredPoly<F>& f, long kappa, const Tolerance& tol = {}) {
  if (kappa == 0) throw Error("rad_kappa needs a nonzero kappa");
  FactoredPoly<F> r{F(1L), {}};
  for (const auto& x : f.roots) {
    const unsigned ahead = ord(f, x.root + scalar_from(kappa, x.root), tol);
    const unsigned d = x.multiplicity - std::min(x.multiplicity, ahead);
    if (d > 0) r.roots.push_back({x.root, d});
  }
  return normalized(std::move(r), tol);
}

template <Scalar F>
Poly<F> rad_kappa(const FactoredPoly<F>& f, long kappa, const Tolerance& tol = {}) {
  return expand(rad_kappa_factored(f, kappa, tol));
}

/// Difference radical of truncation level q: prod_j (z - z_j)^(min(n_j, q) falling).
template <Scalar F>
FactoredPoly<F> rad_delta_q_factored(const FactoredPoly<F>& f, unsigned q, const Tolerance& tol = {}) {
  if (q == 0) throw Error("truncation level must be at least 1");
  return detail::truncated_chain_product(chain_decomposition(f, tol), q, tol);
}

template <Scalar F>
Poly<F> rad_delta_q(const FactoredPoly<F>& f, unsigned q, const Tolerance& tol = {}) {
  return expand(rad_delta_q_factored(f, q, tol));
}

// ---------------------------------------------------------------------------
// gcd towers gcd(P, Delta P, ..., Delta^n P)

/// Closed form prod_j (z - z_j)^([n_j - n]^+ falling) from the chains.
template <Scalar F>
FactoredPoly<F> gcd_tower_closed(const FactoredPoly<F>& f, unsigned n, const Tolerance& tol = {}) {
  FactoredPoly<F> r{F(1L), {}};
  for (const auto& c : chain_decomposition(f, tol).chains)
    for (unsigned j = 0; c.length > n && j < c.length - n; ++j)
      r.roots.push_back({c.start + scalar_from(static_cast<long>(j), c.start), 1});
  return normalized(std::move(r), tol);
}

/// Iterated Euclidean gcd of P, Delta P, ..., Delta^n P (monic).
template <Scalar F>
Poly<F> gcd_tower_euclid(const Poly<F>& p, unsigned n) {
  if (p.is_zero()) throw Error("gcd tower of the zero polynomial");
  Poly<F> g = monic(p);
  Poly<F> d = p;
  for (unsigned k = 0; k < n; ++k) {
    d = delta(d);
    if (g.degree() == 0) break;
    g = gcd(g, d);
  }
  return g;
}

/// Both routes, required to agree.
template <Scalar F>
Poly<F> gcd_tower(const FactoredPoly<F>& f, unsigned n, const Tolerance& tol = {}) {
  Poly<F> closed = expand(gcd_tower_closed(f, n, tol));
  if constexpr (is_exact_v<F>) {
    Poly<F> euclid = gcd_tower_euclid(expand(f), n);
    if (!(closed == euclid))
      throw InconsistentResult("gcd tower: closed form " + to_string(closed) +
                               " differs from Euclidean " + to_string(euclid));
  }
  return closed;
}

template <Scalar F>
Poly<F> gcd_tower(const Poly<F>& p, unsigned n) {
  return gcd_tower_euclid(p, n);
}

// ---------------------------------------------------------------------------
// Common shifting divisors

/// Every z0 such that z - z0 is a common shifting divisor of f and g:
/// z0 is a zero of one of them with height h, and the other vanishes at
/// z0 + m for some 1 <= m <= h.  Sorted, without repetition.
template <Scalar F>
std::vector<F> common_shifting_divisors(const FactoredPoly<F>& f, const FactoredPoly<F>& g,
                                        const Tolerance& tol = {}) {
  std::vector<F> out;
  auto scan = [&](const FactoredPoly<F>& a, const FactoredPoly<F>& b) {
    for (const auto& r : a.roots) {
      const unsigned h = shifting_zero_height(a, r.root, tol);
      for (unsigned m = 1; m <= h; ++m) {
        if (ord(b, r.root + scalar_from(static_cast<long>(m), r.root), tol) > 0) {
          out.push_back(r.root);
          break;
        }
      }
    }
  };
  scan(f, g);
  scan(g, f);
  std::sort(out.begin(), out.end(), [](const F& a, const F& b) { return scalar_order(a, b); });
  out.erase(std::unique(out.begin(), out.end(),
                        [&](const F& a, const F& b) { return same_value(a, b, tol); }),
            out.end());
  return out;
}

template <Scalar F>
bool is_shifting_prime(const FactoredPoly<F>& f, const FactoredPoly<F>& g, const Tolerance& tol = {}) {
  return common_shifting_divisors(f, g, tol).empty();
}

template <Scalar F>
struct ShiftingPrimeWitness {
  std::size_t first;
  std::size_t second;
  F divisor;  // the z0 of the common shifting divisor z - z0
};

template <Scalar F>
struct PairwiseResult {
  bool shifting_prime = true;
  std::optional<ShiftingPrimeWitness<F>> witness;  // first offending pair
};

template <Scalar F>
PairwiseResult<F> pairwise_shifting_prime(const std::vector<FactoredPoly<F>>& fs,
                                          const Tolerance& tol = {}) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      auto d = common_shifting_divisors(fs[i], fs[j], tol);
      if (!d.empty()) return {false, ShiftingPrimeWitness<F>{i, j, d.front()}};
    }
  }
  return {};
}

}  // namespace fdcalc
