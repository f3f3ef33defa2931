#pragma once

// Seeded random inputs for property tests and instance generation.  All
// roots live on the grid {num / den : num_min <= num <= num_max}.

#include <cstdint>
#include <random>
#include <vector>

#include "fdcalc/factored.hpp"

namespace fdcalc {

struct RootGrid {
  long num_min = -6;
  long num_max = 6;
  long den = 1;
};

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational grid_point(const RootGrid& g) { return Rational(integer(g.num_min, g.num_max), g.den); }

  /// Nonzero rational p/q with |p| <= hmax, 1 <= q <= hmax.
  Rational nonzero_rational(long hmax) {
    long p = 0;
    while (p == 0) p = integer(-hmax, hmax);
    Rational q(p, integer(1, hmax));
    q.canonicalize();
    return q;
  }

  Rational rational(long hmax) {
    Rational q(integer(-hmax, hmax), integer(1, hmax));
    q.canonicalize();
    return q;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// A polynomial assembled from up to max_chains falling-factorial chains of
/// length at most max_length.  Starts are drawn from a small set of grid
/// points so that chains often fall into one shift class and overlap.
inline FactoredPoly<ExactScalar> random_chain_poly(RandomSource& rs, unsigned max_chains = 6,
                                                   unsigned max_length = 5,
                                                   const RootGrid& grid = {}) {
  FactoredPoly<ExactScalar> f{ExactScalar(rs.nonzero_rational(5)), {}};
  const long chains = rs.integer(0, max_chains);
  for (long c = 0; c < chains; ++c) {
    const Rational start = rs.grid_point(grid);
    const long len = rs.integer(1, max_length);
    for (long j = 0; j < len; ++j) f.roots.push_back({ExactScalar(start + j), 1});
  }
  return normalized(std::move(f));
}

/// Dense polynomial with small rational coefficients and degree <= max_degree.
inline Poly<ExactScalar> random_poly(RandomSource& rs, unsigned max_degree, long hmax = 9) {
  const long d = rs.integer(0, max_degree);
  std::vector<ExactScalar> c;
  for (long k = 0; k <= d; ++k) c.emplace_back(rs.rational(hmax));
  return Poly<ExactScalar>(std::move(c));
}

/// Scalar in Q(i, sqrt 2, sqrt 3) with small rational parts.
inline ExactScalar random_scalar(RandomSource& rs, long hmax = 10) {
  ExactScalar s(rs.rational(hmax));
  const RadicalKey keys[] = {{true, 1}, {false, 2}, {false, 3}, {true, 6}};
  for (const auto& k : keys)
    if (rs.coin()) s = s + ExactScalar::monomial(k, rs.rational(hmax));
  return s;
}

}  // namespace fdcalc
