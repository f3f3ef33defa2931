#pragma once

// Checkers for the classical and difference Mason-type degree inequalities
// and for Fermat-type falling-power equations.  A checker never aborts on a
// failed hypothesis: it returns a report with every hypothesis flagged, both
// sides of the inequality, and a verdict.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdcalc/casorati.hpp"
#include "fdcalc/diffcalc.hpp"
#include "fdcalc/errors.hpp"
#include "fdcalc/factored.hpp"
#include "fdcalc/random.hpp"
#include "fdcalc/shiftcalc.hpp"

namespace fdcalc {

struct Hypothesis {
  std::string name;
  bool holds;
  std::string witness;  // empty when the hypothesis holds
};

enum class Verdict { holds, counterexample, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::counterexample: return "counterexample";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "";
}

struct MasonReport {
  std::string theorem;  // "classical", "difference", "difference_extended"
  bool equation_holds = false;
  std::vector<Hypothesis> hypotheses;
  long lhs = 0;
  long rhs = 0;
  long slack = 0;
  bool sharp = false;
  Verdict verdict = Verdict::not_applicable;
  std::optional<long> rhs_kappa;  // difference: deg of the kappa = 1 radical minus 1
  std::optional<long> rhs2;       // extended: the weaker (m - 1) deg rad form
  std::optional<long> slack2;

  bool hypotheses_hold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.holds; });
  }
};

struct FermatReport {
  bool identity_holds = false;
  std::string residual;  // residual polynomial as text
  Real residual_sup{0L, kMinPrecision};
  unsigned n = 0;
  unsigned m = 0;
  Rational bound;
  bool within_bound = false;
  std::vector<Hypothesis> hypotheses;
  Verdict verdict = Verdict::not_applicable;

  bool hypotheses_hold() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.holds; });
  }
};

namespace detail {

template <Scalar F>
bool poly_near_zero(const Poly<F>& p, const Tolerance& tol) {
  if constexpr (is_exact_v<F>) {
    return p.is_zero();
  } else {
    return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                       [&](const F& c) { return near_zero(c, tol); });
  }
}

template <Scalar F>
Real residual_sup(const Poly<F>& p, unsigned prec) {
  if constexpr (is_exact_v<F>) {
    return coefficient_sup(to_numeric(p, prec), prec);
  } else {
    return coefficient_sup(p, prec);
  }
}

template <Scalar F>
unsigned working_precision(const std::vector<FactoredPoly<F>>& fs) {
  unsigned prec = kMinPrecision;
  if constexpr (!is_exact_v<F>) {
    for (const auto& f : fs) {
      prec = std::max(prec, f.lead.precision());
      for (const auto& r : f.roots) prec = std::max(prec, r.root.precision());
    }
  } else {
    prec = 128;
  }
  return prec;
}

inline std::vector<std::string> default_labels(std::size_t count, bool abc) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(abc && count == 3 ? std::string(1, static_cast<char>('a' + i))
                                    : "f" + std::to_string(i + 1));
  return out;
}

template <Scalar F>
Hypothesis not_all_constant(const std::vector<FactoredPoly<F>>& fs) {
  const bool ok = std::any_of(fs.begin(), fs.end(), [](const auto& f) { return !f.is_constant(); });
  return {"not_all_constant", ok, ok ? "" : "every input is constant"};
}

template <Scalar F>
Hypothesis pairwise_shifting_prime_hypothesis(const std::vector<FactoredPoly<F>>& fs,
                                              const std::vector<std::string>& labels,
                                              const Tolerance& tol) {
  auto r = pairwise_shifting_prime(fs, tol);
  if (r.shifting_prime) return {"pairwise_shifting_prime", true, ""};
  const auto& w = *r.witness;
  return {"pairwise_shifting_prime", false,
          labels[w.first] + " and " + labels[w.second] + " share the shifting divisor z - (" +
              to_string(w.divisor) + ")"};
}

template <Scalar F>
Hypothesis linear_independence_hypothesis(const std::vector<Poly<F>>& ps,
                                          const std::vector<std::string>& labels,
                                          const Tolerance& tol) {
  const bool ok = !poly_near_zero(casoratian(ps), tol);
  std::string names;
  for (std::size_t i = 0; i < ps.size(); ++i) names += (i ? ", " : "") + labels[i];
  return {"linearly_independent", ok, ok ? "" : "the Casoratian of " + names + " vanishes"};
}

inline void settle(MasonReport& r) {
  r.slack = r.rhs - r.lhs;
  r.sharp = r.slack == 0;
  if (!r.equation_holds || !r.hypotheses_hold()) {
    r.verdict = Verdict::not_applicable;
  } else {
    r.verdict = r.slack >= 0 ? Verdict::holds : Verdict::counterexample;
  }
}

template <Scalar F>
long max_degree(const std::vector<FactoredPoly<F>>& fs) {
  long d = 0;
  for (const auto& f : fs) d = std::max(d, static_cast<long>(f.degree()));
  return d;
}

}  // namespace detail

/// max deg(a, b, c) <= deg rad(abc) - 1 for coprime a + b = c, not all constant.
template <Scalar F>
MasonReport mason_classical(const FactoredPoly<F>& a, const FactoredPoly<F>& b,
                            const FactoredPoly<F>& c, const Tolerance& tol = {}) {
  const std::vector<FactoredPoly<F>> fs{a, b, c};
  const auto labels = detail::default_labels(3, true);
  MasonReport r;
  r.theorem = "classical";
  const Poly<F> pa = expand(a), pb = expand(b), pc = expand(c);
  r.equation_holds = detail::poly_near_zero(pa + pb - pc, tol);

  Hypothesis coprime{"relatively_prime", true, ""};
  const Poly<F>* ps[] = {&pa, &pb, &pc};
  for (std::size_t i = 0; i < 3 && coprime.holds; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      Poly<F> g = gcd(*ps[i], *ps[j]);
      if (g.degree() >= Degree(1)) {
        coprime = {"relatively_prime", false,
                   "gcd(" + labels[i] + ", " + labels[j] + ") = " + to_string(g)};
        break;
      }
    }
  }
  r.hypotheses.push_back(coprime);
  r.hypotheses.push_back(detail::not_all_constant(fs));

  r.lhs = detail::max_degree(fs);
  r.rhs = static_cast<long>(classical_rad(product(fs, tol)).degree_or_zero()) - 1;
  detail::settle(r);
  return r;
}

/// max deg(a, b, c) <= deg rad_Delta(abc) - 1 for pairwise shifting prime
/// a + b = c, not all constant.  The right side is also computed from the
/// kappa = 1 radical; the two degrees always agree.
template <Scalar F>
MasonReport mason_delta(const FactoredPoly<F>& a, const FactoredPoly<F>& b, const FactoredPoly<F>& c,
                        const Tolerance& tol = {}) {
  const std::vector<FactoredPoly<F>> fs{a, b, c};
  const auto labels = detail::default_labels(3, true);
  MasonReport r;
  r.theorem = "difference";
  r.equation_holds = detail::poly_near_zero(expand(a) + expand(b) - expand(c), tol);
  r.hypotheses.push_back(detail::pairwise_shifting_prime_hypothesis(fs, labels, tol));
  r.hypotheses.push_back(detail::not_all_constant(fs));

  const FactoredPoly<F> abc = product(fs, tol);
  r.lhs = detail::max_degree(fs);
  r.rhs = static_cast<long>(rad_delta_factored(abc, tol).degree()) - 1;
  r.rhs_kappa = static_cast<long>(rad_kappa_factored(abc, 1, tol).degree()) - 1;
  if (*r.rhs_kappa != r.rhs)
    throw InconsistentResult("difference radical and kappa radical degrees differ");
  detail::settle(r);
  return r;
}

/// For f_1 + ... + f_m = f_(m+1):
///   max deg f_i <= deg rad_Delta^(m-1)(prod f_i) - m(m-1)/2          (rhs)
///               <= (m-1) deg rad_Delta(prod f_i) - m(m-1)/2          (rhs2)
template <Scalar F>
MasonReport mason_delta_ext(const std::vector<FactoredPoly<F>>& fs, const Tolerance& tol = {}) {
  if (fs.size() < 3) throw Error("the extended inequality needs m + 1 >= 3 polynomials");
  const std::size_t m = fs.size() - 1;
  const auto labels = detail::default_labels(fs.size(), false);
  MasonReport r;
  r.theorem = "difference_extended";

  std::vector<Poly<F>> ps;
  for (const auto& f : fs) ps.push_back(expand(f));
  Poly<F> sum;
  for (std::size_t i = 0; i < m; ++i) sum = sum + ps[i];
  r.equation_holds = detail::poly_near_zero(sum - ps[m], tol);

  r.hypotheses.push_back(detail::pairwise_shifting_prime_hypothesis(fs, labels, tol));
  std::size_t min_deg = fs[0].degree();
  std::size_t arg = 0;
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i].degree() < min_deg) min_deg = fs[i].degree(), arg = i;
  const bool deg_ok = min_deg + 1 >= m;
  r.hypotheses.push_back({"min_degree", deg_ok,
                          deg_ok ? "" : "deg " + labels[arg] + " = " + std::to_string(min_deg) +
                                            " < m - 1 = " + std::to_string(m - 1)});
  r.hypotheses.push_back(detail::linear_independence_hypothesis(
      std::vector<Poly<F>>(ps.begin(), ps.begin() + static_cast<long>(m)), labels, tol));

  const FactoredPoly<F> prod = product(fs, tol);
  const long tri = static_cast<long>(m * (m - 1) / 2);
  r.lhs = detail::max_degree(fs);
  r.rhs = static_cast<long>(rad_delta_q_factored(prod, static_cast<unsigned>(m - 1), tol).degree()) - tri;
  r.rhs2 = static_cast<long>(m - 1) * static_cast<long>(rad_delta_factored(prod, tol).degree()) - tri;
  if (r.rhs > *r.rhs2) throw InconsistentResult("truncated radical exceeds its (m - 1)-fold bound");
  r.slack2 = *r.rhs2 - r.lhs;
  detail::settle(r);
  return r;
}

namespace detail {

template <Scalar F>
std::vector<Hypothesis> falling_power_primality(const std::vector<FactoredPoly<F>>& powers,
                                                const std::vector<std::string>& labels,
                                                unsigned n, const Tolerance& tol) {
  std::vector<Hypothesis> out;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      const std::string a = labels[i] + "^" + std::to_string(n);
      const std::string b = labels[j] + "^" + std::to_string(n);
      auto d = common_shifting_divisors(powers[i], powers[j], tol);
      out.push_back({"shifting_prime(" + a + ", " + b + ")", d.empty(),
                     d.empty() ? "" : "common shifting divisor z - (" + to_string(d.front()) + ")"});
    }
  }
  return out;
}

inline void settle(FermatReport& r) {
  if (!r.identity_holds || !r.hypotheses_hold()) {
    r.verdict = Verdict::not_applicable;
  } else {
    r.verdict = r.within_bound ? Verdict::holds : Verdict::counterexample;
  }
}

template <Scalar F>
void fill_identity(FermatReport& r, const Poly<F>& residual, unsigned prec, const Tolerance& tol) {
  r.residual = to_string(residual);
  r.residual_sup = residual_sup(residual, prec);
  if constexpr (is_exact_v<F>) {
    r.identity_holds = residual.is_zero();
  } else {
    r.identity_holds = r.residual_sup < effective_tolerance(tol, prec);
  }
}

}  // namespace detail

/// a^(n falling) + b^(n falling) = c^(n falling) with the falling powers
/// pairwise shifting prime forces n <= 2, and n = 1 when an input is constant.
template <Scalar F>
FermatReport fermat_check(const FactoredPoly<F>& a, const FactoredPoly<F>& b, const FactoredPoly<F>& c,
                          unsigned n, const Tolerance& tol = {}) {
  if (n == 0) throw Error("the exponent must be positive");
  const std::vector<FactoredPoly<F>> fs{a, b, c};
  const auto labels = detail::default_labels(3, true);
  const unsigned prec = detail::working_precision(fs);
  FermatReport r;
  r.n = n;
  r.m = 2;

  const Poly<F> A = falling_power(expand(a), n), B = falling_power(expand(b), n),
                C = falling_power(expand(c), n);
  detail::fill_identity(r, A + B - C, prec, tol);

  r.hypotheses.push_back(detail::not_all_constant(fs));
  std::vector<FactoredPoly<F>> powers;
  for (const auto& f : fs) powers.push_back(falling_power(f, n, tol));
  for (auto& h : detail::falling_power_primality(powers, labels, n, tol)) r.hypotheses.push_back(h);

  const bool any_constant = std::any_of(fs.begin(), fs.end(), [](const auto& f) { return f.is_constant(); });
  r.bound = any_constant ? 1 : 2;
  r.within_bound = Rational(n) <= r.bound;
  detail::settle(r);
  return r;
}

/// Multi-term version.  With rhs_one = false, fs = (f_1, ..., f_(m+1)) and
/// the equation is sum_(i <= m) f_i^(n falling) = f_(m+1)^(n falling) with bound
/// m^2 - 1 - m(m-1) / (2 max deg f_i).  With rhs_one = true, fs = (f_1, ..., f_m),
/// the right side is 1 and the bound is m^2 - m - 1.
template <Scalar F>
FermatReport fermat_multi_check(const std::vector<FactoredPoly<F>>& fs, unsigned n, bool rhs_one,
                                const Tolerance& tol = {}) {
  if (n == 0) throw Error("the exponent must be positive");
  const std::size_t m = rhs_one ? fs.size() : fs.size() - 1;
  if (fs.empty() || m < 2) throw Error("the multi-term equation needs m >= 2 summands");
  const auto labels = detail::default_labels(fs.size(), false);
  const unsigned prec = detail::working_precision(fs);
  FermatReport r;
  r.n = n;
  r.m = static_cast<unsigned>(m);

  std::vector<Poly<F>> powers;
  for (const auto& f : fs) powers.push_back(falling_power(expand(f), n));
  Poly<F> lhs;
  for (std::size_t i = 0; i < m; ++i) lhs = lhs + powers[i];
  const Poly<F> rhs = rhs_one ? Poly<F>(scalar_from(1L, fs[0].lead)) : powers[m];
  detail::fill_identity(r, lhs - rhs, prec, tol);

  bool nonconstant = true;
  std::string which;
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].is_constant()) nonconstant = false, which += (which.empty() ? "" : ", ") + labels[i];
  r.hypotheses.push_back({"nonconstant", nonconstant, nonconstant ? "" : which + " constant"});

  std::vector<FactoredPoly<F>> fpowers;
  for (const auto& f : fs) fpowers.push_back(falling_power(f, n, tol));
  for (auto& h : detail::falling_power_primality(fpowers, labels, n, tol)) r.hypotheses.push_back(h);
  std::vector<std::string> power_labels;
  for (const auto& l : labels) power_labels.push_back(l + "^" + std::to_string(n));
  r.hypotheses.push_back(detail::linear_independence_hypothesis(
      std::vector<Poly<F>>(powers.begin(), powers.begin() + static_cast<long>(m)), power_labels, tol));

  const long mm = static_cast<long>(m);
  if (rhs_one) {
    r.bound = mm * mm - mm - 1;
  } else {
    const long maxdeg = std::max(1L, detail::max_degree(fs));
    r.bound = Rational(mm * mm - 1) - Rational(mm * (mm - 1), 2 * maxdeg);
    r.bound.canonicalize();
  }
  r.within_bound = Rational(n) <= r.bound;
  detail::settle(r);
  return r;
}

// ---------------------------------------------------------------------------
// Random instances

struct MasonInstanceOptions {
  RootGrid grid{-4, 4, 1};
  unsigned min_degree = 1;
  unsigned max_degree = 3;
  long max_lead = 3;
  std::size_t budget = 20000;
};

/// Rejection-samples f_1..f_m with roots on the grid, sets f_(m+1) to their
/// sum, and keeps the tuple once f_(m+1) splits exactly and the hypotheses
/// of the matching inequality hold (pairwise shifting prime, not all
/// constant; for m >= 3 also min degree >= m - 1 and independence).
inline std::vector<FactoredPoly<ExactScalar>> gen_mason_instance(unsigned m, std::uint64_t seed,
                                                                 const MasonInstanceOptions& opt = {}) {
  if (m < 2) throw Error("need m >= 2");
  if (opt.min_degree > opt.max_degree) throw Error("min_degree exceeds max_degree");
  RandomSource rs(seed);
  for (std::size_t attempt = 1; attempt <= opt.budget; ++attempt) {
    std::vector<FactoredPoly<ExactScalar>> fs;
    Poly<ExactScalar> sum;
    for (unsigned i = 0; i < m; ++i) {
      long lead = 0;
      while (lead == 0) lead = rs.integer(-opt.max_lead, opt.max_lead);
      FactoredPoly<ExactScalar> f{ExactScalar(lead), {}};
      const long d = rs.integer(opt.min_degree, opt.max_degree);
      for (long k = 0; k < d; ++k) f.roots.push_back({ExactScalar(rs.grid_point(opt.grid)), 1});
      f = normalized(std::move(f));
      sum = sum + expand(f);
      fs.push_back(std::move(f));
    }
    if (sum.is_zero()) continue;
    try {
      fs.push_back(factor(sum));
    } catch (const RootsUnavailable&) {
      continue;
    }
    MasonReport rep = m == 2 ? mason_delta(fs[0], fs[1], fs[2]) : mason_delta_ext(fs);
    if (rep.equation_holds && rep.hypotheses_hold()) return fs;
  }
  throw SamplingBudgetExhausted(opt.budget);
}

}  // namespace fdcalc
