#pragma once

// JSON encodings.  Scalars are strings: canonical text for the exact
// backend, decimal "re + im*i" text for the numeric one.

#include <nlohmann/json.hpp>

#include "fdcalc/diffcalc.hpp"
#include "fdcalc/factored.hpp"
#include "fdcalc/shiftcalc.hpp"
#include "fdcalc/theorems.hpp"

namespace fdcalc {

using json = nlohmann::ordered_json;

inline std::string scalar_text(const ExactScalar& a) { return a.to_string(); }
inline std::string scalar_text(const NumericScalar& a) { return a.to_string(30); }

template <Scalar F>
json to_json(const Poly<F>& p) {
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(scalar_text(a));
  return {{"coeffs", c}};
}

template <Scalar F>
json to_json(const FactoredPoly<F>& f) {
  json roots = json::array();
  for (const auto& r : f.roots) roots.push_back({scalar_text(r.root), r.multiplicity});
  return {{"lead", scalar_text(f.lead)}, {"roots", roots}};
}

template <Scalar F>
json to_json(const NewtonExpansion<F>& e) {
  json c = json::array();
  for (const auto& a : e.coeffs) c.push_back(scalar_text(a));
  return {{"base", scalar_text(e.base)}, {"coeffs", c}};
}

template <Scalar F>
json to_json(const ChainDecomposition<F>& cd) {
  json chains = json::array();
  for (const auto& c : cd.chains) chains.push_back({scalar_text(c.start), c.length});
  return {{"lead", scalar_text(cd.lead)}, {"chains", chains}};
}

inline json to_json(const Hypothesis& h) {
  return {{"name", h.name}, {"holds", h.holds}, {"witness", h.witness}};
}

inline json to_json(const MasonReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back(to_json(h));
  json j = {{"theorem", r.theorem}, {"equation_holds", r.equation_holds}, {"hypotheses", hyps},
            {"lhs", r.lhs},         {"rhs", r.rhs},                       {"slack", r.slack},
            {"sharp", r.sharp}};
  if (r.rhs_kappa) j["rhs_kappa"] = *r.rhs_kappa;
  if (r.rhs2) j["rhs2"] = *r.rhs2;
  if (r.slack2) j["slack2"] = *r.slack2;
  j["verdict"] = to_string(r.verdict);
  return j;
}

inline std::string rational_text(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline json to_json(const FermatReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back(to_json(h));
  return {{"identity_holds", r.identity_holds},
          {"residual", r.residual},
          {"residual_sup", r.residual_sup.to_string(6)},
          {"n", r.n},
          {"m", r.m},
          {"bound", rational_text(r.bound)},
          {"within_bound", r.within_bound},
          {"hypotheses", hyps},
          {"verdict", to_string(r.verdict)}};
}

}  // namespace fdcalc
