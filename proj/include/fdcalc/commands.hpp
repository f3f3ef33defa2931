#pragma once

// Command dispatch shared by the command-line tool and the tests: every
// subcommand maps expression strings and options to a JSON document, a
// human-readable text and an exit code.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fdcalc/casorati.hpp"
#include "fdcalc/diffcalc.hpp"
#include "fdcalc/json.hpp"
#include "fdcalc/parser.hpp"
#include "fdcalc/shiftcalc.hpp"
#include "fdcalc/theorems.hpp"

namespace fdcalc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMismatch = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct CommandOptions {
  std::string backend = "exact";
  unsigned precision = 256;
  double tolerance = 0.0;
  std::uint64_t seed = 1;
  std::optional<long> k;
  std::optional<long> kappa;
  std::optional<long> q;
  std::optional<long> n;
  std::optional<long> m;
  std::optional<std::string> at;
  std::optional<std::string> t;
  std::string form = "delta";
  bool classical = false;
  bool rhs_one = false;
  std::string fixtures_dir;
  std::string filter;
};

struct CommandResult {
  int exit_code = kExitOk;
  json output;
  std::string text;
};

/// Names of all subcommands understood by run_command.
inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "delta",       "newton",     "height",     "factor-at",      "roots",
      "chains",      "rad",
      "rad-delta",   "rad-kappa",  "rad-q",      "gcd-tower",      "shifting-prime",
      "casoratian",  "mason",      "mason-ext",  "fermat",         "fermat-multi",
      "gen-mason",   "cubic-unit-family",        "verify-paper"};
  return names;
}

// ---------------------------------------------------------------------------
// Text helpers

/// Parseable factored form, e.g. roots(2/1; 0/1:2, 1/1:1).
template <Scalar F>
std::string factored_text(const FactoredPoly<F>& f) {
  std::string s = "roots(" + scalar_text(f.lead);
  for (std::size_t j = 0; j < f.roots.size(); ++j)
    s += (j == 0 ? "; " : ", ") + scalar_text(f.roots[j].root) + ":" + std::to_string(f.roots[j].multiplicity);
  return s + ")";
}

/// lead * ff(z - start, n) * ..., which the parser reads back.
template <Scalar F>
std::string chains_text(const ChainDecomposition<F>& cd) {
  std::string s = "(" + scalar_text(cd.lead) + ")";
  for (const auto& c : cd.chains) {
    const std::string base = is_zero(c.start) ? "z" : "z - (" + scalar_text(c.start) + ")";
    s += " * ff(" + base + ", " + std::to_string(c.length) + ")";
  }
  return s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string hypotheses_text(const std::vector<Hypothesis>& hs) {
  std::string s;
  for (const auto& h : hs) {
    s += "hypothesis " + h.name + ": " + (h.holds ? "holds" : "fails");
    if (!h.witness.empty()) s += " (" + h.witness + ")";
    s += "\n";
  }
  return s;
}

inline std::string report_text(const MasonReport& r) {
  std::string s = "equation holds: " + yes_no(r.equation_holds) + "\n" + hypotheses_text(r.hypotheses);
  s += "lhs (max degree) = " + std::to_string(r.lhs) + "\n";
  s += "rhs = " + std::to_string(r.rhs) + "\n";
  if (r.rhs_kappa) s += "rhs via kappa radical = " + std::to_string(*r.rhs_kappa) + "\n";
  if (r.rhs2) s += "weaker rhs = " + std::to_string(*r.rhs2) + "\n";
  s += "slack = " + std::to_string(r.slack) + (r.sharp ? " (sharp)" : "") + "\n";
  s += std::string("verdict: ") + to_string(r.verdict);
  return s;
}

inline std::string report_text(const FermatReport& r) {
  std::string s = "identity holds: " + yes_no(r.identity_holds) + "\n";
  s += "residual: " + r.residual + "\n";
  s += "residual sup: " + r.residual_sup.to_string(6) + "\n" + hypotheses_text(r.hypotheses);
  s += "n = " + std::to_string(r.n) + ", bound = " + rational_text(r.bound) +
       ", within bound: " + yes_no(r.within_bound) + "\n";
  s += std::string("verdict: ") + to_string(r.verdict);
  return s;
}

namespace detail {

// ---------------------------------------------------------------------------
// Input conversion per backend

template <Scalar F>
struct Inputs;

template <>
struct Inputs<ExactScalar> {
  unsigned precision;
  Tolerance tol;
  Poly<ExactScalar> poly(const std::string& s) const { return parse_poly(s); }
  FactoredPoly<ExactScalar> factored(const std::string& s) const { return parse_factored(s); }
  ExactScalar scalar(const std::string& s) const { return parse_scalar(s); }
};

template <>
struct Inputs<NumericScalar> {
  unsigned precision;
  Tolerance tol;
  Poly<NumericScalar> poly(const std::string& s) const { return to_numeric(parse_poly(s), precision); }
  FactoredPoly<NumericScalar> factored(const std::string& s) const {
    try {
      return to_numeric(parse_factored(s), precision);
    } catch (const RootsUnavailable&) {
      return factor(poly(s), tol);
    }
  }
  NumericScalar scalar(const std::string& s) const { return to_numeric(parse_scalar(s), precision); }
};

inline void require_arity(const std::string& cmd, const std::vector<std::string>& in, std::size_t lo,
                          std::size_t hi) {
  if (in.size() < lo || in.size() > hi) {
    std::string want = lo == hi ? std::to_string(lo)
                                : hi == SIZE_MAX ? "at least " + std::to_string(lo)
                                                 : std::to_string(lo) + " to " + std::to_string(hi);
    throw UsageError(cmd + " expects " + want + " expression(s), got " + std::to_string(in.size()));
  }
}

template <class T>
T required(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

inline unsigned positive(long v, const char* flag) {
  if (v < 1) throw UsageError(std::string(flag) + " must be a positive integer");
  return static_cast<unsigned>(v);
}

inline unsigned nonnegative(long v, const char* flag) {
  if (v < 0) throw UsageError(std::string(flag) + " must be a nonnegative integer");
  return static_cast<unsigned>(v);
}

template <Scalar F>
CommandResult poly_result(const Poly<F>& p) {
  return {kExitOk, {{"result", to_json(p)}}, to_string(p)};
}

template <Scalar F>
std::vector<FactoredPoly<F>> factored_all(const Inputs<F>& in, const std::vector<std::string>& srcs) {
  std::vector<FactoredPoly<F>> fs;
  for (const auto& s : srcs) fs.push_back(in.factored(s));
  return fs;
}

template <Scalar F>
CommandResult dispatch(const std::string& cmd, const std::vector<std::string>& args,
                       const CommandOptions& opt) {
  const Inputs<F> in{opt.precision, Tolerance{opt.tolerance}};
  const Tolerance tol = in.tol;

  if (cmd == "delta") {
    require_arity(cmd, args, 1, 1);
    return poly_result(delta_k(in.poly(args[0]), nonnegative(opt.k.value_or(1), "--k")));
  }
  if (cmd == "newton") {
    require_arity(cmd, args, 1, 1);
    auto e = to_newton(in.poly(args[0]), in.scalar(required(opt.at, "--at")));
    std::string text;
    for (std::size_t j = 0; j < e.coeffs.size(); ++j)
      text += (j ? "\n" : "") + std::string("a_") + std::to_string(j) + " = " + scalar_text(e.coeffs[j]);
    return {kExitOk, {{"result", to_json(e)}}, text};
  }
  if (cmd == "height") {
    require_arity(cmd, args, 1, 1);
    const Poly<F> p = in.poly(args[0]);
    const F z0 = in.scalar(required(opt.at, "--at"));
    const unsigned h = shifting_zero_height(p, z0, tol);
    if (shifting_zero_height_by_delta(p, z0, tol) != h)
      throw InconsistentResult("run-length and difference heights disagree");
    return {kExitOk, {{"result", {{"height", h}}}}, std::to_string(h)};
  }
  if (cmd == "factor-at") {
    require_arity(cmd, args, 1, 1);
    auto r = factor_at(in.poly(args[0]), in.scalar(required(opt.at, "--at")), tol);
    return {kExitOk,
            {{"result", {{"height", r.height}, {"cofactor", to_json(r.cofactor)}}}},
            "height " + std::to_string(r.height) + ", cofactor " + to_string(r.cofactor)};
  }
  if (cmd == "roots") {
    require_arity(cmd, args, 1, 1);
    auto f = in.factored(args[0]);
    return {kExitOk, {{"result", to_json(f)}}, factored_text(f)};
  }
  if (cmd == "chains") {
    require_arity(cmd, args, 1, 1);
    auto cd = chain_decomposition(in.factored(args[0]), tol);
    return {kExitOk, {{"result", to_json(cd)}}, chains_text(cd)};
  }
  if (cmd == "rad") {
    require_arity(cmd, args, 1, 1);
    return poly_result(classical_rad(in.factored(args[0])));
  }
  if (cmd == "rad-delta") {
    require_arity(cmd, args, 1, 1);
    const auto f = in.factored(args[0]);
    const auto r = rad_delta_factored(f, tol);
    if (!(r == rad_delta_by_orders(f, tol)))
      throw InconsistentResult("chain and order formulas for the difference radical disagree");
    return poly_result(expand(r));
  }
  if (cmd == "rad-kappa") {
    require_arity(cmd, args, 1, 1);
    const long kappa = opt.kappa.value_or(1);
    if (kappa == 0) throw UsageError("--kappa must be nonzero");
    return poly_result(rad_kappa(in.factored(args[0]), kappa, tol));
  }
  if (cmd == "rad-q") {
    require_arity(cmd, args, 1, 1);
    return poly_result(rad_delta_q(in.factored(args[0]), positive(required(opt.q, "--q"), "--q"), tol));
  }
  if (cmd == "gcd-tower") {
    require_arity(cmd, args, 1, 1);
    return poly_result(gcd_tower(in.factored(args[0]), positive(opt.n.value_or(1), "--n"), tol));
  }
  if (cmd == "shifting-prime") {
    require_arity(cmd, args, 2, 2);
    auto d = common_shifting_divisors(in.factored(args[0]), in.factored(args[1]), tol);
    json divs = json::array();
    std::string text = d.empty() ? "shifting prime" : "not shifting prime; common shifting divisors:";
    for (std::size_t j = 0; j < d.size(); ++j) {
      divs.push_back(scalar_text(d[j]));
      text += std::string(j ? ", " : " ") + "z - (" + scalar_text(d[j]) + ")";
    }
    return {kExitOk, {{"result", {{"shifting_prime", d.empty()}, {"common_shifting_divisors", divs}}}}, text};
  }
  if (cmd == "casoratian") {
    require_arity(cmd, args, 1, SIZE_MAX);
    CasoratiForm form;
    if (opt.form == "delta") {
      form = CasoratiForm::delta;
    } else if (opt.form == "shift") {
      form = CasoratiForm::shift;
    } else {
      throw UsageError("--form must be delta or shift");
    }
    std::vector<Poly<F>> ps;
    for (const auto& s : args) ps.push_back(in.poly(s));
    return poly_result(casoratian(ps, form));
  }
  if (cmd == "mason") {
    require_arity(cmd, args, 3, 3);
    auto fs = factored_all(in, args);
    MasonReport r = opt.classical ? mason_classical(fs[0], fs[1], fs[2], tol) : mason_delta(fs[0], fs[1], fs[2], tol);
    return {r.verdict == Verdict::holds ? kExitOk : kExitComputation, {{"result", to_json(r)}}, report_text(r)};
  }
  if (cmd == "mason-ext") {
    require_arity(cmd, args, 3, SIZE_MAX);
    MasonReport r = mason_delta_ext(factored_all(in, args), tol);
    return {r.verdict == Verdict::holds ? kExitOk : kExitComputation, {{"result", to_json(r)}}, report_text(r)};
  }
  if (cmd == "fermat") {
    require_arity(cmd, args, 3, 3);
    auto fs = factored_all(in, args);
    FermatReport r = fermat_check(fs[0], fs[1], fs[2], positive(required(opt.n, "--n"), "--n"), tol);
    return {r.verdict == Verdict::holds ? kExitOk : kExitComputation, {{"result", to_json(r)}}, report_text(r)};
  }
  if (cmd == "fermat-multi") {
    require_arity(cmd, args, opt.rhs_one ? 2 : 3, SIZE_MAX);
    FermatReport r = fermat_multi_check(factored_all(in, args), positive(required(opt.n, "--n"), "--n"),
                                        opt.rhs_one, tol);
    return {r.verdict == Verdict::holds ? kExitOk : kExitComputation, {{"result", to_json(r)}}, report_text(r)};
  }
  throw UsageError("unknown command '" + cmd + "'");
}

// ---------------------------------------------------------------------------
// The degree-9 cubic family: f1^(3 falling) + f2^(3 falling) + f3^(3 falling) = 1,
// with s a root of s^9 - 144 s^3 + 108 and t a nonzero parameter.

inline CommandResult cubic_unit_family(const CommandOptions& opt) {
  const unsigned prec = std::max(opt.precision, kMinPrecision);
  const Tolerance tol{opt.tolerance};
  using N = NumericScalar;
  using P = Poly<N>;
  const N t = to_numeric(parse_scalar(opt.t.value_or("1")), prec);
  if (near_zero(t, tol)) throw UsageError("--t must be nonzero");

  std::vector<N> c(10, N(0L, prec));
  c[0] = N(108L, prec);
  c[3] = N(-144L, prec);
  c[9] = N(1L, prec);
  auto sroots = factor(P(std::move(c)), tol);

  json rows = json::array();
  std::string text;
  bool all_hold = true;
  Real worst(0L, prec);
  for (const auto& sr : sroots.roots) {
    const N& s = sr.root;
    const N two(2L, prec), three(3L, prec), four(4L, prec);
    const N s2 = s * s, s3 = s2 * s, t2 = t * t, t3 = t2 * t;
    const N a2 = -(three * t) / (two * s);
    const N a1 = three * (four * s2 - t2) / (four * s2);
    const N a0 = (three * t3 - N(36L, prec) * s2 * t - four * s3 * s3) / (N(24L, prec) * s3);
    const N one(1L, prec);
    const P f1(std::vector<N>{a0, -a1, -a2, one});
    const P f2(std::vector<N>{-(three * a0 + s3) / three, a1, a2, -one});
    const P f3(std::vector<N>{(t2 - four * s2) / (four * s), t, s});

    json row = {{"s", scalar_text(s)}};
    try {
      FermatReport r = fermat_multi_check(
          std::vector<FactoredPoly<N>>{factor(f1, tol), factor(f2, tol), factor(f3, tol)}, 3, true, tol);
      row["report"] = to_json(r);
      all_hold = all_hold && r.identity_holds;
      if (worst < r.residual_sup) worst = r.residual_sup;
      text += "s = " + s.to_string(12) + ": residual sup " + r.residual_sup.to_string(6) +
              ", identity " + (r.identity_holds ? "holds" : "fails") + ", verdict " + to_string(r.verdict) + "\n";
    } catch (const AmbiguousShift& e) {
      // Root offsets could not be classified; the identity itself is still checked.
      P lhs = falling_power(f1, 3) + falling_power(f2, 3) + falling_power(f3, 3) - P(one);
      Real sup = coefficient_sup(lhs, prec);
      const bool ok = sup < effective_tolerance(tol, prec);
      all_hold = all_hold && ok;
      if (worst < sup) worst = sup;
      row["identity_holds"] = ok;
      row["residual_sup"] = sup.to_string(6);
      row["hypothesis_error"] = e.what();
      text += "s = " + s.to_string(12) + ": residual sup " + sup.to_string(6) + ", hypotheses undecided\n";
    }
    rows.push_back(row);
  }
  text += "all identities hold: " + yes_no(all_hold);
  json out = {{"result",
               {{"t", scalar_text(t)},
                {"precision", prec},
                {"roots", rows},
                {"all_identities_hold", all_hold},
                {"max_residual_sup", worst.to_string(6)}}}};
  return {all_hold ? kExitOk : kExitComputation, out, text};
}

inline CommandResult gen_mason(const CommandOptions& opt) {
  const long m = opt.m.value_or(2);
  if (m < 2) throw UsageError("--m must be at least 2");
  MasonInstanceOptions gen;
  if (m >= 3) gen.min_degree = static_cast<unsigned>(m - 1), gen.max_degree = static_cast<unsigned>(m);
  auto fs = gen_mason_instance(static_cast<unsigned>(m), opt.seed, gen);
  MasonReport r = m == 2 ? mason_delta(fs[0], fs[1], fs[2]) : mason_delta_ext(fs);
  json polys = json::array();
  std::string text;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    polys.push_back(to_json(fs[i]));
    text += "f" + std::to_string(i + 1) + " = " + factored_text(fs[i]) + "\n";
  }
  return {r.verdict == Verdict::holds ? kExitOk : kExitComputation,
          {{"result", {{"polynomials", polys}, {"report", to_json(r)}}}}, text + report_text(r)};
}

}  // namespace detail

inline CommandResult verify_fixtures(const CommandOptions& opt);

/// Runs one subcommand; errors are folded into the exit code and an
/// {"error": ...} document.
inline CommandResult run_command(const std::string& cmd, const std::vector<std::string>& args,
                                 const CommandOptions& opt) {
  CommandResult res;
  try {
    if (opt.backend != "exact" && opt.backend != "numeric")
      throw UsageError("--backend must be exact or numeric");
    if (opt.precision < kMinPrecision)
      throw UsageError("--precision must be at least " + std::to_string(kMinPrecision));
    if (opt.tolerance < 0) throw UsageError("--tolerance must be nonnegative");
    if (cmd == "verify-paper") {
      detail::require_arity(cmd, args, 0, 0);
      res = verify_fixtures(opt);
    } else if (cmd == "cubic-unit-family") {
      detail::require_arity(cmd, args, 0, 0);
      res = detail::cubic_unit_family(opt);
    } else if (cmd == "gen-mason") {
      detail::require_arity(cmd, args, 0, 0);
      res = detail::gen_mason(opt);
    } else if (opt.backend == "numeric") {
      res = detail::dispatch<NumericScalar>(cmd, args, opt);
    } else {
      res = detail::dispatch<ExactScalar>(cmd, args, opt);
    }
  } catch (const UsageError& e) {
    return {kExitUsage, {{"error", e.what()}}, std::string("error: ") + e.what()};
  } catch (const ParseError& e) {
    return {kExitUsage, {{"error", e.what()}, {"offset", e.offset()}}, std::string("parse error at ") + e.what()};
  } catch (const std::exception& e) {
    return {kExitComputation, {{"error", e.what()}}, std::string("error: ") + e.what()};
  }
  json doc = {{"command", cmd}};
  if (cmd != "verify-paper" && cmd != "cubic-unit-family" && cmd != "gen-mason") doc["backend"] = opt.backend;
  for (auto& [key, value] : res.output.items()) doc[key] = value;
  res.output = std::move(doc);
  return res;
}

// ---------------------------------------------------------------------------
// Fixtures

struct FixtureCase {
  std::string name;
  std::string source;  // "paper:<anchor>" or "derived:<oracle>"
  std::string command;
  std::vector<std::string> inputs;
  CommandOptions options;
  json expected;
  int expect_exit = kExitOk;
  std::string file;
};

inline FixtureCase fixture_from_json(const json& j, const std::string& file) {
  FixtureCase c;
  c.file = file;
  c.name = j.at("name").get<std::string>();
  c.source = j.at("source").get<std::string>();
  if (c.source.rfind("paper:", 0) != 0 && c.source.rfind("derived:", 0) != 0)
    throw Error(file + ": source must start with paper: or derived:");
  c.command = j.at("command").get<std::string>();
  if (j.contains("inputs")) c.inputs = j.at("inputs").get<std::vector<std::string>>();
  c.options.backend = j.value("backend", std::string("exact"));
  c.options.precision = j.value("precision", 256u);
  c.options.tolerance = j.value("tolerance", 0.0);
  if (j.contains("options")) {
    const json& o = j.at("options");
    auto opt_long = [&](const char* key, std::optional<long>& dst) {
      if (o.contains(key)) dst = o.at(key).get<long>();
    };
    opt_long("k", c.options.k);
    opt_long("kappa", c.options.kappa);
    opt_long("q", c.options.q);
    opt_long("n", c.options.n);
    opt_long("m", c.options.m);
    if (o.contains("at")) c.options.at = o.at("at").get<std::string>();
    if (o.contains("t")) c.options.t = o.at("t").get<std::string>();
    if (o.contains("seed")) c.options.seed = o.at("seed").get<std::uint64_t>();
    c.options.form = o.value("form", std::string("delta"));
    c.options.classical = o.value("classical", false);
    c.options.rhs_one = o.value("rhs_one", false);
  }
  c.expected = j.value("expected", json::object());
  c.expect_exit = j.value("exit", kExitOk);
  return c;
}

/// All *.json files below dir, sorted by fixture name.
inline std::vector<FixtureCase> load_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw UsageError("fixture directory not found: " + dir);
  std::vector<FixtureCase> out;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    std::ifstream is(entry.path());
    json j;
    try {
      j = json::parse(is);
    } catch (const json::exception& e) {
      throw Error(entry.path().string() + ": " + e.what());
    }
    out.push_back(fixture_from_json(j, entry.path().string()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

namespace detail {

inline Poly<ExactScalar> poly_from_json(const json& j) {
  std::vector<ExactScalar> c;
  for (const auto& s : j.at("coeffs")) c.push_back(parse_scalar(s.get<std::string>()));
  return Poly<ExactScalar>(std::move(c));
}

inline double number_from_json(const json& j) {
  return j.is_string() ? std::stod(j.get<std::string>()) : j.get<double>();
}

/// Subset match of expected against actual.  Objects with a single "$..."
/// key are matchers:
///   {"$poly": "<expr>"}      actual {"coeffs": [...]} equals the parsed expression
///   {"$scalars": [...]}      actual list of scalars equals the set, in any order
///   {"$scalar": "<expr>"}    actual scalar text equals the parsed value
///   {"$roots": [[r, m], ...]} actual root list equals the multiset, in any order
///   {"$lt": x}               actual number (or numeric text) is below x
inline bool match(const json& expected, const json& actual, const std::string& path, std::string& why) {
  auto fail = [&](const std::string& msg) {
    why = path + ": " + msg;
    return false;
  };
  try {
    if (expected.is_object() && expected.size() == 1 && expected.begin().key().starts_with("$")) {
      const std::string op = expected.begin().key();
      const json& arg = expected.begin().value();
      if (op == "$poly") {
        if (!(poly_from_json(actual) == parse_poly(arg.get<std::string>())))
          return fail("expected polynomial " + arg.get<std::string>() + ", got " + to_string(poly_from_json(actual)));
        return true;
      }
      if (op == "$scalar") {
        if (!(parse_scalar(actual.get<std::string>()) == parse_scalar(arg.get<std::string>())))
          return fail("expected " + arg.get<std::string>() + ", got " + actual.dump());
        return true;
      }
      if (op == "$scalars") {
        std::vector<ExactScalar> want, got;
        for (const auto& s : arg) want.push_back(parse_scalar(s.get<std::string>()));
        for (const auto& s : actual) got.push_back(parse_scalar(s.get<std::string>()));
        auto order = [](const ExactScalar& a, const ExactScalar& b) { return scalar_order(a, b); };
        std::sort(want.begin(), want.end(), order);
        std::sort(got.begin(), got.end(), order);
        if (want != got) return fail("expected scalar set " + arg.dump() + ", got " + actual.dump());
        return true;
      }
      if (op == "$roots") {
        using Pair = std::pair<ExactScalar, unsigned>;
        std::vector<Pair> want, got;
        for (const auto& r : arg) want.emplace_back(parse_scalar(r[0].get<std::string>()), r[1].get<unsigned>());
        for (const auto& r : actual) got.emplace_back(parse_scalar(r[0].get<std::string>()), r[1].get<unsigned>());
        auto order = [](const Pair& a, const Pair& b) {
          return scalar_order(a.first, b.first) || (a.first == b.first && a.second < b.second);
        };
        std::sort(want.begin(), want.end(), order);
        std::sort(got.begin(), got.end(), order);
        if (want != got) return fail("expected roots " + arg.dump() + ", got " + actual.dump());
        return true;
      }
      if (op == "$lt") {
        if (!(number_from_json(actual) < arg.get<double>()))
          return fail("expected a value below " + arg.dump() + ", got " + actual.dump());
        return true;
      }
      return fail("unknown matcher " + op);
    }
    if (expected.is_object()) {
      if (!actual.is_object()) return fail("expected an object, got " + actual.dump());
      for (const auto& [key, value] : expected.items()) {
        if (!actual.contains(key)) return fail("missing field " + key);
        if (!match(value, actual.at(key), path + "." + key, why)) return false;
      }
      return true;
    }
    if (expected.is_array()) {
      if (!actual.is_array() || actual.size() != expected.size())
        return fail("expected " + expected.dump() + ", got " + actual.dump());
      for (std::size_t i = 0; i < expected.size(); ++i)
        if (!match(expected[i], actual[i], path + "[" + std::to_string(i) + "]", why)) return false;
      return true;
    }
    if (expected != actual) return fail("expected " + expected.dump() + ", got " + actual.dump());
    return true;
  } catch (const std::exception& e) {
    return fail(std::string("cannot compare: ") + e.what());
  }
}

}  // namespace detail

struct FixtureOutcome {
  std::string name;
  std::string source;
  bool passed = false;
  std::string detail;
};

inline FixtureOutcome run_fixture(const FixtureCase& c) {
  FixtureOutcome o{c.name, c.source, false, ""};
  CommandResult r = run_command(c.command, c.inputs, c.options);
  if (r.exit_code != c.expect_exit) {
    o.detail = "exit " + std::to_string(r.exit_code) + ", expected " + std::to_string(c.expect_exit);
    if (r.output.contains("error")) o.detail += ": " + r.output["error"].get<std::string>();
    return o;
  }
  o.passed = detail::match(c.expected, r.output, "$", o.detail);
  return o;
}

inline CommandResult verify_fixtures(const CommandOptions& opt) {
  if (opt.fixtures_dir.empty()) throw UsageError("no fixture directory configured");
  json rows = json::array();
  std::ostringstream text;
  std::size_t passed = 0, total = 0;
  for (const auto& c : load_fixtures(opt.fixtures_dir)) {
    if (!opt.filter.empty() && c.name.find(opt.filter) == std::string::npos) continue;
    FixtureOutcome o = run_fixture(c);
    ++total;
    if (o.passed) ++passed;
    rows.push_back({{"name", o.name}, {"source", o.source}, {"passed", o.passed}, {"detail", o.detail}});
    text << (o.passed ? "PASS  " : "FAIL  ") << o.name << "  [" << o.source << "]";
    if (!o.passed) text << "\n      " << o.detail;
    text << "\n";
  }
  text << passed << "/" << total << " fixtures passed";
  const bool ok = passed == total && total > 0;
  return {ok ? kExitOk : kExitMismatch,
          {{"result", {{"fixtures", rows}, {"passed", passed}, {"total", total}}}}, text.str()};
}

}  // namespace fdcalc
