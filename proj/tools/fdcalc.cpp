// Command-line front end: fdcalc <command> [expressions...] [options]

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "fdcalc/commands.hpp"

#ifndef FDCALC_FIXTURE_DIR
#define FDCALC_FIXTURE_DIR "fixtures"
#endif

namespace {

struct CommandInfo {
  const char* name;
  const char* help;
};

const CommandInfo kCommands[] = {
    {"delta", "forward difference Delta^k p (default k = 1)"},
    {"newton", "coefficients of p in the falling-factorial basis at --at"},
    {"height", "height of the shifting zero --at"},
    {"factor-at", "split p = (z - z0)^(n falling) g at the shifting zero --at"},
    {"roots", "leading coefficient and roots with multiplicities"},
    {"chains", "falling-factorial chain decomposition"},
    {"rad", "classical radical"},
    {"rad-delta", "difference radical"},
    {"rad-kappa", "kappa-difference radical (--kappa, default 1)"},
    {"rad-q", "difference radical truncated at level --q"},
    {"gcd-tower", "gcd(p, Delta p, ..., Delta^n p) (--n, default 1)"},
    {"shifting-prime", "common shifting divisors of two polynomials"},
    {"casoratian", "Casorati determinant (--form delta|shift)"},
    {"mason", "Mason-type inequality for a + b = c (--classical for the classical one)"},
    {"mason-ext", "extended inequality for f1 + ... + fm = f(m+1)"},
    {"fermat", "a^(n falling) + b^(n falling) = c^(n falling) check (--n)"},
    {"fermat-multi", "sum of falling powers check (--n, --rhs-one)"},
    {"gen-mason", "random instance satisfying the inequality hypotheses (--m, --seed)"},
    {"cubic-unit-family", "numeric check of the cubic unit family over all roots s (--t)"},
    {"verify-paper", "run the bundled fixture suite (--filter, --fixtures)"},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-difference polynomial calculus"};
  app.require_subcommand(1);

  fdcalc::CommandOptions opt;
  opt.fixtures_dir = FDCALC_FIXTURE_DIR;
  bool as_json = false;
  std::vector<std::string> inputs;
  long k = 0, kappa = 0, q = 0, n = 0, m = 0;
  std::string at, t;

  app.add_option("--backend", opt.backend, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  app.add_option("--precision", opt.precision, "numeric precision in bits")->capture_default_str();
  app.add_option("--tolerance", opt.tolerance, "numeric tolerance (0 = 2^(-precision/2))");
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_flag("--json", as_json, "emit JSON");
  auto* k_opt = app.add_option("--k", k, "difference order");
  auto* kappa_opt = app.add_option("--kappa", kappa, "shift of the kappa radical");
  auto* q_opt = app.add_option("--q", q, "truncation level");
  auto* n_opt = app.add_option("--n", n, "gcd tower depth or falling exponent");
  auto* m_opt = app.add_option("--m", m, "number of summands");
  auto* at_opt = app.add_option("--at", at, "point, as a constant expression");
  auto* t_opt = app.add_option("--t", t, "family parameter, as a constant expression");
  app.add_option("--form", opt.form, "Casoratian rows: delta or shift")->capture_default_str();
  app.add_flag("--classical", opt.classical, "use the classical radical");
  app.add_flag("--rhs-one", opt.rhs_one, "right-hand side is 1");
  app.add_option("--fixtures", opt.fixtures_dir, "fixture directory")->capture_default_str();
  app.add_option("--filter", opt.filter, "run only fixtures whose name contains this text");

  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("expressions", inputs, "polynomial expressions");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fdcalc::kExitUsage;
  }

  if (*k_opt) opt.k = k;
  if (*kappa_opt) opt.kappa = kappa;
  if (*q_opt) opt.q = q;
  if (*n_opt) opt.n = n;
  if (*m_opt) opt.m = m;
  if (*at_opt) opt.at = at;
  if (*t_opt) opt.t = t;

  const std::string cmd = app.get_subcommands().front()->get_name();
  const fdcalc::CommandResult r = fdcalc::run_command(cmd, inputs, opt);
  if (as_json) {
    std::cout << r.output.dump(2) << "\n";
  } else if (r.exit_code == fdcalc::kExitUsage || (r.output.contains("error") && r.exit_code != 0)) {
    std::cerr << r.text << "\n";
  } else {
    std::cout << r.text << "\n";
  }
  return r.exit_code;
}
