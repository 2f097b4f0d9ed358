#include "genform/mechanics.hpp"
#include "genform/parse.hpp"
#include "genform/suites.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace genform;

int main(int argc, char** argv) {
  CLI::App app{"Exact calculus of generalized differential forms and vectors"};
  app.require_subcommand(1);

  int n = 2;
  std::string k_text = "1";
  std::string format = "text";
  app.add_option("--n", n, "chart dimension")->capture_default_str();
  app.add_option("--k", k_text, "structure constant k (rational, nonzero)")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
  std::string source;
  eval_cmd->add_option("expr", source, "expression source")->required();

  auto* check_cmd = app.add_subcommand("check", "run a property suite");
  SuiteConfig cfg;
  std::string suite = "all";
  std::uint64_t seed = 0;
  check_cmd->add_option("--suite", suite, "suite name or 'all'")
      ->capture_default_str();
  check_cmd->add_option("--seed", seed, "master seed")->capture_default_str();
  check_cmd->add_option("--trials", cfg.trials, "trials per suite")
      ->capture_default_str();
  check_cmd->add_option("--max-degree", cfg.max_degree,
                        "max polynomial degree of generated instances")
      ->capture_default_str();
  check_cmd->add_option("--max-terms", cfg.max_terms,
                        "max terms per generated polynomial")
      ->capture_default_str();

  auto* mech_cmd = app.add_subcommand(
      "mech", "constrained-Hamiltonian dynamics check");
  std::string h0_text = "0";
  int m = 1;
  mech_cmd->add_option("--m", m, "degrees of freedom")->capture_default_str();
  mech_cmd->add_option("--H0", h0_text, "Hamiltonian, polynomial in t, qi, pi")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Rational k;
  try {
    k = parse_rational(k_text);
    if (k == 0) throw std::invalid_argument("k must be nonzero");
    if (n < 1) throw std::invalid_argument("n must be positive");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (*eval_cmd) {
    Chart chart = Chart::standard(n, k);
    try {
      Value v = eval(parse(source, chart), chart);
      std::cout << to_string(v, chart) << "\n";
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    return 0;
  }

  if (*check_cmd) {
    cfg.suite = suite;
    cfg.n = n;
    cfg.k = k;
    cfg.seed = seed;
    if (!is_known_suite(cfg.suite)) {
      std::cerr << "error: unknown suite '" << cfg.suite << "'; known:";
      for (const auto& s : kSuiteNames) std::cerr << " " << s;
      std::cerr << " all\n";
      return 2;
    }
    SuiteReport report;
    try {
      report = run_suite(cfg);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    std::cout << (format == "json" ? render_report_json(report)
                                   : render_report_text(report));
    return report.passed() ? 0 : 1;
  }

  // mech
  if (m < 1) {
    std::cerr << "error: m must be positive\n";
    return 2;
  }
  Chart names;
  names.n = 2 * m + 1;
  names.k = k;
  names.coords.push_back("t");
  for (int i = 1; i <= m; ++i) names.coords.push_back("q" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.coords.push_back("p" + std::to_string(i));
  try {
    Poly H0 = parse_poly(h0_text, names);
    DynamicsReport rep = verify_dynamics(ExtendedChart::make(m, std::move(H0), k));
    std::cout << (format == "json" ? render_dynamics_json(rep)
                                   : render_dynamics_text(rep));
    return rep.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
