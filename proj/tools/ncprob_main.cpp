// Command-line front end: runs a named verification suite or a scalar bound
// sweep and writes the report to stdout or a file. Exit codes: 0 every check
// passed, 1 at least one failed, 2 usage or parameter problem.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncprob/errors.hpp"
#include "ncprob/suites.hpp"

namespace {

struct CliOptions {
  ncprob::SuiteConfig config;
  std::string t_grid_text;
  double slack_tol = -1.0;  // negative = keep default
  double gamma = 0.0;
  bool has_gamma = false;
};

void add_common(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--seed", opt.config.seed, "RNG seed")->envname("NCPROB_SEED");
  cmd->add_option("--trials", opt.config.trials, "number of seeded trials");
  cmd->add_option("--dims", opt.config.factor_dims,
                  "factor dimensions d0,d1,...,dn (d0 is the conditioned-on factor)")
      ->delimiter(',');
  cmd->add_option("--r", opt.config.r, "moment order in [1,2]");
  cmd->add_option("--p", opt.config.p, "Schatten exponent");
  auto* g = cmd->add_option("--gamma", opt.gamma, "free parameter of the moment constant");
  cmd->callback([&opt, g]() { opt.has_gamma = g->count() > 0; });
  cmd->add_option("--m-bound", opt.config.m_bound, "uniform norm bound M");
  cmd->add_option("--t-grid", opt.t_grid_text, "tail grid min:max:points[:log|linear]");
  cmd->add_option("--jobs", opt.config.jobs, "worker threads for trials");
  cmd->add_option("--format", opt.config.format, "json or csv");
  cmd->add_option("--out", opt.config.out, "output file (default stdout)");
  cmd->add_option("--slack-tol", opt.slack_tol, "slack tolerance for inequality checks");
}

int emit(const ncprob::SuiteResult& result) {
  if (result.config.out.empty()) {
    ncprob::write_report(result, std::cout);
  } else {
    std::ofstream f(result.config.out);
    if (!f) {
      std::cerr << "error: cannot open " << result.config.out << " for writing\n";
      return 2;
    }
    ncprob::write_report(result, f);
  }
  const auto& s = result.summary;
  std::cerr << result.config.suite << ": " << s.pass_count << "/" << s.total
            << " checks passed, worst slack " << s.worst_slack << "\n";
  return ncprob::exit_code(result);
}

void finalize(CliOptions& opt) {
  if (!opt.t_grid_text.empty()) opt.config.t_grid = ncprob::TGridSpec::parse(opt.t_grid_text);
  if (opt.slack_tol >= 0.0) opt.config.tolerances.slack_tol = opt.slack_tol;
  if (opt.has_gamma) opt.config.gamma = opt.gamma;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional tracial probability: concentration checks"};
  app.require_subcommand(1);

  CliOptions vopt;
  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "one of: axioms, lattice, bennett, bernstein-prohorov, "
                                     "hoeffding, rosenthal, classical, golden-thompson, "
                                     "layercake")
      ->required();
  add_common(verify, vopt);

  CliOptions sopt;
  std::string axis;
  CLI::App* sweep = app.add_subcommand("sweep", "sweep scalar bounds along one axis");
  sweep->add_option("axis", axis, "one of: t, n, gamma, r")->required();
  add_common(sweep, sopt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      finalize(vopt);
      vopt.config.suite = suite;
      return emit(ncprob::run_suite(vopt.config));
    }
    finalize(sopt);
    return emit(ncprob::run_sweep(axis, sopt.config));
  } catch (const ncprob::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
