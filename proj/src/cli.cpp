#include "qspecial/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "qspecial/errors.hpp"
#include "qspecial/inequality.hpp"
#include "qspecial/qgamma.hpp"
#include "qspecial/report_csv.hpp"

namespace qspecial::cli {

namespace {

// A flag value that fails its domain check before any computation starts.
struct FlagError {
  std::string message;
};

void require(bool ok, const std::string& flag, const std::string& what) {
  if (!ok) throw FlagError{flag + ": " + what};
}

TruncationPolicy policy_of(const CliConfig& cfg) {
  require(cfg.epsilon > 0.0 && cfg.epsilon < 1.0, "--epsilon", "must lie in (0, 1)");
  require(cfg.max_terms >= 1, "--max-terms", "must be at least 1");
  return TruncationPolicy{cfg.epsilon, cfg.max_terms};
}

double tol_of(const CliConfig& cfg, double fallback) {
  const double tol = cfg.tol.value_or(fallback);
  require(std::isfinite(tol) && tol >= 0.0, "--tol", "must be a nonnegative number");
  return tol;
}

void require_q_below_one(double q, const std::string& flag) {
  require(q > 0.0 && q < 1.0, flag, "q must lie in (0, 1), got " + format_real(q));
}

void require_a_list(const std::vector<double>& as, double max_a) {
  require(!as.empty(), "--a-list", "needs at least one value");
  for (double a : as) {
    require(std::isfinite(a) && a >= 1.0 && a <= max_a, "--a-list",
            "values must lie in [1, " + format_real(max_a) + "], got " + format_real(a));
  }
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const TruncationPolicy policy = policy_of(cfg);
  require(std::isfinite(cfg.q) && cfg.q > 0.0, "--q", "must be positive and finite");
  require(cfg.q != 1.0, "--q", "q = 1 is not a valid base");
  require(std::isfinite(cfg.x), "--x", "must be finite");
  const EvalResult r = qgamma(cfg.x, QParameter(cfg.q), policy);
  out << format_real(cfg.x) << ',' << format_real(cfg.q) << ',' << format_real(r.value) << ','
      << format_real(r.log_value) << ',' << format_real(r.error_bound) << ',' << r.terms_used
      << '\n';
  return kExitPass;
}

int cmd_digamma(const CliConfig& cfg, std::ostream& out) {
  const TruncationPolicy policy = policy_of(cfg);
  require_q_below_one(cfg.q, "--q");
  require(std::isfinite(cfg.x) && cfg.x > 0.0, "--x", "must be positive");
  const double value = qdigamma(cfg.x, QParameter(cfg.q), policy);
  out << format_real(cfg.x) << ',' << format_real(cfg.q) << ',' << format_real(value) << '\n';
  return kExitPass;
}

int cmd_sweep(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const TruncationPolicy policy = policy_of(cfg);
  require_q_below_one(cfg.q, "--q");
  require(std::isfinite(cfg.a) && cfg.a >= 1.0, "--a", "must be >= 1");
  require(cfg.x_count >= 2, "--x-count", "must be at least 2");
  const double tol = tol_of(cfg, kDefaultMonotoneTol);

  const QParameter q(cfg.q);
  const LogQGamma log_gamma(q, policy);
  out << "x,f,g,g_prime\n";
  bool monotone = true;
  double f_prev = 0.0;
  for (double x : unit_grid(cfg.x_count)) {
    const double g = cfg.a * log_gamma(1.0 + x) - log_gamma(1.0 + cfg.a * x);
    const double f = std::exp(g);
    const double slope = g_prime(x, cfg.a, q, policy);
    out << format_real(x) << ',' << format_real(f) << ',' << format_real(g) << ','
        << format_real(slope) << '\n';
    if (x > 0.0 && f > f_prev + tol && monotone) {
      monotone = false;
      err << "violation: f increases at x = " << format_real(x) << '\n';
    }
    f_prev = f;
  }
  return monotone ? kExitPass : kExitViolation;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const TruncationPolicy policy = policy_of(cfg);
  require(!cfg.q_list.empty(), "--q-list", "needs at least one value");
  for (double q : cfg.q_list) require_q_below_one(q, "--q-list");
  require_a_list(cfg.a_list, std::numeric_limits<double>::max());
  require(cfg.x_count >= 2, "--x-count", "must be at least 2");
  const double tol = tol_of(cfg, kDefaultMarginTol);

  const GridSpec grid{cfg.q_list, cfg.a_list, cfg.x_count};
  const InequalityReport report = verify_theorem21(grid, policy, tol, cfg.seed);
  write_report_csv(out, report);
  return exit_status_for(report);
}

int cmd_verify_classical(const CliConfig& cfg, std::ostream& out) {
  require_a_list(cfg.a_list, 49.0);
  require(cfg.x_count >= 2, "--x-count", "must be at least 2");
  const double tol = tol_of(cfg, kDefaultMarginTol);
  const InequalityReport report = verify_classical(cfg.a_list, cfg.x_count, tol, cfg.seed);
  write_report_csv(out, report);
  return exit_status_for(report);
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.subcommand) {
    case Subcommand::Eval:
      return cmd_eval(cfg, out);
    case Subcommand::Digamma:
      return cmd_digamma(cfg, out);
    case Subcommand::Sweep:
      return cmd_sweep(cfg, out, err);
    case Subcommand::Verify:
      return cmd_verify(cfg, out);
    case Subcommand::VerifyClassical:
      return cmd_verify_classical(cfg, out);
  }
  return kExitDomain;
}

}  // namespace

int exit_status_for(const InequalityReport& report) {
  if (!report.complete) return kExitConvergence;
  return report.pass ? kExitPass : kExitViolation;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  cfg.seed = kDefaultSeed;

  CLI::App app{"Jackson q-gamma evaluation and inequality verification", "qgamma"};
  app.require_subcommand(1);

  auto add_policy = [&](CLI::App* sub) {
    sub->add_option("--epsilon", cfg.epsilon, "Truncation tolerance")->capture_default_str();
    sub->add_option("--max-terms", cfg.max_terms, "Term cap per series")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "Write results to this file");
  };

  CLI::App* eval = app.add_subcommand("eval", "Gamma_q(x); branch chosen by q < 1 or q > 1");
  eval->add_option("--q", cfg.q, "Base q (q != 1)")->required();
  eval->add_option("--x", cfg.x, "Argument")->required();
  add_policy(eval);
  add_output(eval);

  CLI::App* digamma = app.add_subcommand("digamma", "q-digamma d/dx log Gamma_q(x), 0 < q < 1");
  digamma->add_option("--q", cfg.q, "Base q")->required();
  digamma->add_option("--x", cfg.x, "Argument, > 0")->required();
  add_policy(digamma);
  add_output(digamma);

  CLI::App* sweep = app.add_subcommand("sweep", "x, f, g, g' on a uniform [0,1] grid");
  sweep->add_option("--q", cfg.q, "Base q")->required();
  sweep->add_option("--a", cfg.a, "Exponent a >= 1")->required();
  sweep->add_option("--x-count", cfg.x_count, "Grid points")->capture_default_str();
  sweep->add_option("--tol", cfg.tol, "Monotonicity tolerance (default 1e-12)");
  add_policy(sweep);
  add_output(sweep);

  CLI::App* verify = app.add_subcommand("verify", "Certify 1/Gamma_q(1+a) <= f <= 1 on a grid");
  verify->add_option("--q-list", cfg.q_list, "Comma-separated q values")
      ->required()
      ->delimiter(',');
  verify->add_option("--a-list", cfg.a_list, "Comma-separated a values")
      ->required()
      ->delimiter(',');
  verify->add_option("--x-count", cfg.x_count, "Grid points on [0,1]")->capture_default_str();
  verify->add_option("--tol", cfg.tol, "Margin tolerance (default 1e-10)");
  verify->add_option("--seed", cfg.seed, "Seed recorded in the report")->capture_default_str();
  add_policy(verify);
  add_output(verify);

  CLI::App* classical =
      app.add_subcommand("verify-classical", "Same check with Euler's Gamma");
  classical->add_option("--a-list", cfg.a_list, "Comma-separated a values")
      ->required()
      ->delimiter(',');
  classical->add_option("--x-count", cfg.x_count, "Grid points on [0,1]")->capture_default_str();
  classical->add_option("--tol", cfg.tol, "Margin tolerance (default 1e-10)");
  classical->add_option("--seed", cfg.seed, "Seed recorded in the report")->capture_default_str();
  add_output(classical);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  if (eval->parsed()) cfg.subcommand = Subcommand::Eval;
  if (digamma->parsed()) cfg.subcommand = Subcommand::Digamma;
  if (sweep->parsed()) cfg.subcommand = Subcommand::Sweep;
  if (verify->parsed()) cfg.subcommand = Subcommand::Verify;
  if (classical->parsed()) cfg.subcommand = Subcommand::VerifyClassical;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "error: --output: cannot open " << cfg.output << '\n';
      return kExitDomain;
    }
    sink = &file;
  }

  try {
    return dispatch(cfg, *sink, err);
  } catch (const FlagError& e) {
    err << "error: " << e.message << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  }
}

}  // namespace qspecial::cli
