#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qspecial/inequality.hpp"

namespace qspecial::cli {

enum ExitStatus : int {
  kExitPass = 0,
  kExitViolation = 1,
  kExitDomain = 2,
  kExitConvergence = 3,
};

enum class Subcommand { Eval, Digamma, Sweep, Verify, VerifyClassical };

struct CliConfig {
  Subcommand subcommand = Subcommand::Eval;
  double q = 0.0;
  double x = 0.0;
  double a = 1.0;
  std::vector<double> q_list;
  std::vector<double> a_list;
  std::size_t x_count = 101;
  double epsilon = 1e-13;
  std::size_t max_terms = 10'000'000;
  std::optional<double> tol;
  std::string output;  // empty: standard output
  std::uint64_t seed = 0;
};

/// 3 if the report is incomplete, else 0 on pass and 1 on a violation.
int exit_status_for(const InequalityReport& report);

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out` (or --output), diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qspecial::cli
