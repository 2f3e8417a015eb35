#include "qspecial/inequality.hpp"

#include <cmath>
#include <string>

#include "parallel.hpp"
#include "qspecial/classical.hpp"
#include "qspecial/errors.hpp"

namespace qspecial {

namespace {

void check_ratio_args(double x, double a, const char* op) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(op) + ": x must be finite and >= 0");
  }
  if (!std::isfinite(a) || a < 1.0) {
    throw DomainError(std::string(op) + ": a must be finite and >= 1");
  }
}

// Builds a row from log f and log lower; margins are formed from the log
// difference so that tiny f (large a) keeps its relative accuracy.
InequalityPoint make_point(double q, double a, double x, double log_f, double log_lower) {
  InequalityPoint p;
  p.q = q;
  p.a = a;
  p.x = x;
  p.f = std::exp(log_f);
  p.lower = std::exp(log_lower);
  p.upper = 1.0;
  p.lower_margin = p.lower * std::expm1(log_f - log_lower);
  p.upper_margin = 0.0 - std::expm1(log_f);
  return p;
}

void fold_point(InequalityReport& report, const InequalityPoint& p) {
  const std::size_t idx = report.points.size();
  report.points.push_back(p);
  if (p.lower_margin < report.min_lower_margin) {
    report.min_lower_margin = p.lower_margin;
    report.argmin_lower = idx;
  }
  if (p.upper_margin < report.min_upper_margin) {
    report.min_upper_margin = p.upper_margin;
    report.argmin_upper = idx;
  }
}

bool is_small_integer(double a) { return a == std::floor(a) && a <= 170.0; }

double factorial(double n) {
  double r = 1.0;
  for (int k = 2; k <= static_cast<int>(n); ++k) r *= k;
  return r;
}

InequalityReport theorem_block(double q_value, double a, const std::vector<double>& xs,
                               const TruncationPolicy& policy, double tol) {
  InequalityReport block;
  block.tol = tol;
  try {
    const LogQGamma log_gamma(QParameter(q_value), policy);
    const double log_lower = -log_gamma(1.0 + a);
    for (double x : xs) {
      const double log_f = a * log_gamma(1.0 + x) - log_gamma(1.0 + a * x);
      fold_point(block, make_point(q_value, a, x, log_f, log_lower));
    }
    const InequalityPoint& last = block.points.back();
    block.lower_attained_at_one = std::abs(last.f - last.lower) <= tol;
  } catch (const ConvergenceError& e) {
    block.complete = false;
    block.failure = e.what();
  }
  return block;
}

MonotonicityResult scan_row(double q, double a, const std::vector<double>& xs,
                            const std::vector<double>& fs, double tol) {
  MonotonicityResult result;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (fs[i] > fs[i - 1] + tol) {
      result.pass = false;
      result.first_violation = MonotonicityViolation{q, a, xs[i - 1], xs[i], fs[i - 1], fs[i]};
      break;
    }
  }
  return result;
}

}  // namespace

std::vector<double> unit_grid(std::size_t n) {
  if (n < 2) {
    throw DomainError("x grid needs at least 2 points");
  }
  std::vector<double> xs(n);
  const double step_den = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = static_cast<double>(i) / step_den;
  }
  xs.front() = 0.0;
  xs.back() = 1.0;
  return xs;
}

void GridSpec::validate() const {
  if (q_values.empty() || a_values.empty()) {
    throw DomainError("grid needs at least one q and one a");
  }
  for (double q : q_values) {
    if (!(q > 0.0 && q < 1.0)) {
      throw DomainError("grid q values must lie in (0, 1), got " + std::to_string(q));
    }
  }
  for (double a : a_values) {
    if (!(std::isfinite(a) && a >= 1.0)) {
      throw DomainError("grid a values must be >= 1, got " + std::to_string(a));
    }
  }
  if (x_count < 2) {
    throw DomainError("x_count must be at least 2");
  }
}

std::vector<double> GridSpec::x_grid() const { return unit_grid(x_count); }

void InequalityReport::merge(const InequalityReport& other) {
  const std::size_t offset = points.size();
  points.insert(points.end(), other.points.begin(), other.points.end());
  if (other.min_lower_margin < min_lower_margin) {
    min_lower_margin = other.min_lower_margin;
    argmin_lower = offset + *other.argmin_lower;
  }
  if (other.min_upper_margin < min_upper_margin) {
    min_upper_margin = other.min_upper_margin;
    argmin_upper = offset + *other.argmin_upper;
  }
  lower_attained_at_one = lower_attained_at_one && other.lower_attained_at_one;
  if (other.min_factorial_margin) {
    min_factorial_margin = min_factorial_margin
                               ? std::min(*min_factorial_margin, *other.min_factorial_margin)
                               : *other.min_factorial_margin;
  }
  if (complete && !other.complete) {
    complete = false;
    failure = other.failure;
  }
  finalize();
}

void InequalityReport::finalize() {
  pass = complete && min_lower_margin >= -tol && min_upper_margin >= -tol &&
         (!min_factorial_margin || *min_factorial_margin >= -tol);
}

double log_ratio_g(double x, double a, const QParameter& q, const TruncationPolicy& policy) {
  check_ratio_args(x, a, "log_ratio_g");
  const LogQGamma log_gamma(q, policy);
  return a * log_gamma(1.0 + x) - log_gamma(1.0 + a * x);
}

double ratio_f(double x, double a, const QParameter& q, const TruncationPolicy& policy) {
  return std::exp(log_ratio_g(x, a, q, policy));
}

double g_prime(double x, double a, const QParameter& q, const TruncationPolicy& policy) {
  check_ratio_args(x, a, "g_prime");
  return a * qdigamma(1.0 + x, q, policy) - a * qdigamma(1.0 + a * x, q, policy);
}

double termwise_gap(std::size_t n, double x, double a, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("termwise_gap: q must lie in (0, 1)");
  }
  check_ratio_args(x, a, "termwise_gap");
  const double log_q = std::log(q);
  const double nd = static_cast<double>(n);
  const double small_exp = 1.0 + x + nd;     // exponent of the q^{1+x+n} term
  const double gap_exp = (a - 1.0) * x;      // (1+ax+n) - (1+x+n) >= 0
  const double large_exp = small_exp + gap_exp;
  // q^{1+ax+n} - q^{1+x+n} = q^{1+x+n} * (q^{(a-1)x} - 1)
  const double numerator = std::exp(small_exp * log_q) * std::expm1(gap_exp * log_q);
  const double denominator = std::expm1(large_exp * log_q) * std::expm1(small_exp * log_q);
  return numerator / denominator;
}

InequalityReport verify_theorem21(const GridSpec& grid, const TruncationPolicy& policy,
                                  double tol, std::uint64_t seed) {
  grid.validate();
  policy.validate();
  const std::vector<double> xs = grid.x_grid();
  const std::size_t na = grid.a_values.size();
  std::vector<InequalityReport> blocks(grid.q_values.size() * na);
  detail::parallel_for(blocks.size(), [&](std::size_t i) {
    blocks[i] = theorem_block(grid.q_values[i / na], grid.a_values[i % na], xs, policy, tol);
  });

  InequalityReport report;
  report.tol = tol;
  report.seed = seed;
  for (const InequalityReport& block : blocks) {
    report.merge(block);
    if (!block.complete) break;
  }
  report.finalize();
  return report;
}

InequalityReport verify_classical(const std::vector<double>& a_values, std::size_t x_count,
                                  double tol, std::uint64_t seed) {
  if (a_values.empty()) {
    throw DomainError("verify_classical: need at least one a");
  }
  for (double a : a_values) {
    if (!(std::isfinite(a) && a >= 1.0 && a <= 49.0)) {
      throw DomainError("verify_classical: a must lie in [1, 49], got " + std::to_string(a));
    }
  }
  const std::vector<double> xs = unit_grid(x_count);

  InequalityReport report;
  report.tol = tol;
  report.seed = seed;
  for (double a : a_values) {
    InequalityReport block;
    block.tol = tol;
    const double log_lower = -euler_log_gamma(1.0 + a);
    const bool integral = is_small_integer(a);
    const double inv_factorial = integral ? 1.0 / factorial(a) : 0.0;
    for (double x : xs) {
      const double log_f = a * euler_log_gamma(1.0 + x) - euler_log_gamma(1.0 + a * x);
      const InequalityPoint p = make_point(1.0, a, x, log_f, log_lower);
      fold_point(block, p);
      if (integral) {
        const double m = p.f - inv_factorial;
        block.min_factorial_margin =
            block.min_factorial_margin ? std::min(*block.min_factorial_margin, m) : m;
      }
    }
    const InequalityPoint& last = block.points.back();
    block.lower_attained_at_one = std::abs(last.f - last.lower) <= tol;
    report.merge(block);
  }
  report.finalize();
  return report;
}

MonotonicityResult check_nonincreasing(const GridSpec& grid, const RatioEvaluator& f,
                                       double tol) {
  grid.validate();
  const std::vector<double> xs = grid.x_grid();
  std::vector<double> row(xs.size());
  for (double q : grid.q_values) {
    for (double a : grid.a_values) {
      for (std::size_t i = 0; i < xs.size(); ++i) row[i] = f(q, a, xs[i]);
      if (auto result = scan_row(q, a, xs, row, tol); !result.pass) return result;
    }
  }
  return {};
}

MonotonicityResult verify_monotonicity(const GridSpec& grid, const TruncationPolicy& policy,
                                       double tol) {
  policy.validate();
  grid.validate();
  const std::vector<double> xs = grid.x_grid();
  const std::size_t na = grid.a_values.size();

  // Rows are filled concurrently, then scanned in grid order so the reported
  // violation is the first one regardless of scheduling.
  std::vector<std::vector<double>> rows(grid.q_values.size() * na);
  detail::parallel_for(rows.size(), [&](std::size_t i) {
    const double a = grid.a_values[i % na];
    const LogQGamma log_gamma(QParameter(grid.q_values[i / na]), policy);
    rows[i].reserve(xs.size());
    for (double x : xs) {
      rows[i].push_back(std::exp(a * log_gamma(1.0 + x) - log_gamma(1.0 + a * x)));
    }
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto result = scan_row(grid.q_values[i / na], grid.a_values[i % na], xs, rows[i], tol);
    if (!result.pass) return result;
  }
  return {};
}

}  // namespace qspecial
