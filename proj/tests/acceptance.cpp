// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "qspecial/classical.hpp"
#include "qspecial/cli.hpp"
#include "qspecial/inequality.hpp"
#include "qspecial/qgamma.hpp"
#include "qspecial/report_csv.hpp"

using namespace qspecial;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::vector<double> theorem_q_values() {
  std::vector<double> qs;
  for (int k = 1; k <= 19; ++k) qs.push_back(0.05 * k);
  return qs;
}

const std::vector<double> kTheoremA{1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 20.0};

Outcome normalization() {
  double worst = 0.0;
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9, 2.0, 5.0, 10.0}) {
    for (double x : {1.0, 2.0}) {
      worst = std::max(worst, std::abs(qgamma(x, QParameter(q)).value - 1.0));
    }
  }
  return {worst <= 1e-13, fmt("max |Gamma_q(1 or 2) - 1| = %.3g (limit 1e-13)", worst)};
}

Outcome theorem_certification() {
  const InequalityReport r = verify_theorem21(GridSpec{theorem_q_values(), kTheoremA, 101});
  bool attained = true;
  double worst_attain = 0.0;
  for (const InequalityPoint& p : r.points) {
    if (p.x == 1.0) {
      const double d = std::abs(p.f - p.lower);
      worst_attain = std::max(worst_attain, d);
      attained = attained && d <= 1e-10;
    }
  }
  const bool ok = r.complete && r.pass && r.min_lower_margin >= -1e-10 &&
                  r.min_upper_margin >= -1e-10 && attained && r.lower_attained_at_one &&
                  r.points.size() == 19 * 7 * 101;
  return {ok, fmt("%zu points, min lower margin %.3g, min upper margin %.3g, "
                  "max |f(1) - lower| %.3g",
                  r.points.size(), r.min_lower_margin, r.min_upper_margin, worst_attain)};
}

Outcome monotonicity() {
  const MonotonicityResult mono =
      verify_monotonicity(GridSpec{theorem_q_values(), kTheoremA, 101}, {}, 1e-12);
  UniformSampler rng(kDefaultSeed);
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 500; ++i) {
    const double q = rng.uniform(0.01, 0.99);
    const double a = rng.uniform(1.0, 20.0);
    const double x = rng.uniform(0.0, 5.0);
    worst = std::max(worst, g_prime(x, a, QParameter(q)));
  }
  return {mono.pass && worst <= 1e-9,
          fmt("f nonincreasing on all rows: %s; max g' over 500 triples (seed %llu) = %.3g",
              mono.pass ? "yes" : "no", static_cast<unsigned long long>(kDefaultSeed), worst)};
}

Outcome termwise_step() {
  UniformSampler rng(kDefaultSeed + 1);
  const double eps = std::numeric_limits<double>::epsilon();
  double worst_ulps = 0.0;  // how far above zero, in ulps of the larger term
  double largest_gap = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng.index(51);
    const double x = rng.uniform(0.0, 5.0);
    const double a = rng.uniform(1.0, 20.0);
    const double q = rng.uniform(0.01, 0.99);
    const double gap = termwise_gap(n, x, a, q);
    // ulp of the larger of the two terms being subtracted
    const double t = std::pow(q, 1.0 + x + static_cast<double>(n));
    const double scale = t / (1.0 - t);
    largest_gap = std::max(largest_gap, gap);
    worst_ulps = std::max(worst_ulps, gap / (eps * std::max(scale, 1e-300)));
  }
  const double exact = termwise_gap(0, 1.0, 2.0, 0.5);
  const double exact_err = std::abs(exact - (-4.0 / 21.0));
  return {worst_ulps <= 4.0 && exact_err <= 1e-15,
          fmt("largest gap over 1000 draws %.3g (%.3g ulps above 0); "
              "|gap(0,1,2,0.5) + 4/21| = %.3g",
              largest_gap, worst_ulps, exact_err)};
}

Outcome recurrence() {
  double worst = 0.0;
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int k = 1; k <= 20; ++k) {
      const double x = 0.25 * k;
      const double ratio =
          qgamma_lt1(x + 1.0, QParameter(q)).value / qgamma_lt1(x, QParameter(q)).value;
      const double expect = (1.0 - std::pow(q, x)) / (1.0 - q);
      worst = std::max(worst, std::abs(ratio / expect - 1.0));
    }
  }
  for (double q : {2.0, 5.0, 10.0}) {
    for (int k = 1; k <= 20; ++k) {
      const double x = 0.25 * k;
      const double ratio =
          qgamma_gt1(x + 1.0, QParameter(q)).value / qgamma_gt1(x, QParameter(q)).value;
      const double expect = (std::pow(q, x) - 1.0) / (q - 1.0);
      worst = std::max(worst, std::abs(ratio / expect - 1.0));
    }
  }
  // Extended-precision direct products at a subset of the grid.
  double worst_oracle = 0.0;
  for (double q : {0.1, 0.5, 0.9, 2.0, 10.0}) {
    for (double x : {0.25, 1.75, 3.0, 4.5}) {
      const double lib = qgamma(x, QParameter(q)).value;
      worst_oracle = std::max(worst_oracle, std::abs(lib / oracle::qgamma(x, q) - 1.0));
    }
  }
  return {worst <= 1e-11 && worst_oracle <= 1e-11,
          fmt("max relative recurrence error %.3g; max relative error vs 50-digit products %.3g",
              worst, worst_oracle)};
}

Outcome classical_limit() {
  bool decreasing = true;
  std::string trail;
  for (double x : {0.5, 1.5, 2.5, 5.0}) {
    double previous = std::numeric_limits<double>::infinity();
    for (double q : {0.9, 0.99, 0.999}) {
      const double err = std::abs(qgamma_lt1(x, QParameter(q)).value - euler_gamma(x));
      decreasing = decreasing && err < previous;
      previous = err;
    }
    trail += fmt(" x=%.1f:%.2g", x, previous);
  }
  const InequalityReport r = verify_classical({1, 2, 3, 4, 5, 6}, 101);
  const bool bounds = r.pass && r.min_lower_margin >= -1e-10 && r.min_upper_margin >= -1e-10 &&
                      r.min_factorial_margin && *r.min_factorial_margin >= -1e-10;
  return {decreasing && bounds,
          fmt("strictly decreasing: %s (error at q=0.999%s); n=1..6 min margins "
              "lower %.3g upper %.3g factorial %.3g",
              decreasing ? "yes" : "no", trail.c_str(), r.min_lower_margin, r.min_upper_margin,
              r.min_factorial_margin.value_or(std::nan("")))};
}

Outcome digamma_formulas() {
  const double g = EulerConstants::gamma_euler;
  const double err1 = std::abs(euler_digamma_series(1.0) + g);
  const double err2 = std::abs(euler_digamma_series(2.0) - (1.0 - g));
  double worst_fd = 0.0;
  for (double q : {0.2, 0.5, 0.8}) {
    const QParameter base(q);
    const LogQGamma lg(base);
    for (double y = 0.5; y <= 10.0 + 1e-12; y += 0.25) {
      const double h = 1e-6;
      const double fd = (lg(y + h) - lg(y - h)) / (2.0 * h);
      worst_fd = std::max(worst_fd, std::abs(qdigamma(y, base) - fd));
    }
  }
  return {err1 <= 1e-7 && err2 <= 1e-7 && worst_fd <= 1e-6,
          fmt("|psi(1)+gamma| %.3g, |psi(2)-(1-gamma)| %.10g, max |psi_q - FD| %.3g", err1, err2,
              worst_fd)};
}

Outcome cli_contract() {
  auto run = [](std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return status;
  };
  const int s1 = run({"verify", "--q-list", "0.5", "--a-list", "2", "--x-count", "11", "--tol",
                      "1e-10"});
  std::string unit_rows;
  const int s2 = run({"verify", "--q-list", "0.5", "--a-list", "1", "--x-count", "5"}, &unit_rows);
  const int s3 = run({"verify", "--q-list", "0.99999", "--a-list", "2", "--x-count", "11"});

  std::istringstream unit_in(unit_rows);
  const ParsedReport unit = parse_report_csv(unit_in);
  bool all_one = unit.rows.size() == 5;
  for (const InequalityPoint& p : unit.rows) all_one = all_one && p.f == 1.0;

  std::string text;
  run({"verify", "--q-list", "0.05,0.35,0.65,0.95", "--a-list", "1,1.5,2,3,5,10,20", "--x-count",
       "101"},
      &text);
  std::istringstream in(text);
  const ParsedReport parsed = parse_report_csv(in);
  double min_lower = std::numeric_limits<double>::infinity();
  double min_upper = std::numeric_limits<double>::infinity();
  for (const InequalityPoint& p : parsed.rows) {
    min_lower = std::min(min_lower, p.lower_margin);
    min_upper = std::min(min_upper, p.upper_margin);
  }
  const bool round_trip = parsed.footer && parsed.footer->min_lower_margin == min_lower &&
                          parsed.footer->min_upper_margin == min_upper;
  const bool ok = s1 == cli::kExitPass && s2 == cli::kExitPass && all_one &&
                  s3 == cli::kExitConvergence && round_trip;
  return {ok, fmt("exit statuses %d/%d/%d (want 0/0/3), a=1 rows all f=1: %s, "
                  "footer reproduced from %zu rows: %s",
                  s1, s2, s3, all_one ? "yes" : "no", parsed.rows.size(),
                  round_trip ? "yes" : "no")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const Criterion criteria[] = {
      {"AC1 normalization", normalization},
      {"AC2 inequality certification", theorem_certification},
      {"AC3 monotonicity", monotonicity},
      {"AC4 termwise step", termwise_step},
      {"AC5 recurrence oracle", recurrence},
      {"AC6 classical limit", classical_limit},
      {"AC7 digamma formulas", digamma_formulas},
      {"AC8 CLI contract", cli_contract},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
