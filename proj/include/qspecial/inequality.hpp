#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qspecial/qgamma.hpp"

namespace qspecial {

inline constexpr double kDefaultMarginTol = 1e-10;
inline constexpr double kDefaultMonotoneTol = 1e-12;
inline constexpr std::uint64_t kDefaultSeed = 20050101;

/// Rectangular (q, a, x) grid; x is uniform on [0, 1] with both endpoints exact.
struct GridSpec {
  std::vector<double> q_values;
  std::vector<double> a_values;
  std::size_t x_count = 101;

  /// Throws DomainError unless every q is in (0,1), every a >= 1, x_count >= 2.
  void validate() const;
  std::vector<double> x_grid() const;
};

/// Uniform grid on [0, 1] with n points; first is 0.0 and last is 1.0 exactly.
std::vector<double> unit_grid(std::size_t n);

struct InequalityPoint {
  double q = 0.0;  // 1 for classical rows
  double a = 0.0;
  double x = 0.0;
  double f = 0.0;
  double lower = 0.0;
  double upper = 1.0;
  double lower_margin = 0.0;  // f - lower
  double upper_margin = 0.0;  // upper - f
};

struct InequalityReport {
  std::vector<InequalityPoint> points;
  double tol = kDefaultMarginTol;
  std::uint64_t seed = kDefaultSeed;

  double min_lower_margin = std::numeric_limits<double>::infinity();
  double min_upper_margin = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> argmin_lower;  // index into points
  std::optional<std::size_t> argmin_upper;

  /// Every (q, a) block has |f(1) - lower| <= tol.
  bool lower_attained_at_one = true;

  /// Classical integer-a rows only: min over f - 1/n! with n! by integer product.
  std::optional<double> min_factorial_margin;

  bool complete = true;
  std::string failure;  // set when complete == false

  bool pass = true;

  /// Appends `other` (rows after ours) and folds its aggregates.
  void merge(const InequalityReport& other);
  /// Recomputes pass from the aggregates.
  void finalize();
};

/// f(x) = Gamma_q(1+x)^a / Gamma_q(1+ax), evaluated as exp(g(x)).
double ratio_f(double x, double a, const QParameter& q, const TruncationPolicy& policy = {});

/// g(x) = a log Gamma_q(1+x) - log Gamma_q(1+ax).
double log_ratio_g(double x, double a, const QParameter& q, const TruncationPolicy& policy = {});

/// g'(x) = a psi_q(1+x) - a psi_q(1+ax).
double g_prime(double x, double a, const QParameter& q, const TruncationPolicy& policy = {});

/// q^{1+ax+n}/(1-q^{1+ax+n}) - q^{1+x+n}/(1-q^{1+x+n}), formed as
/// (q^{1+ax+n} - q^{1+x+n}) / ((1-q^{1+ax+n})(1-q^{1+x+n})) with the
/// numerator taken through expm1 of a nonnegative exponent gap, so the
/// floating-point result is never positive.
double termwise_gap(std::size_t n, double x, double a, double q);

/// Certifies 1/Gamma_q(1+a) <= f(x) <= 1 on the grid. (q, a) blocks run
/// concurrently; rows come back in grid order. A ConvergenceError stops the
/// sweep and returns the rows computed so far with complete == false.
InequalityReport verify_theorem21(const GridSpec& grid, const TruncationPolicy& policy = {},
                                  double tol = kDefaultMarginTol,
                                  std::uint64_t seed = kDefaultSeed);

/// Same check with Euler's Gamma. Integer a additionally checked against 1/a!.
/// Requires 1 + a <= 50 for every a.
InequalityReport verify_classical(const std::vector<double>& a_values, std::size_t x_count,
                                  double tol = kDefaultMarginTol,
                                  std::uint64_t seed = kDefaultSeed);

struct MonotonicityViolation {
  double q = 0.0;
  double a = 0.0;
  double x_prev = 0.0;
  double x = 0.0;
  double f_prev = 0.0;
  double f = 0.0;
};

struct MonotonicityResult {
  bool pass = true;
  std::optional<MonotonicityViolation> first_violation;
};

using RatioEvaluator = std::function<double(double q, double a, double x)>;

/// Checks f(x_{i+1}) <= f(x_i) + tol along every x row of the grid.
MonotonicityResult check_nonincreasing(const GridSpec& grid, const RatioEvaluator& f,
                                       double tol = kDefaultMonotoneTol);

MonotonicityResult verify_monotonicity(const GridSpec& grid, const TruncationPolicy& policy = {},
                                       double tol = kDefaultMonotoneTol);

/// Seeded uniform draws that are identical across standard libraries
/// (std::uniform_real_distribution is not).
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qspecial
