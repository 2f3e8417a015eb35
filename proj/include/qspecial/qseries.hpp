#pragma once

#include <cstddef>
#include <limits>

namespace qspecial {

enum class Branch { LessThanOne, GreaterThanOne };

/// The base q of a q-analogue. Construction rejects q <= 0, q == 1 and
/// non-finite values, so every live QParameter names exactly one branch.
class QParameter {
 public:
  explicit QParameter(double q);

  double value() const noexcept { return q_; }
  Branch branch() const noexcept { return branch_; }
  bool below_one() const noexcept { return branch_ == Branch::LessThanOne; }

  /// 1/q, used by the q > 1 branch whose products run in base 1/q.
  QParameter reciprocal() const { return QParameter(1.0 / q_); }

 private:
  double q_;
  Branch branch_;
};

/// Stopping rule shared by every infinite product and series.
struct TruncationPolicy {
  double epsilon = 1e-13;
  std::size_t max_terms = 10'000'000;

  /// Throws DomainError unless 0 < epsilon < 1 and max_terms >= 1.
  void validate() const;
};

/// Largest product/series base accepted. Closer to 1 the term count grows
/// like log(epsilon)/log(q) and the library refuses rather than degrade.
inline constexpr double kMaxSupportedBase = 0.9999;

struct EvalResult {
  double value = 0.0;
  /// log|value|; -inf when value == 0.
  double log_value = -std::numeric_limits<double>::infinity();
  /// A posteriori bound on the absolute error of log_value.
  double error_bound = 0.0;
  std::size_t terms_used = 0;
  /// Sign of value: -1, 0 or +1.
  int sign = 0;

  bool has_log() const noexcept { return sign != 0; }
};

/// (a; q)_inf = prod_{n>=0} (1 - a q^n), summed as logs.
///
/// `base` must be on the LessThanOne branch; callers on the q > 1 branch pass
/// base.reciprocal(). Factors that are exactly zero give value 0 with the log
/// flagged undefined (sign == 0). Negative factors (a q^n > 1) are tracked in
/// `sign`. The truncation point is the first N with
///   |a| q^N / ((1 - q)(1 - |a| q^N)) < epsilon,
/// which bounds the neglected part of the log-sum.
EvalResult qpochhammer_inf(double a, const QParameter& base,
                           const TruncationPolicy& policy = {});

/// (q^s; q)_inf, with each factor 1 - q^{s+n} formed via expm1 so that
/// s near a nonpositive integer does not cancel.
EvalResult qpochhammer_power_inf(double s, const QParameter& base,
                                 const TruncationPolicy& policy = {});

/// sum_{n>=0} q^{s+n} / (1 - q^{s+n}) for s > 0, 0 < q < 1.
/// Truncated at the first N with q^{s+N} / ((1-q)(1-q^{s+N})) < epsilon.
EvalResult geometric_tail_sum(double x_shift, const QParameter& base,
                              const TruncationPolicy& policy = {});

}  // namespace qspecial
