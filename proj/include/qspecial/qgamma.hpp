#pragma once

#include "qspecial/qseries.hpp"

namespace qspecial {

/// Distance from {0, -1, -2, ...} below which an argument counts as a pole.
inline constexpr double kPoleTolerance = 1e-12;

/// Jackson's q-gamma for 0 < q < 1:
///   Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^{1-x}.
/// log_value carries log|Gamma_q(x)|; for negative non-pole x the sign of
/// the result is in EvalResult::sign. Throws PoleError for x in {0,-1,...}.
EvalResult qgamma_lt1(double x, const QParameter& q, const TruncationPolicy& policy = {});

/// Jackson's q-gamma for q > 1:
///   Gamma_q(x) = (q^-1;q^-1)_inf / (q^-x;q^-1)_inf * (q-1)^{1-x} * q^{x(x-1)/2}.
EvalResult qgamma_gt1(double x, const QParameter& q, const TruncationPolicy& policy = {});

/// Dispatches on the branch of q.
EvalResult qgamma(double x, const QParameter& q, const TruncationPolicy& policy = {});

/// d/dy log Gamma_q(y) = -log(1-q) + log(q) * sum_{n>=0} q^{y+n}/(1-q^{y+n}),
/// for y > 0 and 0 < q < 1.
double qdigamma(double y, const QParameter& q, const TruncationPolicy& policy = {});

/// log Gamma_q(x) for a fixed 0 < q < 1, with log (q;q)_inf evaluated once.
/// Used by grid sweeps that evaluate many arguments at the same q.
class LogQGamma {
 public:
  LogQGamma(const QParameter& q, const TruncationPolicy& policy = {});

  /// Requires Gamma_q(x) > 0 (true for all x > 0).
  double operator()(double x) const;
  EvalResult evaluate(double x) const;

  const QParameter& q() const noexcept { return q_; }
  const TruncationPolicy& policy() const noexcept { return policy_; }

 private:
  QParameter q_;
  TruncationPolicy policy_;
  EvalResult log_qq_;
  double log_one_minus_q_;
};

}  // namespace qspecial
