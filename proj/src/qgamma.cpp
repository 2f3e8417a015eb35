#include "qspecial/qgamma.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qspecial/errors.hpp"

namespace qspecial {

namespace {

void check_argument(double x, const char* op) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(op) + ": x must be finite");
  }
  const double nearest = std::round(x);
  if (nearest <= 0.0 && std::abs(x - nearest) <= kPoleTolerance) {
    throw PoleError(std::string(op) + ": pole at x = " +
                    std::to_string(static_cast<long long>(nearest)));
  }
}

// Gamma_q(x) = (p;p)_inf / (p^x;p)_inf * exp(extra_log), p the product base.
EvalResult assemble(const EvalResult& numerator, const EvalResult& denominator,
                    double extra_log) {
  EvalResult r;
  r.sign = denominator.sign;
  r.log_value = numerator.log_value - denominator.log_value + extra_log;
  r.value = r.sign * std::exp(r.log_value);
  r.error_bound = numerator.error_bound + denominator.error_bound;
  r.terms_used = std::max(numerator.terms_used, denominator.terms_used);
  return r;
}

}  // namespace

EvalResult qgamma_lt1(double x, const QParameter& q, const TruncationPolicy& policy) {
  if (!q.below_one()) {
    throw DomainError("qgamma_lt1: requires 0 < q < 1");
  }
  check_argument(x, "qgamma_lt1");
  return LogQGamma(q, policy).evaluate(x);
}

EvalResult qgamma_gt1(double x, const QParameter& q, const TruncationPolicy& policy) {
  if (q.below_one()) {
    throw DomainError("qgamma_gt1: requires q > 1");
  }
  check_argument(x, "qgamma_gt1");
  const QParameter base = q.reciprocal();
  const EvalResult numerator = qpochhammer_power_inf(1.0, base, policy);
  const EvalResult denominator = qpochhammer_power_inf(x, base, policy);
  const double log_q = std::log(q.value());
  const double extra = (1.0 - x) * std::log(q.value() - 1.0) + 0.5 * x * (x - 1.0) * log_q;
  return assemble(numerator, denominator, extra);
}

EvalResult qgamma(double x, const QParameter& q, const TruncationPolicy& policy) {
  return q.below_one() ? qgamma_lt1(x, q, policy) : qgamma_gt1(x, q, policy);
}

double qdigamma(double y, const QParameter& q, const TruncationPolicy& policy) {
  if (!q.below_one()) {
    throw DomainError("qdigamma: requires 0 < q < 1");
  }
  if (!std::isfinite(y) || y <= 0.0) {
    throw DomainError("qdigamma: y must be positive and finite");
  }
  const double tail = geometric_tail_sum(y, q, policy).value;
  return -std::log1p(-q.value()) + std::log(q.value()) * tail;
}

LogQGamma::LogQGamma(const QParameter& q, const TruncationPolicy& policy)
    : q_(q), policy_(policy) {
  if (!q.below_one()) {
    throw DomainError("LogQGamma: requires 0 < q < 1");
  }
  log_qq_ = qpochhammer_power_inf(1.0, q_, policy_);
  log_one_minus_q_ = std::log1p(-q_.value());
}

EvalResult LogQGamma::evaluate(double x) const {
  check_argument(x, "qgamma_lt1");
  const EvalResult denominator = qpochhammer_power_inf(x, q_, policy_);
  return assemble(log_qq_, denominator, (1.0 - x) * log_one_minus_q_);
}

double LogQGamma::operator()(double x) const {
  const EvalResult r = evaluate(x);
  if (r.sign <= 0) {
    throw DomainError("LogQGamma: Gamma_q(x) is negative at x = " + std::to_string(x));
  }
  return r.log_value;
}

}  // namespace qspecial
