#include "qspecial/qseries.hpp"

#include <cmath>
#include <string>

#include "compensated_sum.hpp"
#include "qspecial/errors.hpp"

namespace qspecial {

namespace {

// a*q^n is re-anchored with pow() at this stride so that the running
// product never accumulates more than a few dozen roundings.
constexpr std::size_t kReanchorStride = 32;

void require_product_base(const QParameter& base, const char* op) {
  if (!base.below_one()) {
    throw DomainError(std::string(op) + ": product base must satisfy 0 < q < 1");
  }
  if (base.value() > kMaxSupportedBase) {
    throw ConvergenceError(std::string(op) + ": q = " + std::to_string(base.value()) +
                           " is beyond the supported range q <= 0.9999");
  }
}

double tail_bound(double t_abs, double q) {
  return t_abs / ((1.0 - q) * (1.0 - t_abs));
}

[[noreturn]] void out_of_terms(const char* op, const TruncationPolicy& policy) {
  throw ConvergenceError(std::string(op) + ": tail bound still above epsilon after " +
                         std::to_string(policy.max_terms) + " terms");
}

EvalResult finish_product(const detail::CompensatedSum& log_sum, int sign, double bound,
                          std::size_t terms) {
  EvalResult r;
  r.log_value = log_sum.value();
  r.sign = sign;
  r.value = sign * std::exp(r.log_value);
  r.error_bound = bound;
  r.terms_used = terms;
  return r;
}

EvalResult zero_product(std::size_t terms) {
  EvalResult r;
  r.terms_used = terms;
  return r;
}

}  // namespace

QParameter::QParameter(double q) : q_(q), branch_(Branch::LessThanOne) {
  if (!std::isfinite(q) || q <= 0.0) {
    throw DomainError("q must be finite and positive, got " + std::to_string(q));
  }
  if (q == 1.0) {
    throw DomainError("q must not equal 1");
  }
  branch_ = q < 1.0 ? Branch::LessThanOne : Branch::GreaterThanOne;
}

void TruncationPolicy::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw DomainError("epsilon must lie in (0, 1)");
  }
  if (max_terms < 1) {
    throw DomainError("max_terms must be at least 1");
  }
}

EvalResult qpochhammer_inf(double a, const QParameter& base, const TruncationPolicy& policy) {
  policy.validate();
  require_product_base(base, "qpochhammer_inf");
  if (!std::isfinite(a)) {
    throw DomainError("qpochhammer_inf: a must be finite");
  }
  const double q = base.value();

  detail::CompensatedSum log_sum;
  int sign = 1;
  double t = a;
  for (std::size_t n = 0;; ++n) {
    if (n > 0) {
      t = (n % kReanchorStride == 0) ? a * std::pow(q, static_cast<double>(n)) : t * q;
    }
    const double t_abs = std::abs(t);
    if (t_abs < 1.0) {
      const double bound = tail_bound(t_abs, q);
      if (bound < policy.epsilon) {
        return finish_product(log_sum, sign, bound, n);
      }
    }
    if (n >= policy.max_terms) {
      out_of_terms("qpochhammer_inf", policy);
    }
    if (t == 1.0) {
      return zero_product(n + 1);
    }
    if (t > 1.0) {
      sign = -sign;
      log_sum.add(std::log(t - 1.0));
    } else {
      log_sum.add(std::log1p(-t));
    }
  }
}

EvalResult qpochhammer_power_inf(double s, const QParameter& base,
                                 const TruncationPolicy& policy) {
  policy.validate();
  require_product_base(base, "qpochhammer_power_inf");
  if (!std::isfinite(s)) {
    throw DomainError("qpochhammer_power_inf: exponent must be finite");
  }
  const double q = base.value();
  const double log_q = std::log(q);

  detail::CompensatedSum log_sum;
  int sign = 1;
  for (std::size_t n = 0;; ++n) {
    // q^{s+n} = exp(u); 1 - q^{s+n} = -expm1(u).
    const double u = (s + static_cast<double>(n)) * log_q;
    if (u < 0.0) {
      const double bound = tail_bound(std::exp(u), q);
      if (bound < policy.epsilon) {
        return finish_product(log_sum, sign, bound, n);
      }
    }
    if (n >= policy.max_terms) {
      out_of_terms("qpochhammer_power_inf", policy);
    }
    if (u == 0.0) {
      return zero_product(n + 1);
    }
    if (u > 0.0) {
      sign = -sign;
      log_sum.add(std::log(std::expm1(u)));
    } else {
      log_sum.add(std::log(-std::expm1(u)));
    }
  }
}

EvalResult geometric_tail_sum(double x_shift, const QParameter& base,
                              const TruncationPolicy& policy) {
  policy.validate();
  require_product_base(base, "geometric_tail_sum");
  if (!std::isfinite(x_shift) || x_shift <= 0.0) {
    throw DomainError("geometric_tail_sum: x_shift must be positive and finite");
  }
  const double q = base.value();
  const double log_q = std::log(q);

  detail::CompensatedSum sum;
  for (std::size_t n = 0;; ++n) {
    const double u = (x_shift + static_cast<double>(n)) * log_q;
    const double t = std::exp(u);
    const double one_minus_t = -std::expm1(u);
    const double bound = t / ((1.0 - q) * one_minus_t);
    if (bound < policy.epsilon) {
      EvalResult r;
      r.value = sum.value();
      r.sign = r.value > 0.0 ? 1 : 0;
      r.log_value = r.sign ? std::log(r.value) : -std::numeric_limits<double>::infinity();
      r.error_bound = bound;
      r.terms_used = n;
      return r;
    }
    if (n >= policy.max_terms) {
      out_of_terms("geometric_tail_sum", policy);
    }
    sum.add(t / one_minus_t);
  }
}

}  // namespace qspecial
