#pragma once

// Extended-precision reference values computed by direct multiplication and
// summation. Nothing here calls into the library.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cstddef>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;

inline Real pow_real(const Real& b, const Real& e) { return boost::multiprecision::pow(b, e); }

// prod_{n>=0} (1 - a q^n), multiplied until |a q^n| < 1e-40.
inline Real qpochhammer(const Real& a, const Real& q) {
  Real product = 1;
  Real t = a;
  const Real cutoff("1e-40");
  while (boost::multiprecision::abs(t) >= cutoff) {
    product *= (1 - t);
    t *= q;
  }
  return product;
}

inline double qgamma(double x_d, double q_d) {
  const Real x(x_d);
  const Real q(q_d);
  if (q < 1) {
    return static_cast<double>(qpochhammer(q, q) / qpochhammer(pow_real(q, x), q) *
                               pow_real(1 - q, 1 - x));
  }
  const Real p = 1 / q;
  return static_cast<double>(qpochhammer(p, p) / qpochhammer(pow_real(p, x), p) *
                             pow_real(q - 1, 1 - x) * pow_real(q, x * (x - 1) / 2));
}

// sum_{n=0}^{terms-1} q^{s+n} / (1 - q^{s+n})
inline double tail_partial_sum(double s_d, double q_d, std::size_t terms) {
  const Real q(q_d);
  Real t = pow_real(q, Real(s_d));
  Real sum = 0;
  for (std::size_t n = 0; n < terms; ++n) {
    sum += t / (1 - t);
    t *= q;
  }
  return static_cast<double>(sum);
}

// Left-hand form of the termwise difference, no algebraic rearrangement.
inline double termwise_difference(std::size_t n, double x, double a, double q_d) {
  const Real q(q_d);
  const Real big = pow_real(q, 1 + Real(a) * Real(x) + n);
  const Real small = pow_real(q, 1 + Real(x) + n);
  return static_cast<double>(big / (1 - big) - small / (1 - small));
}

}  // namespace oracle
