#pragma once

#include "qspecial/qseries.hpp"

namespace qspecial {

struct EulerConstants {
  /// Euler-Mascheroni constant.
  static constexpr double gamma_euler = 0.57721566490153286060651209008240243;
};

/// Euler's Gamma(x) for 0 < x <= 50, relative accuracy better than 1e-12.
/// Lanczos approximation (g = 7, 9 coefficients) with reflection below 1/2.
double euler_gamma(double x);

/// log Gamma(x) for x > 0, same approximation as euler_gamma.
double euler_log_gamma(double x);

/// Default stopping rule for euler_digamma_series. The series tail decays
/// like 1/N, so the global 1e-13 tolerance is out of reach.
inline constexpr TruncationPolicy kDigammaSeriesPolicy{1e-7, 100'000'000};

/// psi(x) = -gamma + (x-1) * sum_{k>=0} 1 / ((k+1)(x+k)), x > 0.
/// Sums the first N terms with N the smallest integer making |x-1|/N < epsilon.
/// Throws ConvergenceError when that N exceeds max_terms.
double euler_digamma_series(double x, const TruncationPolicy& policy = kDigammaSeriesPolicy);

}  // namespace qspecial
