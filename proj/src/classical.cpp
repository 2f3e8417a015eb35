#include "qspecial/classical.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "compensated_sum.hpp"
#include "qspecial/errors.hpp"

namespace qspecial {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kMaxGammaArgument = 50.0;

void check_gamma_argument(double x, const char* op) {
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError(std::string(op) + ": x must be positive, got " + std::to_string(x));
  }
  if (x > kMaxGammaArgument) {
    throw DomainError(std::string(op) + ": x must not exceed 50, got " + std::to_string(x));
  }
}

// Lanczos series for Gamma(z + 1), z >= -1/2.
double lanczos_gamma_shifted(double z) {
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

double lanczos_log_gamma_shifted(double z) {
  double series = kLanczosCoefficients[0];
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double euler_gamma(double x) {
  check_gamma_argument(x, "euler_gamma");
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma_shifted(-x));
  }
  return lanczos_gamma_shifted(x - 1.0);
}

double euler_log_gamma(double x) {
  check_gamma_argument(x, "euler_log_gamma");
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) -
           lanczos_log_gamma_shifted(-x);
  }
  return lanczos_log_gamma_shifted(x - 1.0);
}

double euler_digamma_series(double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!std::isfinite(x) || x <= 0.0) {
    throw DomainError("euler_digamma_series: x must be positive, got " + std::to_string(x));
  }
  const double scale = std::abs(x - 1.0);
  if (scale == 0.0) {
    return -EulerConstants::gamma_euler;
  }
  const double needed = std::floor(scale / policy.epsilon) + 1.0;
  if (needed > static_cast<double>(policy.max_terms)) {
    throw ConvergenceError("euler_digamma_series: tail estimate |x-1|/N needs " +
                           std::to_string(needed) + " terms, cap is " +
                           std::to_string(policy.max_terms));
  }
  const auto terms = static_cast<std::size_t>(needed);

  // Smallest terms first.
  detail::CompensatedSum sum;
  for (std::size_t k = terms; k-- > 0;) {
    const double kd = static_cast<double>(k);
    sum.add(1.0 / ((kd + 1.0) * (x + kd)));
  }
  return -EulerConstants::gamma_euler + (x - 1.0) * sum.value();
}

}  // namespace qspecial
