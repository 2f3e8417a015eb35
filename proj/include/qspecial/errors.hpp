#pragma once

#include <stdexcept>
#include <string>

namespace qspecial {

// Argument outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Argument sits on a pole of Gamma_q: x in {0, -1, -2, ...}.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A truncated series or product could not reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qspecial
