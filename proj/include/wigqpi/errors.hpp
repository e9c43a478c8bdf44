#pragma once

#include <stdexcept>
#include <string>

namespace wigqpi {

/// Precondition violated by the caller (bad index, radius, tolerance, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class ToleranceNotReached : public std::runtime_error {
 public:
  ToleranceNotReached(const std::string& what, double value, double error_estimate)
      : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}

  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Zero or several convention candidates reproduced the scaled spectrum.
class AmbiguousConvention : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scaling operation was requested before conventions were resolved.
class ConventionUnresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Wigner value escaped [-1/pi, 1/pi]; always an implementation bug.
class BoundViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wigqpi
