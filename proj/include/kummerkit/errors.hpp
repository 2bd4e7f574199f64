#pragma once

#include <stdexcept>

namespace kummerkit {

/// A lower series parameter sits at (or within the guard distance of) a
/// non-positive integer, where the series coefficients blow up.
class PoleParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The term cap was reached before the stopping rule fired, or a float-mode
/// term left the representable range.
class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the real-valued domain of the requested expression
/// (e.g. z = 0 under a negative-power prefactor).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameter violates a theorem hypothesis or a closed-form family proviso.
class ExcludedParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A recurrence denominator vanished: the indicial exponents differ by an
/// integer and the requested power-series solution degenerates.
class ResonantDenominatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Connection-constant matching was requested in the integer-gap regime,
/// where the second solution is not a pure power-prefactored series.
class ResonantParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace kummerkit
