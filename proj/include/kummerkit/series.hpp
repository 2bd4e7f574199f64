#pragma once

#include <stdexcept>
#include <vector>

#include "kummerkit/errors.hpp"
#include "kummerkit/rational.hpp"

namespace kummerkit {

/// Lower parameters closer than this to a non-positive integer are rejected.
inline constexpr double kPoleGuard = 1e-8;

/// Hard cap on summed terms before NoConvergenceError.
inline constexpr int kMaxSeriesTerms = 10000;

/// The stopping rule fires after this many consecutive relatively-small terms.
inline constexpr int kSettledTermsRequired = 3;

/// Float-mode arguments below this are summed in exact rationals up front
/// (deep cancellation regime of the alternating series).
inline constexpr double kPromoteArgThreshold = -10.0;

/// Float-mode cancellation budget: when max |term| exceeds this multiple of
/// the final |sum|, the double result has lost too many digits and the sum
/// is redone in exact rationals.
inline constexpr double kCancellationLimit = 1e3;

enum class EvalMode { kFloat64, kExtended, kExactThenRound };

struct EvalResult {
  double value = 0.0;
  int terms_used = 0;             // terms actually summed, >= 1
  double last_term_magnitude = 0.0;
  EvalMode mode = EvalMode::kFloat64;
};

struct ExactEvalResult {
  Rational value;
  int terms_used = 0;
  double last_term_magnitude = 0.0;
};

enum class ArgumentMap {
  kIdentity,       // x = z
  kScaleTwice,     // x = 2z
  kSquareQuarter,  // x = z^2/4
};

enum class PrefactorKind { kNone, kExpNeg, kPower };

struct Prefactor {
  PrefactorKind kind = PrefactorKind::kNone;
  double mu = 0.0;  // exponent for kPower

  static Prefactor none() { return {PrefactorKind::kNone, 0.0}; }
  static Prefactor exp_neg() { return {PrefactorKind::kExpNeg, 0.0}; }
  static Prefactor power(double mu) { return {PrefactorKind::kPower, mu}; }
};

/// One pFq instance restricted to the functions in scope (0F1 and 1F1),
/// together with an argument transform and an optional prefactor.
struct HypergeometricSpec {
  std::vector<double> upper;  // empty for 0F1, one entry for 1F1
  std::vector<double> lower;  // exactly one entry, guarded against poles
  ArgumentMap argument_map = ArgumentMap::kIdentity;
  Prefactor prefactor = Prefactor::none();

  /// Throws PoleParameterError / std::invalid_argument when the invariants
  /// do not hold.
  void validate() const;
};

/// True when b is within `guard` of {0, -1, -2, ...}.
bool near_nonpositive_integer(double b, double guard = kPoleGuard);

/// Rising factorial x(x+1)...(x+n-1); the empty product for n = 0.
template <class S>
S pochhammer(const S& x, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be non-negative");
  S result(1);
  S factor(x);
  for (int k = 0; k < n; ++k) {
    result *= factor;
    factor += 1;
  }
  return result;
}

inline double pochhammer(double x, int n) { return pochhammer<double>(x, n); }

/// 0F1(-; b; x) = sum_n x^n / ((b)_n n!), summed until the stopping rule
/// estimates a relative truncation error below `tol`.
EvalResult eval_0f1(double b, double x, double tol);

/// 1F1(a; b; x) = sum_n (a)_n x^n / ((b)_n n!).
/// Arguments in the cancellation regime are re-summed in exact rationals
/// (every double converts exactly) and rounded once at the end.
EvalResult eval_1f1(double a, double b, double x, double tol);

/// Evaluates prefactor(z) * F(mapped argument) for the given spec.
EvalResult eval_spec(const HypergeometricSpec& spec, double z, double tol);

/// Exact-mode kernels: the truncated series value is an exact rational.
ExactEvalResult eval_0f1_exact(const Rational& b, const Rational& x, double tol);
ExactEvalResult eval_1f1_exact(const Rational& a, const Rational& b, const Rational& x, double tol);

}  // namespace kummerkit
