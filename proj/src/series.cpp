#include "kummerkit/series.hpp"

#include <cmath>
#include <string>
#include <type_traits>
#include <utility>

namespace kummerkit {

namespace {

void require_positive_tol(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
}

void guard_lower_parameter(double b) {
  if (near_nonpositive_integer(b)) {
    throw PoleParameterError("lower parameter " + std::to_string(b) +
                             " is at or within the guard distance of a non-positive integer");
  }
}

void guard_lower_parameter(const Rational& b) {
  if (is_nonpositive_integer(b)) {
    throw PoleParameterError("lower parameter " + to_fraction_string(b) +
                             " is a non-positive integer");
  }
}

template <class S>
struct SumOutcome {
  S value;
  int terms_used;
  S last_term;
  double max_abs_term;  // meaningful in double mode only
};

// step(n) is the multiplicative factor taking term_{n-1} to term_n. A term
// that lands exactly on zero stays zero from then on, so the tail vanishes
// and the sum is complete.
template <class S, class StepRatio>
SumOutcome<S> sum_series(StepRatio&& step, double tol) {
  using std::abs;
  S term(1);
  S sum(1);
  const S rel(tol);
  int terms = 1;
  int settled = 0;
  double max_abs = 1.0;
  for (int n = 1; n <= kMaxSeriesTerms; ++n) {
    term *= step(n);
    if (term == 0) return {std::move(sum), terms, S(0), max_abs};
    sum += term;
    ++terms;
    if constexpr (std::is_same_v<S, double>) {
      if (!std::isfinite(term) || !std::isfinite(sum)) {
        throw NoConvergenceError("series term left the double range");
      }
      max_abs = std::max(max_abs, std::abs(term));
    }
    if (abs(term) <= rel * abs(sum)) {
      if (++settled >= kSettledTermsRequired) return {std::move(sum), terms, std::move(term), max_abs};
    } else {
      settled = 0;
    }
  }
  throw NoConvergenceError("stopping rule did not fire within the term cap");
}

template <class S>
SumOutcome<S> sum_0f1(const S& b, const S& x, double tol) {
  return sum_series<S>([&](int n) -> S { return x / ((b + (n - 1)) * n); }, tol);
}

template <class S>
SumOutcome<S> sum_1f1(const S& a, const S& b, const S& x, double tol) {
  return sum_series<S>([&](int n) -> S { return x * (a + (n - 1)) / ((b + (n - 1)) * n); }, tol);
}

EvalResult rounded(ExactEvalResult&& exact) {
  return {to_double(exact.value), exact.terms_used, exact.last_term_magnitude,
          EvalMode::kExactThenRound};
}

bool lost_too_many_digits(const SumOutcome<double>& s) {
  return s.max_abs_term > kCancellationLimit * std::abs(s.value);
}

double prefactor_value(const Prefactor& p, double z) {
  switch (p.kind) {
    case PrefactorKind::kNone:
      return 1.0;
    case PrefactorKind::kExpNeg:
      return std::exp(-z);
    case PrefactorKind::kPower:
      if (p.mu == 0.0) return 1.0;
      if (z == 0.0) {
        if (p.mu < 0.0) throw DomainError("z^mu prefactor with mu < 0 is undefined at z = 0");
        return 0.0;
      }
      if (z < 0.0 && std::nearbyint(p.mu) != p.mu) {
        throw DomainError("z^mu prefactor with non-integer mu is undefined for z < 0");
      }
      return std::pow(z, p.mu);
  }
  throw std::invalid_argument("unknown prefactor kind");
}

double mapped_argument(ArgumentMap map, double z) {
  switch (map) {
    case ArgumentMap::kIdentity:
      return z;
    case ArgumentMap::kScaleTwice:
      return 2.0 * z;
    case ArgumentMap::kSquareQuarter:
      return z * z / 4.0;
  }
  throw std::invalid_argument("unknown argument map");
}

}  // namespace

bool near_nonpositive_integer(double b, double guard) {
  if (b >= 0.5) return false;
  double r = std::round(b);
  return r <= 0.0 && std::abs(b - r) < guard;
}

void HypergeometricSpec::validate() const {
  if (lower.size() != 1) throw std::invalid_argument("spec requires exactly one lower parameter");
  if (upper.size() > 1) throw std::invalid_argument("only 0F1 and 1F1 are in scope");
  for (double b : lower) guard_lower_parameter(b);
}

ExactEvalResult eval_0f1_exact(const Rational& b, const Rational& x, double tol) {
  require_positive_tol(tol);
  guard_lower_parameter(b);
  auto s = sum_0f1<Rational>(b, x, tol);
  return {std::move(s.value), s.terms_used, std::abs(to_double(s.last_term))};
}

ExactEvalResult eval_1f1_exact(const Rational& a, const Rational& b, const Rational& x, double tol) {
  require_positive_tol(tol);
  guard_lower_parameter(b);
  auto s = sum_1f1<Rational>(a, b, x, tol);
  return {std::move(s.value), s.terms_used, std::abs(to_double(s.last_term))};
}

EvalResult eval_0f1(double b, double x, double tol) {
  require_positive_tol(tol);
  guard_lower_parameter(b);
  if (x < kPromoteArgThreshold) {
    return rounded(eval_0f1_exact(rational_from_double(b), rational_from_double(x), tol));
  }
  auto s = sum_0f1<double>(b, x, tol);
  if (lost_too_many_digits(s)) {
    return rounded(eval_0f1_exact(rational_from_double(b), rational_from_double(x), tol));
  }
  return {s.value, s.terms_used, std::abs(s.last_term), EvalMode::kFloat64};
}

EvalResult eval_1f1(double a, double b, double x, double tol) {
  require_positive_tol(tol);
  guard_lower_parameter(b);
  if (x < kPromoteArgThreshold) {
    return rounded(eval_1f1_exact(rational_from_double(a), rational_from_double(b),
                                  rational_from_double(x), tol));
  }
  auto s = sum_1f1<double>(a, b, x, tol);
  if (lost_too_many_digits(s)) {
    return rounded(eval_1f1_exact(rational_from_double(a), rational_from_double(b),
                                  rational_from_double(x), tol));
  }
  return {s.value, s.terms_used, std::abs(s.last_term), EvalMode::kFloat64};
}

EvalResult eval_spec(const HypergeometricSpec& spec, double z, double tol) {
  spec.validate();
  const double x = mapped_argument(spec.argument_map, z);
  EvalResult r = spec.upper.empty() ? eval_0f1(spec.lower[0], x, tol)
                                    : eval_1f1(spec.upper[0], spec.lower[0], x, tol);
  const double pre = prefactor_value(spec.prefactor, z);
  r.value *= pre;
  r.last_term_magnitude *= std::abs(pre);
  return r;
}

}  // namespace kummerkit
