#pragma once

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "kummerkit/errors.hpp"
#include "kummerkit/rational.hpp"
#include "kummerkit/series.hpp"

namespace kummerkit {

/// The reduced equation z y'' + beta y' + (gamma + delta z) y = 0, identified
/// by its three scalars. The scalar type is double for numeric work and
/// Rational when the recurrence must hold exactly.
template <class S>
struct OdeSpec {
  S beta;
  S gamma;
  S delta;
};

using OdeSpecF = OdeSpec<double>;
using OdeSpecQ = OdeSpec<Rational>;

/// Roots of the indicial equation lambda (lambda + beta - 1) = 0.
/// `integer_gap` holds |root_zero - root_other| when that difference is an
/// integer (0 for the double root), which is the regime where the second
/// solution may pick up a log term.
template <class S>
struct IndicialRoots {
  S root_zero;
  S root_other;
  std::optional<long> integer_gap;
};

/// A truncated Frobenius solution z^lambda sum c_n z^n around z = 0.
/// When the recurrence denominator vanishes the coefficients stop at the
/// resonance and `log_case` is set; the logarithmic continuation is detected,
/// never constructed.
template <class S>
struct FrobeniusSolution {
  S lambda;
  std::vector<S> coeffs;  // c0..cN, truncated at the resonance in the log case
  S c0;
  bool log_case = false;
  int order = 0;  // requested N
};

namespace detail {

inline bool scalar_is_zero(const Rational& v) { return v == 0; }
inline bool scalar_is_zero(double v) { return std::abs(v) < kPoleGuard; }

inline bool integer_valued(const Rational& v, long& out) {
  if (!is_integer(v)) return false;
  out = numerator(v).convert_to<long>();
  return true;
}

inline bool integer_valued(double v, long& out) {
  double r = std::round(v);
  if (std::abs(v - r) > 1e-9) return false;
  out = static_cast<long>(r);
  return true;
}

template <class S>
std::string scalar_text(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return to_fraction_string(v);
  } else {
    return std::to_string(v);
  }
}

}  // namespace detail

/// Kummer's equation x w'' + (b - x) w' - a w = 0 with b = 2a + b_offset,
/// under x -> 2z and w = e^z y, lands in the reduced family:
///   offset  0 -> (2a,     0, -1)
///   offset +1 -> (2a + 1, 1, -1)
///   offset -1 -> (2a - 1, -1, -1)
template <class S>
OdeSpec<S> reduce_kummer(const S& a, int b_offset) {
  if (b_offset < -1 || b_offset > 1) {
    throw std::invalid_argument("b_offset must be -1, 0, or +1");
  }
  return {S(2 * a + b_offset), S(b_offset), S(-1)};
}

template <class S>
IndicialRoots<S> indicial_roots(const OdeSpec<S>& ode) {
  IndicialRoots<S> roots{S(0), S(1 - ode.beta), std::nullopt};
  long gap = 0;
  if (detail::integer_valued(roots.root_other, gap)) {
    roots.integer_gap = std::labs(gap);
  }
  return roots;
}

/// c_n = -(gamma c_{n-1} + delta c_{n-2}) / ((n+lambda)(n+lambda+beta-1)),
/// with the convention c_{-1} = 0. Throws ResonantDenominatorError when the
/// denominator vanishes (exactly in rational mode, within the pole guard in
/// float mode).
template <class S>
S recurrence_step(const OdeSpec<S>& ode, const S& lambda, int n, const S& c_prev,
                  const S& c_prev2) {
  if (n < 1) throw std::invalid_argument("recurrence_step: n must be positive");
  const S index = lambda + n;
  const S den = index * (index + ode.beta - 1);
  if (detail::scalar_is_zero(den)) {
    throw ResonantDenominatorError("recurrence denominator vanishes at n = " + std::to_string(n) +
                                   " (lambda = " + detail::scalar_text(lambda) + ")");
  }
  return -(ode.gamma * c_prev + ode.delta * c_prev2) / den;
}

/// Iterates the recurrence from c0 up to order N. A vanishing denominator
/// truncates the coefficients at the resonance and raises the log_case flag
/// instead of failing.
template <class S>
FrobeniusSolution<S> solve_frobenius(const OdeSpec<S>& ode, const S& lambda, int order,
                                     const S& c0 = S(1)) {
  if (order < 2) throw std::invalid_argument("solve_frobenius: N must be at least 2");
  if (c0 == S(0)) throw std::invalid_argument("solve_frobenius: c0 must be nonzero");
  if (!detail::scalar_is_zero(S(lambda * (lambda + ode.beta - 1)))) {
    throw std::invalid_argument("solve_frobenius: lambda = " + detail::scalar_text(lambda) +
                                " is not an indicial root");
  }
  FrobeniusSolution<S> sol{lambda, {c0}, c0, false, order};
  for (int n = 1; n <= order; ++n) {
    const S& prev = sol.coeffs[n - 1];
    const S prev2 = n >= 2 ? sol.coeffs[n - 2] : S(0);
    try {
      sol.coeffs.push_back(recurrence_step(ode, lambda, n, prev, prev2));
    } catch (const ResonantDenominatorError&) {
      sol.log_case = true;
      break;
    }
  }
  return sol;
}

/// Coefficient of z^{n+lambda-1} in z y'' + beta y' + (gamma + delta z) y
/// after substituting the truncated solution, for n = 0..N-1. Exact mode
/// yields all zeros for any non-log solution of its own equation.
template <class S>
std::vector<S> ode_residual(const OdeSpec<S>& ode, const FrobeniusSolution<S>& sol) {
  std::vector<S> residuals;
  if (sol.coeffs.empty()) return residuals;
  residuals.reserve(sol.coeffs.size() - 1);
  for (std::size_t n = 0; n + 1 < sol.coeffs.size(); ++n) {
    const S index = sol.lambda + static_cast<int>(n);
    S value = sol.coeffs[n] * index * (index + ode.beta - 1);
    if (n >= 1) value += ode.gamma * sol.coeffs[n - 1];
    if (n >= 2) value += ode.delta * sol.coeffs[n - 2];
    residuals.push_back(value);
  }
  return residuals;
}

}  // namespace kummerkit
