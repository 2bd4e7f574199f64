#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kummerkit/closed_forms.hpp"
#include "kummerkit/errors.hpp"
#include "kummerkit/rational.hpp"
#include "kummerkit/series.hpp"

namespace kummerkit {

/// The three transformations under test: Kummer's second transformation and
/// its b = 2a±1 contiguous companions.
enum class IdentityId { kKummer2, kContigPlus, kContigMinus };

std::string identity_name(IdentityId id);
IdentityId identity_from_name(std::string_view name);
const std::vector<IdentityId>& all_identities();

/// The shift b - 2a of the lower parameter: 0, +1, or -1.
int identity_offset(IdentityId id);

struct PointCheck {
  double a;
  double z;
  double lhs;
  double rhs;
  double abs_residual;
  double rel_residual;
  int terms_used;
  bool pass;
};

struct IdentityReport {
  IdentityId identity;
  double tol;
  std::vector<PointCheck> points;
  bool pass;
};

struct ConnectionConstants {
  Rational A;
  Rational B;
  std::string method;  // always "series-matching"
};

/// e^{-z} 1F1(a; 2a+offset; 2z) as an evaluatable spec.
/// Throws ExcludedParameterError when 2a+offset is zero or a negative integer.
HypergeometricSpec lhs_spec(IdentityId id, double a);

/// The identity's right side; delegates to assemble_y1 with the matching
/// offset.
AssembledSolution rhs_spec(IdentityId id, double a);

/// Evaluates both sides on the grid (a outer, z inner) at truncation
/// tolerance tol/10 and records residuals. A point passes when the relative
/// residual is at most tol, or the absolute residual is where |rhs| < 1.
IdentityReport verify_identity(IdentityId id, const std::vector<double>& a_grid,
                               const std::vector<double>& z_grid, double tol);

/// Exact coefficients of z^n, n <= order, of e^{-z} 1F1(a; 2a+offset; 2z):
/// the Cauchy product of (-1)^k/k! with (a)_n 2^n / ((2a+offset)_n n!).
std::vector<Rational> lhs_series_exact(IdentityId id, const Rational& a, int order);

/// Matches the exact left-side series against A y1 + B y2. B is forced to 0
/// structurally (the left side has no z^{1-beta} component when 1-beta is
/// not an integer) and A by the z^0 coefficient; every further coefficient is
/// then checked. Throws ResonantParameterError in the integer-gap regime.
ConnectionConstants connection_constants(IdentityId id, const Rational& a, int order);

}  // namespace kummerkit
