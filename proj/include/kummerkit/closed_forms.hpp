#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kummerkit/errors.hpp"
#include "kummerkit/rational.hpp"
#include "kummerkit/series.hpp"

namespace kummerkit {

/// The six coefficient families with closed forms: one per indicial root of
/// the reduced equations with b = 2a (K2), b = 2a+1 (P1), b = 2a-1 (M1).
enum class FamilyId {
  kK2Even,           // b = 2a,   lambda = 0
  kK2OddExponent,    // b = 2a,   lambda = 1-2a
  kP1Lambda0,        // b = 2a+1, lambda = 0
  kP1LambdaMinus2a,  // b = 2a+1, lambda = -2a
  kM1Lambda0,        // b = 2a-1, lambda = 0
  kM1Lambda2Minus2a  // b = 2a-1, lambda = 2-2a
};

std::string family_name(FamilyId id);
FamilyId family_from_name(std::string_view name);
const std::vector<FamilyId>& all_families();

/// A coefficient family c_n for one Frobenius branch, pinned to a rational
/// parameter a. Even and odd indices follow separate Pochhammer chains:
///   c_{2m}   = c0 / (4^m m! (p)_m),   c_{2m+1} = c1 / (4^m m! (q)_m),
/// with c1 fixed by the family's rule (identically zero for the K2 pair).
struct ClosedFormFamily {
  FamilyId id;
  Rational a;
  Rational c0 = 1;

  int offset() const;       // b - 2a of the originating equation
  Rational lambda() const;  // the branch's indicial exponent
  Rational even_base() const;
  Rational odd_base() const;  // only for families with odd terms
  bool has_odd_terms() const;
  Rational c1() const;

  /// Throws ExcludedParameterError when a lies in the family's excluded set.
  void validate() const;
};

Rational closed_coeff(const ClosedFormFamily& fam, int n);

struct CertificationResult {
  bool certified;
  int first_mismatch;  // -1 when certified
  int order;
};

/// Exact comparison of the closed form against the three-term recurrence for
/// all n <= order. Throws ResonantDenominatorError if the recurrence hits a
/// vanishing denominator for a parameter the excluded set does not cover.
CertificationResult certify_family(const ClosedFormFamily& fam, int order);

/// A solution y = z^mu { F1(x) + k z F2(x) } with x = z^2/4, evaluated
/// through the series kernels. `second` is unused when has_second is false.
struct AssembledSolution {
  double mu = 0.0;
  HypergeometricSpec first;
  HypergeometricSpec second;
  double second_coeff = 0.0;
  bool has_second = false;

  EvalResult evaluate(double z, double tol) const;
};

/// The analytic-at-zero solution: the right side of the identity for the
/// given offset. Throws ExcludedParameterError when 2a+offset is zero or a
/// negative integer.
AssembledSolution assemble_y1(int offset, double a);

/// The z^{1-beta}-prefactored solution. Throws ExcludedParameterError in the
/// integer-gap regime where the displayed form breaks down.
AssembledSolution assemble_y2(int offset, double a);

}  // namespace kummerkit
