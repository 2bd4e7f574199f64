"""Series solutions and transformation identities for Kummer's equation.

Rational values cross the boundary as fraction strings ("p/q" or "p"), ready
for fractions.Fraction.
"""

from ._kummerkit import (
    ExcludedParameterError,
    NoConvergenceError,
    PoleParameterError,
    ResonantDenominatorError,
    ResonantParameterError,
    certify_family,
    closed_coeff,
    connection_constants,
    eval_0f1,
    eval_0f1_exact,
    eval_1f1,
    eval_1f1_exact,
    families,
    frobenius,
    identities,
    lhs_series_exact,
    verify_identity,
)

__all__ = [
    "ExcludedParameterError",
    "NoConvergenceError",
    "PoleParameterError",
    "ResonantDenominatorError",
    "ResonantParameterError",
    "certify_family",
    "closed_coeff",
    "connection_constants",
    "eval_0f1",
    "eval_0f1_exact",
    "eval_1f1",
    "eval_1f1_exact",
    "families",
    "frobenius",
    "identities",
    "lhs_series_exact",
    "verify_identity",
]
