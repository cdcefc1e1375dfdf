"""
精确数学模块：β 分式、分段函数与最小包络。
"""

from edgealpha.exactmath.beta_fraction import (
    IDENTICAL,
    ONE,
    ZERO,
    BetaFraction,
    Crossing,
    Rational,
    RationalLike,
    as_rational,
    check_beta,
    crossing_point,
    crossing_points,
    parse_beta_fraction,
)
from edgealpha.exactmath.piecewise import (
    Piece,
    PiecewiseBetaFunction,
    evaluate,
    first_difference,
    first_violation,
    is_nonincreasing,
    min_envelope,
    parse_piecewise,
    piecewise_equal,
    pointwise_le,
    pointwise_min,
)

__all__ = [
    "IDENTICAL",
    "ONE",
    "ZERO",
    "BetaFraction",
    "Crossing",
    "Rational",
    "RationalLike",
    "as_rational",
    "check_beta",
    "crossing_point",
    "crossing_points",
    "parse_beta_fraction",
    "Piece",
    "PiecewiseBetaFunction",
    "evaluate",
    "first_difference",
    "first_violation",
    "is_nonincreasing",
    "min_envelope",
    "parse_piecewise",
    "piecewise_equal",
    "pointwise_le",
    "pointwise_min",
]
