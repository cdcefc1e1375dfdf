"""
界模块：Tian 判据、Berman 普适下界与 R(S,C) 界报告。
"""

from edgealpha.bounds.berman import berman_constant, berman_envelope, berman_lower_bound, berman_r_bound
from edgealpha.bounds.report import BoundReport, BoundSource, UpperBound, bound_report, cited_upper_bound
from edgealpha.bounds.tian import (
    SURFACE_DIMENSION,
    TianInterval,
    r_lower_bound,
    sufficient_range,
    tian_sufficient_range,
    tian_threshold,
)

__all__ = [
    "berman_constant",
    "berman_envelope",
    "berman_lower_bound",
    "berman_r_bound",
    "BoundReport",
    "BoundSource",
    "UpperBound",
    "bound_report",
    "cited_upper_bound",
    "SURFACE_DIMENSION",
    "TianInterval",
    "r_lower_bound",
    "sufficient_range",
    "tian_sufficient_range",
    "tian_threshold",
]
