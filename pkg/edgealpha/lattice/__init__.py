"""
格模块：del Pezzo 曲面的 Picard 格运算与低次有理曲线类枚举。
"""

from edgealpha.lattice.enumeration import enumerate_rational_classes, hyperplane_range
from edgealpha.lattice.pic_class import (
    QUADRIC_DEGREE,
    PicClass,
    anticanonical,
    conic_through,
    exceptional,
    gram_matrix,
    hyperplane,
    intersect,
    line_through,
    plane_curve_class,
    quadric_class,
)

__all__ = [
    "enumerate_rational_classes",
    "hyperplane_range",
    "QUADRIC_DEGREE",
    "PicClass",
    "anticanonical",
    "conic_through",
    "exceptional",
    "gram_matrix",
    "hyperplane",
    "intersect",
    "line_through",
    "plane_curve_class",
    "quadric_class",
]
