"""
芽模块：无穷近点树、邻近关系递推与对数典范阈值引擎。
"""

from edgealpha.germ.engine import (
    FixedBranch,
    LinearCoefficient,
    ScalableBranch,
    WeightedGermConfig,
    is_log_canonical,
    lct_at,
    lct_in_t,
    scaled_weights,
    threshold_constraints,
)
from edgealpha.germ.germ_file import dump_germ_document, load_germ_file, parse_germ_document
from edgealpha.germ.standard import BOUNDARY_LABEL, GermKind, standard_germ
from edgealpha.germ.tree import (
    ROOT,
    BranchTrace,
    InfinitelyNearPoint,
    InfinitelyNearTree,
    discrepancies,
    intersection_multiplicity,
    lct_plain,
    total_multiplicities,
    validate_trace,
)

__all__ = [
    "FixedBranch",
    "LinearCoefficient",
    "ScalableBranch",
    "WeightedGermConfig",
    "is_log_canonical",
    "lct_at",
    "lct_in_t",
    "scaled_weights",
    "threshold_constraints",
    "dump_germ_document",
    "load_germ_file",
    "parse_germ_document",
    "BOUNDARY_LABEL",
    "GermKind",
    "standard_germ",
    "ROOT",
    "BranchTrace",
    "InfinitelyNearPoint",
    "InfinitelyNearTree",
    "discrepancies",
    "intersection_multiplicity",
    "lct_plain",
    "total_multiplicities",
    "validate_trace",
]
