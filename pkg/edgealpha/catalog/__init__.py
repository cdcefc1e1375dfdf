"""
目录模块：配置分类、显式 α̂ 公式、测试除子、引擎推导与爆破比较。
"""

from edgealpha.catalog.alpha import CaseResult, VerificationReport, alpha_engine, verify_case, verify_catalog
from edgealpha.catalog.blowups import (
    BlowupComparison,
    BlowupLink,
    Ordering,
    blowup_compare,
    declared_links,
    is_exceptional_link,
    variant_order,
)
from edgealpha.catalog.configs import SurfaceConfig, SurfaceFamily, all_configs, configs_of_degree
from edgealpha.catalog.divisors import Component, TestDivisor, test_divisors
from edgealpha.catalog.formulas import ALPHA_FORMULAS, alpha_hat, alpha_terms, perturbed

__all__ = [
    "CaseResult",
    "VerificationReport",
    "alpha_engine",
    "verify_case",
    "verify_catalog",
    "BlowupComparison",
    "BlowupLink",
    "Ordering",
    "blowup_compare",
    "declared_links",
    "is_exceptional_link",
    "variant_order",
    "SurfaceConfig",
    "SurfaceFamily",
    "all_configs",
    "configs_of_degree",
    "Component",
    "TestDivisor",
    "test_divisors",
    "ALPHA_FORMULAS",
    "alpha_hat",
    "alpha_terms",
    "perturbed",
]
