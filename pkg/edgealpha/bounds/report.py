"""
界报告模块：汇总 Tian 区间、α 推出的 R 下界、Berman 下界与文献上界。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional

from edgealpha.bounds.berman import berman_r_bound
from edgealpha.bounds.tian import SURFACE_DIMENSION, TianInterval, tian_sufficient_range
from edgealpha.catalog import SurfaceConfig, SurfaceFamily
from utils.format_utils import format_rational


class BoundSource(str, Enum):
    """界的出处"""

    ALPHA = "alpha"
    BERMAN = "berman"
    SZEKELYHIDI = "szekelyhidi"
    CLASSICAL = "classical"


@dataclass(frozen=True)
class UpperBound:
    value: Fraction
    source: BoundSource = BoundSource.SZEKELYHIDI


@dataclass(frozen=True)
class BoundReport:
    """
    单个情形的 R(S,C) 界报告。

    r_lower 来自 α 判据（可证下界）；upper_bound 与 kahler_einstein_surface
    为引用结论，只作对照，不参与任何推导。
    """

    config: SurfaceConfig
    tian_interval: TianInterval
    r_lower: Fraction
    berman_lower: Fraction
    upper_bound: Optional[UpperBound] = None
    kahler_einstein_surface: bool = False

    def to_dict(self) -> Dict[str, object]:
        """精确有理数以字符串输出，供 JSON 发射"""
        return {
            "case_id": self.config.value,
            "tian_interval": str(self.tian_interval),
            "r_lower": format_rational(self.r_lower),
            "r_lower_source": BoundSource.ALPHA.value,
            "berman_lower": format_rational(self.berman_lower),
            "berman_lower_source": BoundSource.BERMAN.value,
            "upper_bound": format_rational(self.upper_bound.value) if self.upper_bound else None,
            "upper_bound_source": self.upper_bound.source.value if self.upper_bound else None,
            "kahler_einstein_surface": self.kahler_einstein_surface,
            "kahler_einstein_surface_source": BoundSource.CLASSICAL.value,
        }


def cited_upper_bound(config: SurfaceConfig) -> Optional[UpperBound]:
    """𝔽₁ 情形为 4/5；C 过 E_i∩L 的 7 次情形为 7/9；其余无"""
    if config.family is SurfaceFamily.HIRZEBRUCH_ONE:
        return UpperBound(Fraction(4, 5))
    if config is SurfaceConfig.DEG7_EDGE_POINT:
        return UpperBound(Fraction(7, 9))
    return None


def bound_report(config: SurfaceConfig) -> BoundReport:
    interval = tian_sufficient_range(config)
    return BoundReport(
        config=config,
        tian_interval=interval,
        r_lower=interval.upper,
        berman_lower=berman_r_bound(SURFACE_DIMENSION),
        upper_bound=cited_upper_bound(config),
        kahler_einstein_surface=config.kahler_einstein_surface,
    )
