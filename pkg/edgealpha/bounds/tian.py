"""
Tian 判据模块：α̂ > n/(n+1) 的最大初始区间及由此得到的 R(S,C) 下界。
"""

from dataclasses import dataclass
from fractions import Fraction

from edgealpha.catalog import SurfaceConfig, alpha_hat
from edgealpha.exactmath import IDENTICAL, BetaFraction, PiecewiseBetaFunction, crossing_points
from edgealpha.exceptions import DomainError
from utils.format_utils import format_rational

SURFACE_DIMENSION = 2


@dataclass(frozen=True)
class TianInterval:
    """区间 (0, upper) 或 (0, upper]；upper 即 sup{β : α̂(β) > 2/3}"""

    upper: Fraction
    includes_upper: bool = False

    def __contains__(self, beta: Fraction) -> bool:
        return 0 < beta < self.upper or (self.includes_upper and beta == self.upper)

    def __str__(self) -> str:
        return f"(0, {format_rational(self.upper)}{']' if self.includes_upper else ')'}"


def tian_threshold(dimension: int = SURFACE_DIMENSION) -> Fraction:
    return Fraction(dimension, dimension + 1)


def sufficient_range(function: PiecewiseBetaFunction, threshold: Fraction) -> TianInterval:
    """
    非增连续函数 f 满足 f > threshold 的最大初始区间。

    关键实现细节:
        - 第一阶段：f(1) > threshold 时为整个 (0,1]
        - 第二阶段：否则定位第一个右端点值 ≤ threshold 的分段，求其与常数的交点
    """
    if not function.is_nonincreasing():
        raise DomainError("Tian 区间只对非增函数定义")

    # 第一阶段：全区间
    if function.evaluate(1) > threshold:
        return TianInterval(Fraction(1), includes_upper=True)

    # 第二阶段：第一个降到阈值以下的分段
    level = BetaFraction.constant(threshold)
    for piece in function.pieces:
        if piece.fraction.value_at(piece.hi) > threshold:
            continue
        points = crossing_points(piece.fraction, level)
        if points is IDENTICAL:
            return TianInterval(piece.lo)
        inside = [point for point in points if piece.lo < point <= piece.hi]
        # 分段在左端点处已不高于阈值
        if not inside:
            return TianInterval(piece.lo)
        return TianInterval(min(inside))
    raise DomainError("未找到阈值交点")


def tian_sufficient_range(config: SurfaceConfig) -> TianInterval:
    """α̂(config) > 2/3 的最大初始区间"""
    return sufficient_range(alpha_hat(config), tian_threshold())


def r_lower_bound(config: SurfaceConfig) -> Fraction:
    """Tian 区间的右端点，即 α 推出的 R(S,C) 下界"""
    return tian_sufficient_range(config).upper
