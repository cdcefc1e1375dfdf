"""
四次爆破重数账本：沿 C 的无穷近塔记录 x, x1, x2, x3，逐条检验四个障碍条件。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Tuple

from edgealpha.exactmath import BetaFraction, RationalLike, as_rational, check_beta, min_envelope, pointwise_le
from edgealpha.exceptions import UsageError
from utils.format_utils import format_rational


class Verdict(str, Enum):
    """OBSTRUCTED：账本数据与非对数典范矛盾；NOT_EXCLUDED：算术上无法排除"""

    OBSTRUCTED = "obstructed"
    NOT_EXCLUDED = "not-excluded"


@dataclass(frozen=True)
class MultiplicityLedger:
    """
    账本数据。

    不变量:
        - 0 ≤ x3 ≤ x2 ≤ x1 ≤ x ≤ 1 + a，a ≥ 0
        - 0 < β ≤ 1，λβ > 0，K² 为正整数
    """

    a: Fraction
    x: Fraction
    x1: Fraction
    x2: Fraction
    x3: Fraction
    lambda_beta: Fraction
    beta: Fraction
    k2: int

    def __post_init__(self) -> None:
        for name in ("a", "x", "x1", "x2", "x3", "lambda_beta"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        object.__setattr__(self, "beta", check_beta(self.beta))

        if self.a < 0:
            raise UsageError(f"a 必须非负，收到 {format_rational(self.a)}")
        if not 0 <= self.x3 <= self.x2 <= self.x1 <= self.x:
            raise UsageError(
                "重数沿塔必须非增且非负："
                f"x={format_rational(self.x)}, x1={format_rational(self.x1)}, "
                f"x2={format_rational(self.x2)}, x3={format_rational(self.x3)}"
            )
        if self.x > 1 + self.a:
            raise UsageError(f"x={format_rational(self.x)} 超过 1+a={format_rational(1 + self.a)}")
        if self.lambda_beta <= 0:
            raise UsageError("λβ 必须为正")
        if isinstance(self.k2, bool) or not isinstance(self.k2, int) or self.k2 <= 0:
            raise UsageError(f"K² 必须是正整数，收到 {self.k2!r}")


@dataclass(frozen=True)
class FourBlowupResult:
    conditions: Tuple[bool, bool, bool, bool]
    verdict: Verdict
    refinement_applies: bool

    @property
    def failing(self) -> Tuple[int, ...]:
        """不成立的条件编号（从 1 开始）"""
        return tuple(index + 1 for index, holds in enumerate(self.conditions) if not holds)


def four_blowup_conditions(ledger: MultiplicityLedger) -> FourBlowupResult:
    """
    逐条计算四个条件，并给出结论。

    关键实现细节:
        - 第一阶段：条件 (i)–(iv)，后三条各为两个不等式的“或”
        - 第二阶段：λβK² ≤ 1+4β 且四条全部成立，或 λβK² ≤ 1+3β 且前三条成立，则为 OBSTRUCTED
    """
    lb, b = ledger.lambda_beta, ledger.beta
    a, x, x1, x2, x3 = ledger.a, ledger.x, ledger.x1, ledger.x2, ledger.x3

    # 第一阶段：四个条件
    conditions = (
        lb * (a + x) <= 1,
        2 * lb * (a + x) - 2 * b <= 1 or lb * (a + x + x1) - b <= 1,
        lb * (a + x + 2 * x1) - 3 * b <= 1 or lb * (a + x + x1 + x2) - 2 * b <= 1,
        lb * (a + x + x1 + 2 * x2) - 4 * b <= 1 or lb * (a + x + x1 + x2 + x3) - 3 * b <= 1,
    )

    # 第二阶段：结论
    product = lb * ledger.k2
    refinement = product <= 1 + 3 * b
    obstructed = (all(conditions) and product <= 1 + 4 * b) or (all(conditions[:3]) and refinement)
    return FourBlowupResult(
        conditions=conditions,
        verdict=Verdict.OBSTRUCTED if obstructed else Verdict.NOT_EXCLUDED,
        refinement_applies=refinement,
    )


def refinement_holds_on_unit_interval(
    lambda_beta: BetaFraction,
    k2: int,
    slack: RationalLike = 3,
) -> bool:
    """
    符号判断 λβ(β)·K² ≤ 1 + slack·β 是否在整个 (0,1] 上成立。

    参数:
        lambda_beta: 作为 β 的分式给出的乘积 λβ
        k2: K²
        slack: β 的系数，默认 3
    """
    left = min_envelope([lambda_beta.scaled(k2)])
    right = min_envelope([BetaFraction(Fraction(1), as_rational(slack), Fraction(1), Fraction(0))])
    return pointwise_le(left, right)
