"""
爆破比较模块：相邻次数情形之间 α̂ 的逐点比较，以及同一次数内变体的偏序。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from edgealpha.catalog.configs import SurfaceConfig, SurfaceFamily
from edgealpha.catalog.formulas import alpha_hat
from edgealpha.exactmath import first_violation
from edgealpha.exceptions import UsageError

S = SurfaceConfig


class Ordering(str, Enum):
    LE = "≤"
    VIOLATED = "violated"


@dataclass(frozen=True)
class BlowupLink:
    """target 是在 source 上爆破 points 个点（位于 C 上）得到的情形"""

    source: SurfaceConfig
    target: SurfaceConfig
    points: int = 1
    center: str = "C 上的一般点"


@dataclass(frozen=True)
class BlowupComparison:
    link: BlowupLink
    ordering: Ordering
    exceptional: bool
    witness: Optional[Fraction] = None


def is_exceptional_link(source: SurfaceConfig, target: SurfaceConfig) -> bool:
    """两类已知例外：ℙ² 在拐点处爆破得到 F 相切的 𝔽₁，以及 ℙ¹×ℙ¹ 爆破到次数 7"""
    if source is S.DEG9 and target is S.F1_TANGENT:
        return True
    return source is S.DEG8_QUADRIC and target.degree == 7


def blowup_compare(source: SurfaceConfig, target: SurfaceConfig, link: Optional[BlowupLink] = None) -> BlowupComparison:
    """
    比较 α̂(source) ≤ α̂(target) 是否在 (0,1] 上处处成立。

    异常:
        UsageError: 次数不满足 degree(target) = degree(source) − k，或 ℙ² 与 ℙ¹×ℙ¹ 之间的链接
    """
    link = link or BlowupLink(source, target)
    if (link.source, link.target) != (source, target):
        raise UsageError("链接描述与比较的情形不一致")
    if link.points < 1 or target.degree != source.degree - link.points:
        raise UsageError(
            f"{source.value} → {target.value} 不是 {link.points} 点爆破：次数 {source.degree} → {target.degree}"
        )
    if target.family is SurfaceFamily.QUADRIC:
        raise UsageError("ℙ¹×ℙ¹ 不是任何曲面的爆破")

    witness = first_violation(alpha_hat(source), alpha_hat(target))
    ordering = Ordering.LE if witness is None else Ordering.VIOLATED
    return BlowupComparison(link, ordering, is_exceptional_link(source, target), witness)


def declared_links() -> List[BlowupLink]:
    """目录中声明的全部爆破链接"""
    inflection = "C 的拐点"
    return [
        BlowupLink(S.DEG9, S.F1_TANGENT, 1, inflection),
        BlowupLink(S.DEG9, S.F1_GENERAL),
        BlowupLink(S.DEG8_QUADRIC, S.DEG7_R_CONTACT2),
        BlowupLink(S.DEG8_QUADRIC, S.DEG7_L_TANGENT),
        BlowupLink(S.F1_TANGENT, S.DEG7_EDGE_POINT, 1, "F 与 C 的切点"),
        BlowupLink(S.F1_GENERAL, S.DEG7_L_TANGENT),
        BlowupLink(S.F1_GENERAL, S.DEG7_R_CONTACT3),
        BlowupLink(S.F1_GENERAL, S.DEG7_R_CONTACT2),
        BlowupLink(S.DEG7_EDGE_POINT, S.DEG6_LINE_POINT),
        BlowupLink(S.DEG7_L_TANGENT, S.DEG6_CONIC_TANGENT),
        BlowupLink(S.DEG7_R_CONTACT3, S.DEG6_CONIC_TANGENT),
        BlowupLink(S.DEG7_R_CONTACT2, S.DEG6_GENERIC),
        BlowupLink(S.DEG6_LINE_POINT, S.DEG5),
        BlowupLink(S.DEG6_CONIC_TANGENT, S.DEG5),
        BlowupLink(S.DEG6_GENERIC, S.DEG5),
        BlowupLink(S.DEG5, S.DEG4_LINE_POINT),
        BlowupLink(S.DEG5, S.DEG4_CONIC_PAIR),
        BlowupLink(S.DEG5, S.DEG4_GENERIC),
        BlowupLink(S.DEG4_LINE_POINT, S.DEG3_ECKARDT_ON_C),
        BlowupLink(S.DEG4_LINE_POINT, S.DEG3_LINE_CONIC_TANGENT),
        BlowupLink(S.DEG4_CONIC_PAIR, S.DEG3_CUSP_MEETS_C_ONCE),
        BlowupLink(S.DEG4_GENERIC, S.DEG3_ECKARDT_OFF_C),
        BlowupLink(S.DEG4_GENERIC, S.DEG3_GENERIC),
        BlowupLink(S.DEG3_ECKARDT_ON_C, S.DEG2_TACNODE_ON_C),
        BlowupLink(S.DEG3_LINE_CONIC_TANGENT, S.DEG2_TACNODE_ON_C),
        BlowupLink(S.DEG3_CUSP_MEETS_C_ONCE, S.DEG2_CUSP_ON_C),
        BlowupLink(S.DEG3_ECKARDT_OFF_C, S.DEG2_TACNODE_OFF_C),
        BlowupLink(S.DEG3_GENERIC, S.DEG2_TACNODE_OFF_C),
        BlowupLink(S.DEG3_GENERIC, S.DEG2_GENERIC),
        BlowupLink(S.DEG2_TACNODE_OFF_C, S.DEG1_NO_CUSPIDAL),
        BlowupLink(S.DEG2_CUSP_ON_C, S.DEG1_CUSPIDAL),
        BlowupLink(S.DEG2_GENERIC, S.DEG1_CUSPIDAL),
        BlowupLink(S.DEG9, S.DEG6_GENERIC, 3, "C 上三个一般点"),
    ]


def variant_order() -> List[Tuple[SurfaceConfig, SurfaceConfig]]:
    """同一次数内的变体偏序 (较小, 较大)：重合越深，α̂ 逐点越小"""
    return [
        (S.F1_TANGENT, S.F1_GENERAL),
        (S.DEG7_EDGE_POINT, S.DEG7_L_TANGENT),
        (S.DEG7_L_TANGENT, S.DEG7_R_CONTACT3),
        (S.DEG7_R_CONTACT3, S.DEG7_R_CONTACT2),
        (S.DEG6_LINE_POINT, S.DEG6_CONIC_TANGENT),
        (S.DEG6_CONIC_TANGENT, S.DEG6_GENERIC),
        (S.DEG4_LINE_POINT, S.DEG4_CONIC_PAIR),
        (S.DEG4_CONIC_PAIR, S.DEG4_GENERIC),
        (S.DEG3_ECKARDT_ON_C, S.DEG3_ECKARDT_OFF_C),
        (S.DEG3_ECKARDT_OFF_C, S.DEG3_GENERIC),
        (S.DEG3_ECKARDT_ON_C, S.DEG3_LINE_CONIC_TANGENT),
        (S.DEG3_LINE_CONIC_TANGENT, S.DEG3_CUSP_MEETS_C_ONCE),
        (S.DEG3_CUSP_MEETS_C_ONCE, S.DEG3_GENERIC),
        (S.DEG2_TACNODE_ON_C, S.DEG2_TACNODE_OFF_C),
        (S.DEG2_TACNODE_OFF_C, S.DEG2_GENERIC),
        (S.DEG2_TACNODE_ON_C, S.DEG2_CUSP_ON_C),
        (S.DEG2_CUSP_ON_C, S.DEG2_GENERIC),
        (S.DEG1_CUSPIDAL, S.DEG1_NO_CUSPIDAL),
    ]
