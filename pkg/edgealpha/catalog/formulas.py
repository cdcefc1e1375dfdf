"""
α̂ 公式表：每个情形的分段显式公式，按区间次序列出分式与内部断点。
"""

from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from edgealpha.catalog.configs import SurfaceConfig
from edgealpha.exactmath import BetaFraction, PiecewiseBetaFunction

ONE = BetaFraction.constant(1)


def _b(p: int, q: int, s: int) -> BetaFraction:
    """(p + qβ)/(sβ)"""
    return BetaFraction.over_beta(p, q, s)


def _bp(*values: str) -> Tuple[Fraction, ...]:
    return tuple(Fraction(value) for value in values)


# (区间次序的分式, 内部断点)
ALPHA_FORMULAS: Dict[SurfaceConfig, Tuple[Tuple[BetaFraction, ...], Tuple[Fraction, ...]]] = {
    SurfaceConfig.DEG9: ((ONE, _b(1, 3, 9), _b(1, 0, 3)), _bp("1/6", "2/3")),
    SurfaceConfig.DEG8_QUADRIC: ((ONE, _b(1, 2, 6)), _bp("1/4")),
    SurfaceConfig.F1_TANGENT: ((ONE, _b(1, 2, 8), _b(1, 0, 3)), _bp("1/6", "5/6")),
    SurfaceConfig.F1_GENERAL: ((ONE, _b(1, 1, 5), _b(1, 0, 3)), _bp("1/4", "2/3")),
    SurfaceConfig.DEG7_EDGE_POINT: ((ONE, _b(1, 1, 5), _b(1, 0, 3)), _bp("1/4", "2/3")),
    SurfaceConfig.DEG7_L_TANGENT: ((ONE, _b(1, 2, 6), _b(1, 0, 3)), _bp("1/4", "1/2")),
    SurfaceConfig.DEG7_R_CONTACT3: ((ONE, _b(1, 3, 7), _b(1, 0, 3)), _bp("1/4", "4/9")),
    SurfaceConfig.DEG7_R_CONTACT2: ((ONE, _b(1, 0, 3)), _bp("1/3")),
    SurfaceConfig.DEG6_LINE_POINT: ((ONE, _b(1, 1, 4)), _bp("1/3")),
    SurfaceConfig.DEG6_CONIC_TANGENT: ((ONE, _b(1, 2, 5), _b(1, 0, 2)), _bp("1/3", "3/4")),
    SurfaceConfig.DEG6_GENERIC: ((ONE, _b(1, 0, 2)), _bp("1/2")),
    SurfaceConfig.DEG5: ((ONE, _b(1, 0, 2)), _bp("1/2")),
    SurfaceConfig.DEG4_LINE_POINT: ((ONE, _b(1, 1, 3)), _bp("1/2")),
    SurfaceConfig.DEG4_CONIC_PAIR: ((ONE, _b(1, 2, 4), _b(2, 0, 3)), _bp("1/2", "5/6")),
    SurfaceConfig.DEG4_GENERIC: ((ONE, _b(2, 0, 3)), _bp("2/3")),
    SurfaceConfig.DEG3_ECKARDT_ON_C: ((ONE, _b(1, 1, 3)), _bp("1/2")),
    SurfaceConfig.DEG3_ECKARDT_OFF_C: ((ONE, _b(2, 0, 3)), _bp("2/3")),
    SurfaceConfig.DEG3_LINE_CONIC_TANGENT: ((ONE, _b(2, 1, 4)), _bp("2/3")),
    SurfaceConfig.DEG3_CUSP_MEETS_C_ONCE: ((ONE, _b(2, 3, 6), _b(3, 0, 4)), _bp("2/3", "5/6")),
    SurfaceConfig.DEG3_GENERIC: ((ONE, _b(3, 0, 4)), _bp("3/4")),
    SurfaceConfig.DEG2_TACNODE_ON_C: ((ONE, _b(2, 1, 4)), _bp("2/3")),
    SurfaceConfig.DEG2_TACNODE_OFF_C: ((ONE, _b(3, 0, 4)), _bp("3/4")),
    SurfaceConfig.DEG2_CUSP_ON_C: ((ONE, _b(3, 2, 6)), _bp("3/4")),
    SurfaceConfig.DEG2_GENERIC: ((ONE, _b(5, 0, 6)), _bp("5/6")),
    SurfaceConfig.DEG1_NO_CUSPIDAL: ((ONE,), ()),
    SurfaceConfig.DEG1_CUSPIDAL: ((ONE, _b(5, 0, 6)), _bp("5/6")),
}


def alpha_terms(config: SurfaceConfig) -> List[BetaFraction]:
    """α̂ = min{...} 中出现的分式"""
    return list(ALPHA_FORMULAS[config][0])


def alpha_hat(config: SurfaceConfig) -> PiecewiseBetaFunction:
    """情形 config 的 α̂，按显式分段构造（断点与分式逐一对应）"""
    fractions, breakpoints = ALPHA_FORMULAS[config]
    return PiecewiseBetaFunction.from_breakpoints(fractions, breakpoints)


def perturbed(config: SurfaceConfig, offset: Sequence[int] = (0, 1, 0)) -> PiecewiseBetaFunction:
    """
    把最后一段分式的 (p, q, s) 加上 offset 得到的扰动公式，用作验证的反例。

    扰动后的分式与前一段在新的交点处衔接，保持连续性。
    """
    from edgealpha.exactmath import min_envelope

    fractions = list(ALPHA_FORMULAS[config][0])
    last = fractions[-1]
    fractions[-1] = BetaFraction(last.p + offset[0], last.q + offset[1], last.r, last.s + offset[2])
    return min_envelope(fractions)
