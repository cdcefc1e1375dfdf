"""
爆破塔不等式模块：沿光滑曲线 C 的无穷近点塔，回放非对数典范性的必要条件。

本模块只做单向的算术检验：给出哪些假设成立、哪些结论因此被断言，
从不自行断定对数典范性；对数典范性以芽引擎为准。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from edgealpha.exactmath import RationalLike, as_rational, check_beta
from edgealpha.exceptions import GermStructureError, UsageError
from edgealpha.germ import BOUNDARY_LABEL, WeightedGermConfig
from utils.format_utils import format_rational


@dataclass(frozen=True)
class ClauseResult:
    """单条断言：名称、假设文本、假设是否成立、结论文本、结论是否被断言"""

    name: str
    hypothesis: str
    hypothesis_holds: bool
    conclusion: str
    asserted: bool


@dataclass(frozen=True)
class TowerLedger:
    """C 在芽点处的系数 a 与 Ω 沿 C 的塔上的重数 m_0, m_1, …"""

    a: Fraction
    m: Tuple[Fraction, ...]


def _normalize(a: RationalLike, m: Sequence[RationalLike]) -> Tuple[Fraction, Tuple[Fraction, ...]]:
    a = as_rational(a)
    values = tuple(as_rational(value) for value in m)
    if a > 1:
        raise UsageError(f"需要 a ≤ 1，收到 a={format_rational(a)}")
    if a < 0:
        raise UsageError(f"a 必须非负，收到 {format_rational(a)}")
    if any(value < 0 for value in values):
        raise UsageError("重数序列必须非负")
    return a, values


def _padded(m: Tuple[Fraction, ...], length: int) -> Tuple[Fraction, ...]:
    return m + (Fraction(0),) * max(0, length - len(m))


def _partial(m: Tuple[Fraction, ...], k: int) -> Fraction:
    """S(k) = Σ_{i<k} m_i"""
    return sum(m[:k], Fraction(0))


def exceptional_coefficients(a: RationalLike, m: Sequence[RationalLike], n: int) -> List[Fraction]:
    """F_1, …, F_n 在 D^{S_n} 中的系数 k·a − k + Σ_{i<k} m_i"""
    a, values = _normalize(a, m)
    values = _padded(values, n)
    return [k * a - k + _partial(values, k) for k in range(1, n + 1)]


def skoda_check(mult: RationalLike) -> bool:
    """非对数典范的必要条件 mult_P(D) > 1"""
    return as_rational(mult) > 1


def adjunction_check(a: RationalLike, local_intersection: RationalLike) -> bool:
    """
    a ≤ 1 时非对数典范要求 mult_P(Ω·C) > 1；a > 1 时没有约束。

    返回:
        bool: True 表示非对数典范在此条件下仍未被排除
    """
    if as_rational(a) > 1:
        return True
    return as_rational(local_intersection) > 1


def transversal_pair_check(
    a1: RationalLike,
    a2: RationalLike,
    delta_mult: RationalLike,
    i1: RationalLike,
    i2: RationalLike,
) -> bool:
    """
    两条横截光滑曲线 C_1、C_2 与剩余部分 Δ 的不等式。

    mult_P(Δ) ≤ 1 时，非对数典范要求 mult_P(Δ·C_1) > 2(1−a_2) 或 mult_P(Δ·C_2) > 2(1−a_1)；
    mult_P(Δ) > 1 时该判据不适用，返回 True。
    """
    a1, a2 = as_rational(a1), as_rational(a2)
    if a1 < 0 or a2 < 0:
        raise UsageError("系数 a1、a2 必须非负")
    if as_rational(delta_mult) > 1:
        return True
    return as_rational(i1) > 2 * (1 - a2) or as_rational(i2) > 2 * (1 - a1)


def blowup_ledger_check(a: RationalLike, m: Sequence[RationalLike], n: int) -> List[ClauseResult]:
    """
    对给定的 (a, m, n) 计算爆破塔各条断言的假设与结论。

    参数:
        a: C 的系数，需 a ≤ 1
        m: m_0, m_1, …（不足部分补零）
        n: 塔的层数 n ≥ 1

    返回:
        List[ClauseResult]: 首条为基本条件 a + m_0 > 1，其后为 (i)–(vii)

    关键实现细节:
        - 第一阶段：基本条件；它不成立时 (S, aC+Ω) 必然对数典范，任何结论都不被断言
        - 第二阶段：逐条计算假设，结论仅在基本条件与本条假设同时成立时断言
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise UsageError(f"n 必须是正整数，收到 {n!r}")
    a, values = _normalize(a, m)
    values = _padded(values, n + 1)
    s_n = _partial(values, n)
    bound = n + 1 - n * a
    text_bound = format_rational(bound)

    # 第一阶段：基本条件
    gate = a + values[0] > 1
    results = [ClauseResult("base", "a + m_0 > 1", gate, "mult_P(Ω·C) > 1", gate)]

    # 第二阶段：(i)–(vii)
    coefficients = [k * a - k + _partial(values, k) for k in range(1, n + 1)]
    deep = n >= 2
    clauses = [
        (
            "i",
            "m_0 ≤ 1",
            values[0] <= 1,
            f"(S_1, D^{{S_1}}) 在 P_1 处非对数典范，且 mult_P(Ω·C) > {format_rational(2 - a)}",
        ),
        (
            "ii",
            f"某个 k ≤ {n} 使 F_k 的系数 ka−k+Σ_{{i<k}}m_i < 0",
            any(value < 0 for value in coefficients),
            f"(S_{n}, D^{{S_{n}}}) 沿 F_{n} 对数典范",
        ),
        (
            "iii",
            f"Σ_{{i<{n}}} m_i ≤ {text_bound}",
            s_n <= bound,
            f"F_{n} 上的非对数典范点（若存在）唯一",
        ),
        (
            "iv",
            f"(n+1)a + Σ_{{i≤{n}}} m_i > {n + 2}",
            (n + 1) * a + _partial(values, n + 1) > n + 2,
            f"mult_P(Ω·C) > {text_bound}",
        ),
        (
            "v",
            f"n ≥ 2，m_{n - 1} ≤ 1 且 Σ_{{i<{n}}} m_i ≤ {text_bound}",
            deep and values[n - 1] <= 1 and s_n <= bound,
            f"(S_{n}, D^{{S_{n}}}) 在 F_{n} 上除 P_{n} 与 F_{n}∩F_{n - 1} 外处处对数典范",
        ),
        (
            "vi",
            f"n ≥ 2 且 Σ_{{i<{n}}} m_i ≤ {format_rational(n - (n - 1) * a)}",
            deep and s_n <= n - (n - 1) * a,
            f"(S_{n}, D^{{S_{n}}}) 在 F_{n}∩F_{n - 1} 处对数典范",
        ),
        (
            "vii",
            f"n ≥ 2，Σ_{{i≤{n - 2}}} m_i ≤ {format_rational(n - (n - 1) * a)} "
            f"且 Σ_{{i≤{n - 3}}} m_i + 2m_{n - 2} ≤ {text_bound}",
            deep
            and _partial(values, n - 1) <= n - (n - 1) * a
            and _partial(values, n - 2) + 2 * values[n - 2] <= bound,
            f"(S_{n}, D^{{S_{n}}}) 在 F_{n}∩F_{n - 1} 处对数典范",
        ),
    ]
    for name, hypothesis, holds, conclusion in clauses:
        results.append(ClauseResult(name, hypothesis, holds, conclusion, gate and holds))
    return results


def small_multiplicity_bound(a: RationalLike, m0: RationalLike, n: int) -> Optional[Fraction]:
    """
    a ≤ 1 且 m_0 ≤ min{1, 1 + 1/n − na} 时，非对数典范推出 mult_P(Ω·C) > n+1−na。

    返回:
        Optional[Fraction]: 被断言的下界 n+1−na；假设不成立时为 None
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise UsageError(f"n 必须是正整数，收到 {n!r}")
    a, m0 = as_rational(a), as_rational(m0)
    if a > 1 or m0 > min(Fraction(1), 1 + Fraction(1, n) - n * a):
        return None
    return n + 1 - n * a


def four_blowup_corollary(a: RationalLike, m: Sequence[RationalLike]) -> Optional[Fraction]:
    """
    四次爆破推论：在其假设下断言的最强下界 mult_P(Ω·C) > 5−4a 或 > 4−3a。

    返回:
        Optional[Fraction]: 5−4a、4−3a，或在假设不成立时为 None
    """
    a, values = _normalize(a, m)
    m0, m1, m2, m3 = _padded(values, 4)[:4]
    if m0 > 1:
        return None
    first = 2 * m0 <= 3 - 2 * a or m0 + m1 <= 2 - a
    second = m0 + 2 * m1 <= 4 - 3 * a or m0 + m1 + m2 <= 3 - 2 * a
    if not (first and second):
        return None
    if m0 + m1 + 2 * m2 <= 5 - 4 * a or m0 + m1 + m2 + m3 <= 4 - 3 * a:
        return 5 - 4 * a
    return 4 - 3 * a


def _boundary_chain(config: WeightedGermConfig) -> List[str]:
    """C 的迹按树序排列的点列；C 必须光滑（每点重数 1）"""
    traces = [branch.trace for branch in config.fixed if branch.trace.label == BOUNDARY_LABEL]
    if not traces:
        raise UsageError(f"芽中没有标签为 {BOUNDARY_LABEL!r} 的固定分支")
    trace = traces[0]
    if any(trace.at(point_id) != 1 for point_id in trace.support):
        raise GermStructureError("边界分支在芽点处不光滑")
    return [point_id for point_id in config.tree.ids if trace.at(point_id) > 0]


def ledger_from_germ(config: WeightedGermConfig, beta: RationalLike, t: RationalLike) -> TowerLedger:
    """
    在 (β₀, t) 处沿 C 的点列提取 (a, m_0, m_1, …)。

    a 为 C 的总系数（固定部分加上可缩放部分中的 C），
    m_k 为 Ω = 其余固定分支 + tβ₀·其余可缩放分支 在 C 的第 k+1 个点处的重数。
    """
    value = check_beta(beta)
    scale = as_rational(t) * value
    if scale < 0:
        raise UsageError("t 必须非负")
    chain = _boundary_chain(config)

    a = Fraction(0)
    m = [Fraction(0)] * len(chain)
    weighted = [(branch.trace, branch.coefficient.at(value)) for branch in config.fixed]
    weighted += [(branch.trace, scale * branch.weight) for branch in config.scalable]
    for trace, coefficient in weighted:
        if trace.label == BOUNDARY_LABEL:
            a += coefficient
            continue
        for index, point_id in enumerate(chain):
            m[index] += coefficient * trace.at(point_id)
    return TowerLedger(a, tuple(m))
