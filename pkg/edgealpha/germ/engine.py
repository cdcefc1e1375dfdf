"""
对数典范阈值引擎：带 β 线性系数的加权芽配置，及其关于缩放参数 t 的阈值求解。
"""

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from edgealpha.exactmath import (
    BetaFraction,
    PiecewiseBetaFunction,
    RationalLike,
    as_rational,
    check_beta,
    min_envelope,
)
from edgealpha.exceptions import FixedPartNotLcError, GermStructureError, UnboundedThresholdError, UsageError
from edgealpha.germ.tree import (
    BranchTrace,
    InfinitelyNearTree,
    discrepancies,
    total_multiplicities,
    validate_trace,
)
from utils.format_utils import format_rational
from utils.logging_utils import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class LinearCoefficient:
    """固定分支的系数 c(β) = c0 + c1·β"""

    c0: Fraction
    c1: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "c0", as_rational(self.c0))
        object.__setattr__(self, "c1", as_rational(self.c1))

    @classmethod
    def one_minus_beta(cls) -> "LinearCoefficient":
        return cls(Fraction(1), Fraction(-1))

    def at(self, beta: Fraction) -> Fraction:
        return self.c0 + self.c1 * beta

    def __str__(self) -> str:
        return f"{format_rational(self.c0)}{'+' if self.c1 >= 0 else '-'}{format_rational(abs(self.c1))}β"


@dataclass(frozen=True)
class FixedBranch:
    trace: BranchTrace
    coefficient: LinearCoefficient


@dataclass(frozen=True)
class ScalableBranch:
    trace: BranchTrace
    weight: int


@dataclass(frozen=True)
class WeightedGermConfig:
    """
    局部边界除子 Σ c_i(β)B_i + tβ·Σ n_j B_j。

    不变量:
        - 每个固定系数在 β ∈ [0,1] 两端满足 0 ≤ c ≤ 1（线性，故端点检验即可）
        - 可缩放列表非空，权重为正整数
        - 同一分支迹可以同时出现在两个列表中（B ⊇ C 的情形）
    """

    tree: InfinitelyNearTree
    fixed: Tuple[FixedBranch, ...]
    scalable: Tuple[ScalableBranch, ...]

    def __post_init__(self) -> None:
        fixed = tuple(self.fixed)
        scalable = tuple(self.scalable)
        object.__setattr__(self, "fixed", fixed)
        object.__setattr__(self, "scalable", scalable)

        # 第一阶段：可缩放部分
        if not scalable:
            raise UsageError("可缩放分支列表不能为空")
        for branch in scalable:
            if isinstance(branch.weight, bool) or not isinstance(branch.weight, int) or branch.weight <= 0:
                raise UsageError(f"分支 {branch.trace.label or '<unnamed>'} 的权重必须是正整数")
            validate_trace(self.tree, branch.trace)

        # 第二阶段：固定部分系数范围
        for branch in fixed:
            validate_trace(self.tree, branch.trace)
            for endpoint in (Fraction(0), Fraction(1)):
                value = branch.coefficient.at(endpoint)
                if not 0 <= value <= 1:
                    raise GermStructureError(
                        f"固定分支 {branch.trace.label or '<unnamed>'} 的系数 {branch.coefficient} "
                        f"在 β={endpoint} 处取值 {format_rational(value)}，超出 [0,1]"
                    )

    def fixed_coefficient_of(self, trace: BranchTrace) -> Optional[LinearCoefficient]:
        """若该分支迹也在固定列表中，返回其系数（多次出现时累加）"""
        matches = [branch.coefficient for branch in self.fixed if branch.trace == trace]
        if not matches:
            return None
        return LinearCoefficient(sum(c.c0 for c in matches), sum(c.c1 for c in matches))

    def branch(self, label: str) -> BranchTrace:
        """按标签查找分支迹（先查固定列表）"""
        for trace in [b.trace for b in self.fixed] + [b.trace for b in self.scalable]:
            if trace.label == label:
                return trace
        raise UsageError(f"芽中不存在标签为 {label!r} 的分支")


@dataclass(frozen=True)
class _Orders:
    log_discrepancy: Dict[str, int]
    fixed_constant: Dict[str, Fraction]
    fixed_linear: Dict[str, Fraction]
    scalable: Dict[str, int]


def _collect_orders(config: WeightedGermConfig) -> _Orders:
    """汇总每个点处的差异数、固定部分阶（按 c0、c1 拆分）和可缩放部分阶"""
    tree = config.tree
    fixed_constant = {point_id: Fraction(0) for point_id in tree.ids}
    fixed_linear = {point_id: Fraction(0) for point_id in tree.ids}
    scalable = {point_id: 0 for point_id in tree.ids}

    for branch in config.fixed:
        orders = total_multiplicities(tree, branch.trace)
        for point_id, order in orders.items():
            fixed_constant[point_id] += branch.coefficient.c0 * order
            fixed_linear[point_id] += branch.coefficient.c1 * order
    for branch in config.scalable:
        orders = total_multiplicities(tree, branch.trace)
        for point_id, order in orders.items():
            scalable[point_id] += branch.weight * order

    return _Orders(discrepancies(tree), fixed_constant, fixed_linear, scalable)


def _aggregated_scalable(config: WeightedGermConfig) -> "OrderedDict[BranchTrace, int]":
    weights: "OrderedDict[BranchTrace, int]" = OrderedDict()
    for branch in config.scalable:
        weights[branch.trace] = weights.get(branch.trace, 0) + branch.weight
    return weights


def _check_fixed_part(config: WeightedGermConfig, orders: _Orders) -> None:
    """固定部分必须在 β ∈ [0,1] 上处处对数典范（线性，检验两端）"""
    for point_id in config.tree.ids:
        bound = orders.log_discrepancy[point_id] + 1
        for endpoint in (Fraction(0), Fraction(1)):
            value = orders.fixed_constant[point_id] + orders.fixed_linear[point_id] * endpoint
            if value > bound:
                raise FixedPartNotLcError(
                    f"固定部分在点 {point_id!r} 处非对数典范：β={endpoint} 时阶 "
                    f"{format_rational(value)} > {bound}"
                )


def threshold_constraints(config: WeightedGermConfig) -> List[BetaFraction]:
    """
    阈值 t 的全部约束分式。

    返回:
        List[BetaFraction]: 例外约束与分量约束

    关键实现细节:
        - 第一阶段：计算各点差异数与总变换阶
        - 第二阶段：校验固定部分对数典范
        - 第三阶段：例外约束 t ≤ (a_k + 1 − Σ c_i(β) v_k(B_i)) / (β N_k)
        - 第四阶段：分量约束 t ≤ (1 − c(β)) / (nβ)
    """
    # 第一阶段：阶的汇总
    orders = _collect_orders(config)

    # 第二阶段：固定部分
    _check_fixed_part(config, orders)

    # 第三阶段：例外约束
    constraints: List[BetaFraction] = []
    for point_id in config.tree.ids:
        scalable_order = orders.scalable[point_id]
        if scalable_order == 0:
            continue
        constraints.append(
            BetaFraction.over_beta(
                orders.log_discrepancy[point_id] + 1 - orders.fixed_constant[point_id],
                -orders.fixed_linear[point_id],
                scalable_order,
            )
        )
    if not constraints:
        raise UnboundedThresholdError("可缩放部分在芽的每个点上阶均为零，阈值无上界")

    # 第四阶段：分量约束，不经过芽点的分支不参与
    for trace, weight in _aggregated_scalable(config).items():
        if trace.is_zero:
            continue
        coefficient = config.fixed_coefficient_of(trace) or LinearCoefficient(Fraction(0))
        constraints.append(BetaFraction.over_beta(1 - coefficient.c0, -coefficient.c1, weight))

    return constraints


def lct_in_t(config: WeightedGermConfig) -> PiecewiseBetaFunction:
    """
    sup{t : (S, Σ c_i(β)B_i + tβ Σ n_j B_j) 在芽处对数典范}，作为 β 的分段函数。

    不与全局上界 1 取最小值。

    异常:
        FixedPartNotLcError: 固定部分本身非对数典范
        UnboundedThresholdError: 可缩放部分不经过任何点
    """
    constraints = threshold_constraints(config)
    logger.debug("芽阈值：%d 个点，%d 条约束", len(config.tree.points), len(constraints))
    return min_envelope(constraints)


def _specialized_terms(config: WeightedGermConfig, beta: Fraction):
    """在固定 β 下逐点给出 (固定部分阶, 可缩放部分阶, 上界)，以及分量项 (c, n)"""
    tree = config.tree
    log_discrepancy = discrepancies(tree)
    fixed_orders = {point_id: Fraction(0) for point_id in tree.ids}
    scalable_orders = {point_id: 0 for point_id in tree.ids}
    for branch in config.fixed:
        value = branch.coefficient.at(beta)
        for point_id, order in total_multiplicities(tree, branch.trace).items():
            fixed_orders[point_id] += value * order
    for branch in config.scalable:
        for point_id, order in total_multiplicities(tree, branch.trace).items():
            scalable_orders[point_id] += branch.weight * order

    exceptional = [
        (fixed_orders[point_id], scalable_orders[point_id], log_discrepancy[point_id] + 1)
        for point_id in tree.ids
    ]
    components = []
    for trace, weight in _aggregated_scalable(config).items():
        if trace.is_zero:
            continue
        coefficient = config.fixed_coefficient_of(trace)
        components.append((coefficient.at(beta) if coefficient else Fraction(0), weight))
    return exceptional, components


def lct_at(config: WeightedGermConfig, beta: RationalLike) -> Fraction:
    """
    在给定 β₀ 处直接求阈值，所有系数先数值特化（与 lct_in_t 相互独立的求解路径）。

    异常:
        FixedPartNotLcError: 特化后固定部分非对数典范
        UnboundedThresholdError: 可缩放部分不经过任何点
    """
    value = check_beta(beta)
    exceptional, components = _specialized_terms(config, value)

    bounds = []
    for fixed_order, scalable_order, bound in exceptional:
        if fixed_order > bound:
            raise FixedPartNotLcError(f"β={format_rational(value)} 时固定部分非对数典范")
        if scalable_order > 0:
            bounds.append((bound - fixed_order) / (value * scalable_order))
    if not bounds:
        raise UnboundedThresholdError("可缩放部分在芽的每个点上阶均为零，阈值无上界")
    bounds.extend((1 - coefficient) / (value * weight) for coefficient, weight in components)
    return min(bounds)


def is_log_canonical(config: WeightedGermConfig, beta: RationalLike, t: RationalLike) -> bool:
    """判断 (S, Σ c_i(β₀)B_i + tβ₀ Σ n_j B_j) 在芽处是否对数典范"""
    value = check_beta(beta)
    scale = as_rational(t) * value
    if scale < 0:
        raise UsageError("t 必须非负")
    exceptional, components = _specialized_terms(config, value)
    if any(fixed + scale * scalable > bound for fixed, scalable, bound in exceptional):
        return False
    return all(coefficient + scale * weight <= 1 for coefficient, weight in components)


def scaled_weights(config: WeightedGermConfig, factor: int) -> WeightedGermConfig:
    """所有可缩放权重乘以正整数 factor"""
    if factor <= 0:
        raise UsageError("放缩因子必须为正整数")
    return WeightedGermConfig(
        config.tree,
        config.fixed,
        tuple(ScalableBranch(branch.trace, branch.weight * factor) for branch in config.scalable),
    )
