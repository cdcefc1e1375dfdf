"""
标准芽构造模块：按名称生成目录中反复出现的局部奇点配置。

C 的系数总是固定为 1 − β；各分支的标签即其在整体分解中的分量名。
"""

from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence

from edgealpha.exceptions import GermStructureError, UsageError
from edgealpha.germ.engine import FixedBranch, LinearCoefficient, ScalableBranch, WeightedGermConfig
from edgealpha.germ.tree import BranchTrace, InfinitelyNearTree, intersection_multiplicity

BOUNDARY_LABEL = "C"


class GermKind(str, Enum):
    """标准芽类型"""

    TRANSVERSE_LINES = "transverse_lines"
    ECKARDT = "eckardt"
    TANGENT_PAIR = "tangent_pair"
    TACNODE = "tacnode"
    CUSP = "cusp"
    OSCULATING = "osculating"
    ANTICANONICAL_SELF = "anticanonical_self"


def _weights(params: Mapping[str, Any], expected: Optional[int] = None) -> List[int]:
    weights = list(params.get("weights", ()))
    if expected is not None and len(weights) != expected:
        raise UsageError(f"需要 {expected} 个权重，收到 {len(weights)} 个")
    for weight in weights:
        if isinstance(weight, bool) or not isinstance(weight, int) or weight <= 0:
            raise UsageError(f"权重必须是正整数，收到 {weight!r}")
    return weights


def _labels(params: Mapping[str, Any], count: int, default_prefix: str) -> List[str]:
    labels = list(params.get("labels") or [f"{default_prefix}{k}" for k in range(1, count + 1)])
    if len(labels) != count:
        raise UsageError(f"需要 {count} 个分支标签，收到 {len(labels)} 个")
    if BOUNDARY_LABEL in labels:
        raise UsageError(f"标签 {BOUNDARY_LABEL!r} 保留给边界曲线")
    return labels


def _boundary(trace_points: Sequence[str]) -> FixedBranch:
    return FixedBranch(BranchTrace.along(trace_points, BOUNDARY_LABEL), LinearCoefficient.one_minus_beta())


def _build(
    tree: InfinitelyNearTree,
    scalable: Sequence[ScalableBranch],
    boundary_points: Optional[Sequence[str]],
) -> WeightedGermConfig:
    fixed = (_boundary(boundary_points),) if boundary_points is not None else ()
    return WeightedGermConfig(tree, fixed, tuple(scalable))


def _transverse_lines(params: Mapping[str, Any]) -> WeightedGermConfig:
    weights = _weights(params)
    count = params.get("k", len(weights))
    if count != len(weights) or count < 1:
        raise UsageError(f"k={count} 与权重个数 {len(weights)} 不一致")
    labels = _labels(params, count, "L")
    tree = InfinitelyNearTree.chain(1)
    branches = [
        ScalableBranch(BranchTrace.along(["p1"], label), weight)
        for label, weight in zip(labels, weights)
    ]
    return _build(tree, branches, ["p1"] if params.get("with_fixed_C", False) else None)


def _eckardt(params: Mapping[str, Any]) -> WeightedGermConfig:
    _weights(params, 3)
    return _transverse_lines(params)


def _tangent_pair(params: Mapping[str, Any]) -> WeightedGermConfig:
    contact = params.get("contact", 2)
    if isinstance(contact, bool) or not isinstance(contact, int) or contact < 2:
        raise UsageError(f"相切对的接触阶必须是 ≥ 2 的整数，收到 {contact!r}")
    weights = _weights(params, 2)
    labels = _labels(params, 2, "T")
    tree = InfinitelyNearTree.chain(contact)
    chain = list(tree.ids)
    branches = [
        ScalableBranch(BranchTrace.along(chain, label), weight)
        for label, weight in zip(labels, weights)
    ]
    boundary = None
    if params.get("with_fixed_C", False):
        boundary = chain[:1] if params.get("C_transverse", True) else chain[:2]
    return _build(tree, branches, boundary)


def _tacnode(params: Mapping[str, Any]) -> WeightedGermConfig:
    merged = dict(params)
    merged.setdefault("weights", (1, 1))
    merged["contact"] = 2
    merged["C_transverse"] = True
    return _tangent_pair(merged)


def _cusp(params: Mapping[str, Any]) -> WeightedGermConfig:
    weight = params.get("weight", 1)
    if isinstance(weight, bool) or not isinstance(weight, int) or weight <= 0:
        raise UsageError(f"尖点权重必须是正整数，收到 {weight!r}")
    label = (params.get("labels") or ["Z"])[0]
    tree = InfinitelyNearTree.cusp()
    cusp_branch = BranchTrace.of({"p1": 2, "p2": 1, "p3": 1}, label)
    if not params.get("with_fixed_C", False):
        return _build(tree, [ScalableBranch(cusp_branch, weight)], None)

    # 光滑曲线与尖点的局部相交数只能是 2（横截切锥）或 3（沿切锥）
    contact = params.get("C_contact", 2)
    if contact not in (2, 3):
        raise GermStructureError(
            f"光滑曲线 C 与尖点的局部相交数只能为 2 或 3，收到 {contact!r}"
        )
    boundary_points = ["p1"] if contact == 2 else ["p1", "p2"]
    config = _build(tree, [ScalableBranch(cusp_branch, weight)], boundary_points)

    budget = params.get("C_intersection")
    if budget is not None:
        local = intersection_multiplicity(tree, config.fixed[0].trace, cusp_branch)
        if local > budget:
            raise GermStructureError(
                f"C 与尖点曲线的局部相交数 {local} 超过整体相交数 {budget}"
            )
    return config


def _osculating(params: Mapping[str, Any]) -> WeightedGermConfig:
    contact = params.get("contact", 2)
    if isinstance(contact, bool) or not isinstance(contact, int) or contact < 2:
        raise UsageError(f"密切接触阶必须是 ≥ 2 的整数，收到 {contact!r}")
    tangent_weights = _weights({"weights": params.get("tangent_weights", ())})
    transverse_weights = _weights({"weights": params.get("transverse_weights", ())})
    if not tangent_weights and not transverse_weights:
        raise UsageError("密切芽至少需要一条可缩放分支")
    labels = _labels(params, len(tangent_weights) + len(transverse_weights), "B")

    tree = InfinitelyNearTree.chain(contact)
    chain = list(tree.ids)
    branches = [
        ScalableBranch(BranchTrace.along(chain, label), weight)
        for label, weight in zip(labels, tangent_weights)
    ]
    branches.extend(
        ScalableBranch(BranchTrace.along(chain[:1], label), weight)
        for label, weight in zip(labels[len(tangent_weights):], transverse_weights)
    )
    return _build(tree, branches, chain)


def _anticanonical_self(params: Mapping[str, Any]) -> WeightedGermConfig:
    tree = InfinitelyNearTree.chain(1)
    boundary = _boundary(["p1"])
    return WeightedGermConfig(tree, (boundary,), (ScalableBranch(boundary.trace, 1),))


_BUILDERS = {
    GermKind.TRANSVERSE_LINES: _transverse_lines,
    GermKind.ECKARDT: _eckardt,
    GermKind.TANGENT_PAIR: _tangent_pair,
    GermKind.TACNODE: _tacnode,
    GermKind.CUSP: _cusp,
    GermKind.OSCULATING: _osculating,
    GermKind.ANTICANONICAL_SELF: _anticanonical_self,
}


def standard_germ(kind: str, params: Optional[Mapping[str, Any]] = None, **overrides: Any) -> WeightedGermConfig:
    """
    按名称构造标准芽。

    参数:
        kind: GermKind 的取值，例如 "eckardt"、"cusp"
        params: 参数字典；也可直接以关键字参数传入
            - transverse_lines: weights, with_fixed_C, [k], [labels]
            - eckardt: weights(3 个), with_fixed_C, [labels]
            - tangent_pair: contact, weights(2 个), with_fixed_C, [C_transverse], [labels]
            - tacnode: [weights], with_fixed_C, [labels]；C 横截于公共切线
            - cusp: weight, with_fixed_C, [C_contact ∈ {2,3}], [C_intersection], [labels]
            - osculating: contact, tangent_weights, transverse_weights, [labels]；总带固定 C
            - anticanonical_self: 无参数；B = C

    返回:
        WeightedGermConfig: C 的系数固定为 1 − β

    异常:
        UsageError: 未知类型或参数越界
        GermStructureError: 参数描述的几何不可能（如 C 与尖点的局部相交数为 1）

    示例:
        standard_germ("eckardt", weights=(1, 1, 1), with_fixed_C=True) 的阈值为 (1+β)/(3β)
    """
    try:
        germ_kind = GermKind(kind)
    except ValueError as exc:
        known = ", ".join(item.value for item in GermKind)
        raise UsageError(f"未知芽类型 {kind!r}，可选: {known}") from exc

    merged: Dict[str, Any] = dict(params or {})
    merged.update(overrides)
    return _BUILDERS[germ_kind](merged)
