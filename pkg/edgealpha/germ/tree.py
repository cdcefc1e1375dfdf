"""
无穷近点树模块：曲线芽消解树的邻近关系、分支重数迹，以及总变换重数与差异数递推。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple

from edgealpha.exceptions import GermStructureError, UsageError

ROOT = "ROOT"


@dataclass(frozen=True)
class InfinitelyNearPoint:
    """树中的一个点；parent 为 None 表示曲面上的原点 P"""

    id: str
    parent: Optional[str] = None
    satellite_of: Optional[str] = None


@dataclass(frozen=True)
class InfinitelyNearTree:
    """
    无穷近点树，点按拓扑序给出。

    不变量:
        - 恰有一个根点，父点总在子点之前出现
        - satellite_of 必须是祖父点或父点自身的卫星目标，使每个点至多邻近两个点
    """

    points: Tuple[InfinitelyNearPoint, ...]

    def __post_init__(self) -> None:
        points = tuple(self.points)
        object.__setattr__(self, "points", points)
        if not points:
            raise GermStructureError("无穷近点树不能为空")

        # 第一阶段：标识唯一性与拓扑序
        seen: Dict[str, InfinitelyNearPoint] = {}
        roots = 0
        for point in points:
            if point.id in seen or point.id == ROOT:
                raise GermStructureError(f"点标识重复或非法: {point.id!r}")
            if point.parent is None:
                roots += 1
                if point.satellite_of is not None:
                    raise GermStructureError(f"根点 {point.id!r} 不能是卫星点")
            elif point.parent not in seen:
                raise GermStructureError(f"点 {point.id!r} 的父点 {point.parent!r} 未在其之前出现")

            # 第二阶段：卫星关系合法性
            if point.satellite_of is not None and point.parent is not None:
                parent = seen[point.parent]
                allowed = {parent.parent, parent.satellite_of} - {None}
                if point.satellite_of not in allowed:
                    raise GermStructureError(
                        f"点 {point.id!r} 不可能邻近 {point.satellite_of!r}：它只能是 "
                        f"{sorted(allowed) or '无'} 的卫星点"
                    )
            seen[point.id] = point

        if roots != 1:
            raise GermStructureError(f"芽树必须恰有一个根点，实际为 {roots} 个")

        index = {point.id: position for position, point in enumerate(points)}
        object.__setattr__(self, "_index", index)

    # ==================== 结构查询 ====================

    @classmethod
    def chain(cls, length: int, prefix: str = "p") -> "InfinitelyNearTree":
        """长度为 length 的自由链 p1 → p2 → …"""
        if length < 1:
            raise UsageError("链长至少为 1")
        return cls(
            tuple(
                InfinitelyNearPoint(f"{prefix}{k}", None if k == 1 else f"{prefix}{k - 1}")
                for k in range(1, length + 1)
            )
        )

    @classmethod
    def cusp(cls) -> "InfinitelyNearTree":
        """尖点的极小消解树：p2 在 p1 上方，p3 为 p1 与 p2 的卫星点"""
        return cls(
            (
                InfinitelyNearPoint("p1"),
                InfinitelyNearPoint("p2", "p1"),
                InfinitelyNearPoint("p3", "p2", "p1"),
            )
        )

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(point.id for point in self.points)

    def __contains__(self, point_id: object) -> bool:
        return point_id in self._index

    def point(self, point_id: str) -> InfinitelyNearPoint:
        try:
            return self.points[self._index[point_id]]
        except KeyError as exc:
            raise GermStructureError(f"树中不存在点 {point_id!r}") from exc

    def proximate_to(self, point_id: str) -> Tuple[str, ...]:
        """point_id 所邻近的点：父点以及（若有）卫星目标"""
        point = self.point(point_id)
        targets = []
        if point.parent is not None:
            targets.append(point.parent)
        if point.satellite_of is not None:
            targets.append(point.satellite_of)
        return tuple(targets)

    def proximate_points(self, point_id: str) -> Tuple[str, ...]:
        """邻近于 point_id 的全部点"""
        return tuple(other for other in self.ids if point_id in self.proximate_to(other))


@dataclass(frozen=True)
class BranchTrace:
    """
    一条分支（或分支之和）在各无穷近点处的严格变换重数。

    mult 以 (点标识, 重数) 的有序元组存储，零重数被省略；label 标记其所属的整体分量。
    """

    mult: Tuple[Tuple[str, int], ...]
    label: str = ""

    def __post_init__(self) -> None:
        items = dict(self.mult)
        for point_id, value in items.items():
            if isinstance(value, bool) or not isinstance(value, int):
                raise GermStructureError(f"点 {point_id!r} 处的重数必须是整数，收到 {value!r}")
            if value < 0:
                raise GermStructureError(f"点 {point_id!r} 处的重数为负: {value}")
        normalized = tuple(sorted((k, v) for k, v in items.items() if v > 0))
        object.__setattr__(self, "mult", normalized)

    @classmethod
    def of(cls, mult: Mapping[str, int], label: str = "") -> "BranchTrace":
        return cls(tuple(mult.items()), label)

    @classmethod
    def along(cls, point_ids: Iterable[str], label: str = "") -> "BranchTrace":
        """经过给定各点、重数均为 1 的光滑分支"""
        return cls(tuple((point_id, 1) for point_id in point_ids), label)

    def at(self, point_id: str) -> int:
        return dict(self.mult).get(point_id, 0)

    @property
    def support(self) -> Tuple[str, ...]:
        return tuple(point_id for point_id, _ in self.mult)

    @property
    def is_zero(self) -> bool:
        return not self.mult

    def relabel(self, label: str) -> "BranchTrace":
        return BranchTrace(self.mult, label)

    def __add__(self, other: "BranchTrace") -> "BranchTrace":
        combined = dict(self.mult)
        for point_id, value in other.mult:
            combined[point_id] = combined.get(point_id, 0) + value
        return BranchTrace(tuple(combined.items()), self.label or other.label)


def validate_trace(tree: InfinitelyNearTree, trace: BranchTrace) -> None:
    """
    校验分支迹与树的相容性。

    异常:
        GermStructureError: 引用不存在的点、支集不闭于祖先、违反邻近不等式
    """
    # 第一阶段：标识存在性
    for point_id in trace.support:
        if point_id not in tree:
            raise GermStructureError(f"分支 {trace.label or '<unnamed>'} 引用了不存在的点 {point_id!r}")

    # 第二阶段：支集对祖先封闭
    for point_id in trace.support:
        parent = tree.point(point_id).parent
        if parent is not None and trace.at(parent) == 0:
            raise GermStructureError(
                f"分支 {trace.label or '<unnamed>'} 经过 {point_id!r} 却不经过其父点 {parent!r}"
            )

    # 第三阶段：邻近不等式 m_j ≥ Σ_{i 邻近 j} m_i
    for point_id in tree.ids:
        proximate_sum = sum(trace.at(other) for other in tree.proximate_points(point_id))
        if trace.at(point_id) < proximate_sum:
            raise GermStructureError(
                f"分支 {trace.label or '<unnamed>'} 在 {point_id!r} 处违反邻近不等式："
                f"{trace.at(point_id)} < {proximate_sum}"
            )


def total_multiplicities(tree: InfinitelyNearTree, trace: BranchTrace) -> Dict[str, int]:
    """
    总变换重数 v_k = m_k + Σ_{k 邻近 j} v_j，按拓扑序计算。

    示例:
        尖点树上的尖点分支 m=(2,1,1) 得到 v=(2,3,6)。
    """
    validate_trace(tree, trace)
    orders: Dict[str, int] = {}
    for point_id in tree.ids:
        orders[point_id] = trace.at(point_id) + sum(
            orders[target] for target in tree.proximate_to(point_id)
        )
    return orders


def discrepancies(tree: InfinitelyNearTree) -> Dict[str, int]:
    """a_k = 1 + Σ_{k 邻近 j} a_j"""
    values: Dict[str, int] = {}
    for point_id in tree.ids:
        values[point_id] = 1 + sum(values[target] for target in tree.proximate_to(point_id))
    return values


def intersection_multiplicity(tree: InfinitelyNearTree, first: BranchTrace, second: BranchTrace) -> int:
    """Noether 公式：局部相交数为各无穷近点处重数乘积之和"""
    validate_trace(tree, first)
    validate_trace(tree, second)
    return sum(first.at(point_id) * second.at(point_id) for point_id in tree.ids)


def lct_plain(tree: InfinitelyNearTree, trace: BranchTrace) -> Fraction:
    """
    约化芽的经典对数典范阈值 min_k (a_k + 1)/v_k，不做分量截断。

    异常:
        UsageError: 零分支
    """
    if trace.is_zero:
        raise UsageError("零分支没有对数典范阈值")
    orders = total_multiplicities(tree, trace)
    log_discrepancies = discrepancies(tree)
    return min(
        Fraction(log_discrepancies[point_id] + 1, orders[point_id])
        for point_id in tree.ids
        if orders[point_id] > 0
    )
