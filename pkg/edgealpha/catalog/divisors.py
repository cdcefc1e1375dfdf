"""
测试除子模块：每个情形下用于求 α̂ 的反典范除子分解及其局部芽。

每个测试除子同时记录整体分解 Σ n_i B_i ∼ −K 与芽点处的局部配置；
不经过芽点的分量只贡献分量约束 t ≤ 1/(nβ)。
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from edgealpha.catalog.configs import SurfaceConfig
from edgealpha.exactmath import BetaFraction, PiecewiseBetaFunction, min_envelope, pointwise_min
from edgealpha.exceptions import GermStructureError, UsageError
from edgealpha.germ import (
    BOUNDARY_LABEL,
    WeightedGermConfig,
    intersection_multiplicity,
    lct_in_t,
    standard_germ,
)
from edgealpha.lattice import (
    PicClass,
    anticanonical,
    exceptional,
    hyperplane,
    line_through,
    plane_curve_class,
    quadric_class,
)

MAX_ANTICANONICAL_DEGREE = 3


@dataclass(frozen=True)
class Component:
    """整体分解中的一个分量"""

    name: str
    pic_class: PicClass
    weight: int


@dataclass(frozen=True)
class TestDivisor:
    """
    测试除子：整体分解 + 芽点处的局部配置。

    不变量:
        - Σ weight·class = −K
        - 除 C 外每个分量满足 −K·B_i ≤ 3
        - 芽中可缩放分支的权重等于对应分量的权重
        - C 与每个分量在芽点的局部相交数不超过整体相交数 −K·B_i
    """

    __test__ = False

    description: str
    components: Tuple[Component, ...]
    germ: WeightedGermConfig
    includes_C_globally: bool = False

    def __post_init__(self) -> None:
        components = tuple(self.components)
        object.__setattr__(self, "components", components)
        if not components:
            raise UsageError(f"{self.description}: 分解不能为空")
        by_name = {component.name: component for component in components}
        minus_k = anticanonical(components[0].pic_class.degree_of_surface, components[0].pic_class.quadric)

        # 第一阶段：整体线性等价
        total = components[0].weight * components[0].pic_class
        for component in components[1:]:
            total = total + component.weight * component.pic_class
        if total != minus_k:
            raise GermStructureError(f"{self.description}: Σ n_i B_i = {total} ≠ −K = {minus_k}")

        # 第二阶段：分量的反典范次数
        for component in components:
            if component.name == BOUNDARY_LABEL:
                continue
            degree = minus_k.intersect(component.pic_class)
            if not 1 <= degree <= MAX_ANTICANONICAL_DEGREE:
                raise GermStructureError(
                    f"{self.description}: 分量 {component.name} 的 −K·B = {degree} 不在 1..3 内"
                )

        # 第三阶段：芽权重与分量权重一致
        for branch in self.germ.scalable:
            component = by_name.get(branch.trace.label)
            if component is None:
                raise GermStructureError(f"{self.description}: 芽分支 {branch.trace.label!r} 不在分解中")
            if branch.weight != component.weight:
                raise GermStructureError(
                    f"{self.description}: 分支 {component.name} 的权重 {branch.weight} ≠ {component.weight}"
                )

        # 第四阶段：相交数预算
        boundary = [branch.trace for branch in self.germ.fixed if branch.trace.label == BOUNDARY_LABEL]
        if boundary:
            for component in components:
                if component.name == BOUNDARY_LABEL:
                    continue
                local = sum(
                    intersection_multiplicity(self.germ.tree, boundary[0], branch.trace)
                    for branch in self.germ.scalable
                    if branch.trace.label == component.name
                )
                budget = minus_k.intersect(component.pic_class)
                if local > budget:
                    raise GermStructureError(
                        f"{self.description}: C 与 {component.name} 的局部相交数 {local} 超过 C·{component.name} = {budget}"
                    )

    @property
    def remote_components(self) -> Tuple[Component, ...]:
        """不经过芽点的分量"""
        local = {branch.trace.label for branch in self.germ.scalable}
        return tuple(component for component in self.components if component.name not in local)

    def threshold(self) -> PiecewiseBetaFunction:
        """芽点处的 lct_in_t 与远处分量约束的逐点最小值"""
        local = lct_in_t(self.germ)
        remote = [BetaFraction.over_beta(1, 0, component.weight) for component in self.remote_components]
        if not remote:
            return local
        return pointwise_min([local, min_envelope(remote)])


# ==================== 构造辅助 ====================


def _witness(degree: int, quadric: bool = False) -> TestDivisor:
    """B = C 的平凡见证，阈值恒为 1"""
    return TestDivisor(
        "C",
        (Component(BOUNDARY_LABEL, anticanonical(degree, quadric), 1),),
        standard_germ("anticanonical_self"),
        includes_C_globally=True,
    )


def _components(*items: Tuple[str, PicClass, int]) -> Tuple[Component, ...]:
    return tuple(Component(name, pic_class, weight) for name, pic_class, weight in items)


def _deg7_edge_divisor(degree: int = 7) -> Tuple[Component, ...]:
    return _components(
        ("L", line_through(degree, 1, 2), 3),
        ("E1", exceptional(degree, 1), 2),
        ("E2", exceptional(degree, 2), 2),
    )


def _deg7_generic_edge() -> TestDivisor:
    return TestDivisor(
        "3L+2E_1+2E_2（C∩L 的一般点）",
        _deg7_edge_divisor(),
        standard_germ("transverse_lines", weights=(3,), labels=("L",), with_fixed_C=True),
    )


def _deg6_line_divisor() -> Tuple[Component, ...]:
    return _components(
        ("E1", exceptional(6, 1), 2),
        ("L12", line_through(6, 1, 2), 2),
        ("L13", line_through(6, 1, 3), 1),
        ("E2", exceptional(6, 2), 1),
    )


def _deg6_generic_divisor() -> TestDivisor:
    return TestDivisor(
        "2E_1+2L_12+L_13+E_2（C∩E_1 的一般点）",
        _deg6_line_divisor(),
        standard_germ("transverse_lines", weights=(2,), labels=("E1",), with_fixed_C=True),
    )


def _deg4_triple_point_off_c() -> TestDivisor:
    return TestDivisor(
        "L_12+L_34+Z（三重点不在 C 上）",
        _components(
            ("L12", line_through(4, 1, 2), 1),
            ("L34", line_through(4, 3, 4), 1),
            ("Z", plane_curve_class(4, 1, (5,)), 1),
        ),
        standard_germ("transverse_lines", weights=(1, 1, 1), labels=("L12", "L34", "Z")),
    )


def _deg3_eckardt_lines() -> Tuple[Component, ...]:
    return _components(
        ("L12", line_through(3, 1, 2), 1),
        ("L34", line_through(3, 3, 4), 1),
        ("L56", line_through(3, 5, 6), 1),
    )


def _line_conic_pair(degree: int) -> Tuple[Component, ...]:
    """E_1 与其剩余二次曲线 −K − E_1，二者相交数为 2"""
    line = exceptional(degree, 1)
    return _components(("L", line, 1), ("M", anticanonical(degree) - line, 1))


def _deg3_tangent_off_c() -> TestDivisor:
    return TestDivisor(
        "L+M（相切点不在 C 上）",
        _line_conic_pair(3),
        standard_germ("tangent_pair", contact=2, weights=(1, 1), labels=("L", "M")),
    )


def _cuspidal(degree: int, on_c: bool, contact: int = 2) -> TestDivisor:
    minus_k = anticanonical(degree)
    params = {"weight": 1, "labels": ("T",), "with_fixed_C": on_c}
    if on_c:
        params.update(C_contact=contact, C_intersection=minus_k.anticanonical_degree)
    return TestDivisor(
        f"T（尖点{'在' if on_c else '不在'} C 上）",
        _components(("T", minus_k, 1)),
        standard_germ("cusp", params),
    )


def _tacnodal(degree: int, on_c: bool) -> TestDivisor:
    return TestDivisor(
        f"L+L'（切结点{'在' if on_c else '不在'} C 上）",
        _components(
            ("L", exceptional(degree, 1), 1),
            ("L'", anticanonical(degree) - exceptional(degree, 1), 1),
        ),
        standard_germ("tacnode", weights=(1, 1), labels=("L", "L'"), with_fixed_C=on_c),
    )


# ==================== 各情形的测试集 ====================


def _deg9() -> List[TestDivisor]:
    return [
        _witness(9),
        TestDivisor(
            "3T（T 为拐点切线）",
            _components(("T", hyperplane(9), 3)),
            standard_germ("osculating", contact=3, tangent_weights=(3,), labels=("T",)),
        ),
    ]


def _deg8_quadric() -> List[TestDivisor]:
    return [
        _witness(8, quadric=True),
        TestDivisor(
            "2F_1+2F_2（F_1 与 C 相切）",
            _components(("F1", quadric_class(1, 0), 2), ("F2", quadric_class(0, 1), 2)),
            standard_germ(
                "osculating", contact=2, tangent_weights=(2,), transverse_weights=(2,), labels=("F1", "F2")
            ),
        ),
    ]


def _f1_components() -> Tuple[Component, ...]:
    return _components(("Z", exceptional(8, 1), 2), ("F", plane_curve_class(8, 1, (1,)), 3))


def _f1_tangent() -> List[TestDivisor]:
    return [
        _witness(8),
        TestDivisor(
            "2Z+3F（F 与 C 相切）",
            _f1_components(),
            standard_germ(
                "osculating", contact=2, tangent_weights=(3,), transverse_weights=(2,), labels=("F", "Z")
            ),
        ),
    ]


def _f1_general() -> List[TestDivisor]:
    return [
        _witness(8),
        TestDivisor(
            "2Z+3F（Z∩F 在 C 上）",
            _f1_components(),
            standard_germ("transverse_lines", weights=(2, 3), labels=("Z", "F"), with_fixed_C=True),
        ),
    ]


def _deg7_edge_point() -> List[TestDivisor]:
    return [
        _witness(7),
        TestDivisor(
            "3L+2E_1+2E_2（E_1∩L 在 C 上）",
            _deg7_edge_divisor(),
            standard_germ("transverse_lines", weights=(3, 2), labels=("L", "E1"), with_fixed_C=True),
        ),
    ]


def _deg7_l_tangent() -> List[TestDivisor]:
    return [
        _witness(7),
        _deg7_generic_edge(),
        TestDivisor(
            "2L_1+2E_1+L（L_1 与 C 相切）",
            _components(
                ("L1", plane_curve_class(7, 1, (1,)), 2),
                ("E1", exceptional(7, 1), 2),
                ("L", line_through(7, 1, 2), 1),
            ),
            standard_germ(
                "osculating", contact=2, tangent_weights=(2,), transverse_weights=(2,), labels=("L1", "E1")
            ),
        ),
    ]


def _deg7_r_contact3() -> List[TestDivisor]:
    return [
        _witness(7),
        _deg7_generic_edge(),
        TestDivisor(
            "L+2R（R 与 C 三阶相切）",
            _components(("L", line_through(7, 1, 2), 1), ("R", hyperplane(7), 2)),
            standard_germ(
                "osculating", contact=3, tangent_weights=(2,), transverse_weights=(1,), labels=("R", "L")
            ),
        ),
    ]


def _deg7_r_contact2() -> List[TestDivisor]:
    return [_witness(7), _deg7_generic_edge()]


def _deg6_line_point() -> List[TestDivisor]:
    return [
        _witness(6),
        TestDivisor(
            "2E_1+2L_12+L_13+E_2（E_1∩L_12 在 C 上）",
            _deg6_line_divisor(),
            standard_germ("transverse_lines", weights=(2, 2), labels=("E1", "L12"), with_fixed_C=True),
        ),
    ]


def _deg6_conic_tangent() -> List[TestDivisor]:
    return [
        _witness(6),
        _deg6_generic_divisor(),
        TestDivisor(
            "2Z_2+E_1+L_23（Z_2 与 C 相切）",
            _components(
                ("Z2", plane_curve_class(6, 1, (1,)), 2),
                ("E1", exceptional(6, 1), 1),
                ("L23", line_through(6, 2, 3), 1),
            ),
            standard_germ(
                "osculating", contact=2, tangent_weights=(2,), transverse_weights=(1,), labels=("Z2", "E1")
            ),
        ),
    ]


def _deg6_generic() -> List[TestDivisor]:
    return [_witness(6), _deg6_generic_divisor()]


def _deg5() -> List[TestDivisor]:
    return [
        _witness(5),
        TestDivisor(
            "2E_1+L_12+L_13+L_14（C∩E_1 的一般点）",
            _components(
                ("E1", exceptional(5, 1), 2),
                ("L12", line_through(5, 1, 2), 1),
                ("L13", line_through(5, 1, 3), 1),
                ("L14", line_through(5, 1, 4), 1),
            ),
            standard_germ("transverse_lines", weights=(2,), labels=("E1",), with_fixed_C=True),
        ),
    ]


def _deg4_line_point() -> List[TestDivisor]:
    return [
        _witness(4),
        TestDivisor(
            "L_12+L_34+Z（三者交于 C 上一点）",
            _components(
                ("L12", line_through(4, 1, 2), 1),
                ("L34", line_through(4, 3, 4), 1),
                ("Z", plane_curve_class(4, 1, (5,)), 1),
            ),
            standard_germ(
                "transverse_lines", weights=(1, 1, 1), labels=("L12", "L34", "Z"), with_fixed_C=True
            ),
        ),
    ]


def _deg4_conic_pair() -> List[TestDivisor]:
    return [
        _witness(4),
        _deg4_triple_point_off_c(),
        TestDivisor(
            "C_1+C_2（二者在同一点与 C 相切）",
            _components(
                ("C1", plane_curve_class(4, 1, (1,)), 1),
                ("C2", plane_curve_class(4, 2, (2, 3, 4, 5)), 1),
            ),
            standard_germ("osculating", contact=2, tangent_weights=(1, 1), labels=("C1", "C2")),
        ),
    ]


def _deg4_generic() -> List[TestDivisor]:
    return [_witness(4), _deg4_triple_point_off_c()]


def _deg3_eckardt_on_c() -> List[TestDivisor]:
    return [
        _witness(3),
        TestDivisor(
            "L_12+L_34+L_56（Eckardt 点在 C 上）",
            _deg3_eckardt_lines(),
            standard_germ("eckardt", weights=(1, 1, 1), labels=("L12", "L34", "L56"), with_fixed_C=True),
        ),
    ]


def _deg3_eckardt_off_c() -> List[TestDivisor]:
    return [
        _witness(3),
        TestDivisor(
            "L_12+L_34+L_56（Eckardt 点不在 C 上）",
            _deg3_eckardt_lines(),
            standard_germ("eckardt", weights=(1, 1, 1), labels=("L12", "L34", "L56")),
        ),
    ]


def _deg3_line_conic_tangent() -> List[TestDivisor]:
    return [
        _witness(3),
        TestDivisor(
            "L+M（相切点在 C 上）",
            _line_conic_pair(3),
            standard_germ(
                "tangent_pair", contact=2, weights=(1, 1), labels=("L", "M"), with_fixed_C=True, C_transverse=True
            ),
        ),
    ]


def _deg3_cusp_meets_c_once() -> List[TestDivisor]:
    # T·C = 3 全部集中在尖点处，迫使 C 沿尖点切锥方向
    return [_witness(3), _deg3_tangent_off_c(), _cuspidal(3, on_c=True, contact=3)]


def _deg3_generic() -> List[TestDivisor]:
    return [_witness(3), _deg3_tangent_off_c()]


def _deg2_tacnode_on_c() -> List[TestDivisor]:
    return [_witness(2), _tacnodal(2, on_c=True)]


def _deg2_tacnode_off_c() -> List[TestDivisor]:
    return [_witness(2), _tacnodal(2, on_c=False)]


def _deg2_cusp_on_c() -> List[TestDivisor]:
    return [_witness(2), _cuspidal(2, on_c=True, contact=2)]


def _deg2_generic() -> List[TestDivisor]:
    return [_witness(2), _cuspidal(2, on_c=False)]


def _deg1_no_cuspidal() -> List[TestDivisor]:
    return [_witness(1)]


def _deg1_cuspidal() -> List[TestDivisor]:
    return [_witness(1), _cuspidal(1, on_c=False)]


_BUILDERS: Dict[SurfaceConfig, Callable[[], List[TestDivisor]]] = {
    SurfaceConfig.DEG9: _deg9,
    SurfaceConfig.DEG8_QUADRIC: _deg8_quadric,
    SurfaceConfig.F1_TANGENT: _f1_tangent,
    SurfaceConfig.F1_GENERAL: _f1_general,
    SurfaceConfig.DEG7_EDGE_POINT: _deg7_edge_point,
    SurfaceConfig.DEG7_L_TANGENT: _deg7_l_tangent,
    SurfaceConfig.DEG7_R_CONTACT3: _deg7_r_contact3,
    SurfaceConfig.DEG7_R_CONTACT2: _deg7_r_contact2,
    SurfaceConfig.DEG6_LINE_POINT: _deg6_line_point,
    SurfaceConfig.DEG6_CONIC_TANGENT: _deg6_conic_tangent,
    SurfaceConfig.DEG6_GENERIC: _deg6_generic,
    SurfaceConfig.DEG5: _deg5,
    SurfaceConfig.DEG4_LINE_POINT: _deg4_line_point,
    SurfaceConfig.DEG4_CONIC_PAIR: _deg4_conic_pair,
    SurfaceConfig.DEG4_GENERIC: _deg4_generic,
    SurfaceConfig.DEG3_ECKARDT_ON_C: _deg3_eckardt_on_c,
    SurfaceConfig.DEG3_ECKARDT_OFF_C: _deg3_eckardt_off_c,
    SurfaceConfig.DEG3_LINE_CONIC_TANGENT: _deg3_line_conic_tangent,
    SurfaceConfig.DEG3_CUSP_MEETS_C_ONCE: _deg3_cusp_meets_c_once,
    SurfaceConfig.DEG3_GENERIC: _deg3_generic,
    SurfaceConfig.DEG2_TACNODE_ON_C: _deg2_tacnode_on_c,
    SurfaceConfig.DEG2_TACNODE_OFF_C: _deg2_tacnode_off_c,
    SurfaceConfig.DEG2_CUSP_ON_C: _deg2_cusp_on_c,
    SurfaceConfig.DEG2_GENERIC: _deg2_generic,
    SurfaceConfig.DEG1_NO_CUSPIDAL: _deg1_no_cuspidal,
    SurfaceConfig.DEG1_CUSPIDAL: _deg1_cuspidal,
}


@lru_cache(maxsize=None)
def _cached(config: SurfaceConfig) -> Tuple[TestDivisor, ...]:
    return tuple(_BUILDERS[config]())


def test_divisors(config: SurfaceConfig) -> List[TestDivisor]:
    """情形 config 的测试除子集合，总是包含 B = C 的见证"""
    return list(_cached(config))


test_divisors.__test__ = False
