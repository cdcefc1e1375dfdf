"""
Picard 格模块：次数 1–9 的 del Pezzo 曲面及 ℙ¹×ℙ¹ 上的除子类与相交形式。
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple

import numpy as np

from edgealpha.exceptions import UsageError

QUADRIC_DEGREE = 8


def check_degree(degree: int) -> int:
    """校验曲面次数在 1..9 内"""
    if isinstance(degree, bool) or not isinstance(degree, int) or not 1 <= degree <= 9:
        raise UsageError(f"del Pezzo 曲面的次数必须在 1..9 内，收到 {degree!r}")
    return degree


@lru_cache(maxsize=None)
def gram_matrix(degree: int, quadric: bool = False) -> np.ndarray:
    """
    相交形式的 Gram 矩阵。

    参数:
        degree: 曲面次数
        quadric: 为 True 时返回 ℙ¹×ℙ¹ 的双次数形式 ((0,1),(1,0))

    返回:
        np.ndarray: 只读整数矩阵
    """
    if quadric:
        matrix = np.array([[0, 1], [1, 0]], dtype=np.int64)
    else:
        check_degree(degree)
        matrix = np.diag([1] + [-1] * (9 - degree)).astype(np.int64)
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class PicClass:
    """
    Picard 格中的元素。

    坐标约定：
        - 爆破模型下为 (d0; d1, …, d_{9−degree})，表示 d0·H + Σ d_i·E_i
        - quadric=True 时为双次数 (a, b)
    """

    degree_of_surface: int
    coords: Tuple[int, ...]
    quadric: bool = False

    def __post_init__(self) -> None:
        coords = tuple(int(value) for value in self.coords)
        object.__setattr__(self, "coords", coords)
        if self.quadric:
            if self.degree_of_surface != QUADRIC_DEGREE or len(coords) != 2:
                raise UsageError("ℙ¹×ℙ¹ 的类必须是次数 8 的双次数 (a, b)")
            return
        check_degree(self.degree_of_surface)
        expected = 10 - self.degree_of_surface
        if len(coords) != expected:
            raise UsageError(
                f"次数 {self.degree_of_surface} 的类需要 {expected} 个坐标，收到 {len(coords)} 个"
            )

    # ==================== 格运算 ====================

    def _check_same_lattice(self, other: "PicClass") -> None:
        if (self.degree_of_surface, self.quadric) != (other.degree_of_surface, other.quadric):
            raise UsageError(f"不同格中的类不能运算: {self} 与 {other}")

    def intersect(self, other: "PicClass") -> int:
        self._check_same_lattice(other)
        gram = gram_matrix(self.degree_of_surface, self.quadric)
        return int(np.asarray(self.coords) @ gram @ np.asarray(other.coords))

    def __add__(self, other: "PicClass") -> "PicClass":
        self._check_same_lattice(other)
        return PicClass(
            self.degree_of_surface,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
            self.quadric,
        )

    def __sub__(self, other: "PicClass") -> "PicClass":
        return self + (-other)

    def __neg__(self) -> "PicClass":
        return PicClass(self.degree_of_surface, tuple(-a for a in self.coords), self.quadric)

    def __rmul__(self, factor: int) -> "PicClass":
        if isinstance(factor, bool) or not isinstance(factor, int):
            return NotImplemented
        return PicClass(self.degree_of_surface, tuple(factor * a for a in self.coords), self.quadric)

    @property
    def self_intersection(self) -> int:
        return self.intersect(self)

    @property
    def anticanonical_degree(self) -> int:
        """−K·D"""
        return anticanonical(self.degree_of_surface, self.quadric).intersect(self)

    def permuted(self, order: Iterable[int]) -> "PicClass":
        """按 order 重排例外坐标（order 为 0 起始的下标排列）"""
        if self.quadric:
            raise UsageError("ℙ¹×ℙ¹ 的类没有例外坐标")
        exceptional = self.coords[1:]
        return PicClass(
            self.degree_of_surface,
            (self.coords[0],) + tuple(exceptional[index] for index in order),
        )

    def __str__(self) -> str:
        if self.quadric:
            return f"({self.coords[0]},{self.coords[1]})"
        if len(self.coords) == 1:
            return f"({self.coords[0]})"
        return f"({self.coords[0]}; {', '.join(str(value) for value in self.coords[1:])})"


def intersect(x: PicClass, y: PicClass) -> int:
    """x·y"""
    return x.intersect(y)


def anticanonical(degree: int, quadric: bool = False) -> PicClass:
    """−K = 3H − E_1 − … − E_{9−degree}；ℙ¹×ℙ¹ 上为 (2,2)"""
    if quadric:
        return PicClass(QUADRIC_DEGREE, (2, 2), quadric=True)
    check_degree(degree)
    return PicClass(degree, (3,) + (-1,) * (9 - degree))


# ==================== 命名类 ====================


def hyperplane(degree: int) -> PicClass:
    """H"""
    check_degree(degree)
    return PicClass(degree, (1,) + (0,) * (9 - degree))


def exceptional(degree: int, index: int) -> PicClass:
    """E_index（1 起始）"""
    return _unit(degree, index)


def _unit(degree: int, index: int) -> PicClass:
    check_degree(degree)
    count = 9 - degree
    if not 1 <= index <= count:
        raise UsageError(f"次数 {degree} 的曲面只有 E_1..E_{count}，收到 E_{index}")
    coords = [0] * (count + 1)
    coords[index] = 1
    return PicClass(degree, tuple(coords))


def plane_curve_class(degree: int, plane_degree: int, through: Iterable[int]) -> PicClass:
    """d·H − Σ_{i∈through} E_i：经过所列爆破点的 d 次平面曲线的严格变换"""
    check_degree(degree)
    result = PicClass(degree, (plane_degree,) + (0,) * (9 - degree))
    for index in through:
        result = result - _unit(degree, index)
    return result


def line_through(degree: int, i: int, j: int) -> PicClass:
    """L_ij = H − E_i − E_j"""
    if i == j:
        raise UsageError("L_ij 需要两个不同的下标")
    return plane_curve_class(degree, 1, (i, j))


def conic_through(degree: int, indices: Iterable[int]) -> PicClass:
    """2H − Σ_{i∈indices} E_i"""
    return plane_curve_class(degree, 2, tuple(indices))


def quadric_class(a: int, b: int) -> PicClass:
    """ℙ¹×ℙ¹ 上双次数为 (a, b) 的类"""
    return PicClass(QUADRIC_DEGREE, (a, b), quadric=True)
