"""
有理曲线类枚举模块：求解 −K·D = m 且 D² = m − 2 的全部整数类。

搜索盒由 Cauchy–Schwarz 推出：记 r = 9 − degree，S = Σd_i = m − 3d0，Q = Σd_i² = d0² − m + 2，
则 S² ≤ rQ，即 degree·d0² − 6m·d0 + m² + r(m − 2) ≤ 0。
"""

from math import isqrt
from typing import Iterator, List, Tuple

from sympy.utilities.iterables import multiset_permutations

from edgealpha.exceptions import UsageError
from edgealpha.lattice.pic_class import QUADRIC_DEGREE, PicClass, check_degree
from utils.logging_utils import get_logger

logger = get_logger(__name__)

ANTICANONICAL_DEGREES = (1, 2, 3)


def hyperplane_range(degree: int, m: int) -> range:
    """
    d0 的可行范围。

    关键实现细节:
        - 第一阶段：二次不等式判别式为负时无解
        - 第二阶段：用 isqrt 取略宽的整数区间，再逐点精确过滤
    """
    rank = 9 - degree
    constant = m * m + rank * (m - 2)
    discriminant = 36 * m * m - 4 * degree * constant
    if discriminant < 0:
        return range(0)

    # 根为 (6m ± √disc)/(2·degree)
    root = isqrt(discriminant) + 1
    low = (6 * m - root) // (2 * degree) - 1
    high = (6 * m + root) // (2 * degree) + 1
    feasible = [d0 for d0 in range(low, high + 1) if degree * d0 * d0 - 6 * m * d0 + constant <= 0]
    if not feasible:
        return range(0)
    return range(feasible[0], feasible[-1] + 1)


def _nonincreasing_solutions(count: int, total: int, squares: int, ceiling: int) -> Iterator[Tuple[int, ...]]:
    """长度为 count、各项 ≤ ceiling 的非增整数序列，满足和为 total、平方和为 squares"""
    if count == 0:
        if total == 0 and squares == 0:
            yield ()
        return
    bound = isqrt(squares)
    for value in range(min(ceiling, bound), -bound - 1, -1):
        rest_total = total - value
        rest_squares = squares - value * value
        rest_count = count - 1
        # 剩余各项 ≤ value 且满足 Cauchy–Schwarz
        if rest_total > rest_count * value:
            continue
        if rest_total * rest_total > rest_count * rest_squares:
            continue
        for tail in _nonincreasing_solutions(rest_count, rest_total, rest_squares, value):
            yield (value,) + tail


def _quadric_classes(m: int) -> List[PicClass]:
    """ℙ¹×ℙ¹：2(a + b) = m，2ab = m − 2"""
    if m % 2:
        return []
    total, product = m // 2, (m - 2) // 2
    discriminant = total * total - 4 * product
    if discriminant < 0 or isqrt(discriminant) ** 2 != discriminant:
        return []
    root = isqrt(discriminant)
    roots = {((total + root) // 2, (total - root) // 2), ((total - root) // 2, (total + root) // 2)}
    return sorted(
        (PicClass(QUADRIC_DEGREE, pair, quadric=True) for pair in roots if sum(pair) == total),
        key=lambda item: item.coords,
        reverse=True,
    )


def enumerate_rational_classes(degree: int, m: int, quadric: bool = False) -> List[PicClass]:
    """
    枚举 −K·D = m、D² = m − 2 的全部格类，不做不可约性过滤。

    参数:
        degree: 曲面次数 1..9（quadric=True 时忽略，固定为 8）
        m: 反典范次数，取 1、2 或 3
        quadric: 是否使用 ℙ¹×ℙ¹ 的秩 2 格

    返回:
        List[PicClass]: 按坐标降序排列的类

    示例:
        次数 3、m=1 得到 27 条直线的类。
    """
    if m not in ANTICANONICAL_DEGREES:
        raise UsageError(f"m 必须是 1、2 或 3，收到 {m!r}")
    if quadric:
        return _quadric_classes(m)

    check_degree(degree)
    rank = 9 - degree
    classes: List[PicClass] = []
    for d0 in hyperplane_range(degree, m):
        total = m - 3 * d0
        squares = d0 * d0 - m + 2
        if squares < 0:
            continue
        if rank == 0:
            if total == 0 and squares == 0:
                classes.append(PicClass(degree, (d0,)))
            continue
        for pattern in _nonincreasing_solutions(rank, total, squares, isqrt(squares)):
            for arrangement in multiset_permutations(list(pattern)):
                classes.append(PicClass(degree, (d0, *arrangement)))

    classes.sort(key=lambda item: item.coords, reverse=True)
    logger.debug("次数 %d、m=%d：枚举得到 %d 个类", degree, m, len(classes))
    return classes
