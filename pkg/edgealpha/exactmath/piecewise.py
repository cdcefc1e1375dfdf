"""
分段函数模块：(0,1] 上由 β 分式拼接而成的连续分段函数与最小包络。

区间采用闭-闭端点共享的约定，首段左端点 0 为开端点。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from edgealpha.exactmath.beta_fraction import (
    IDENTICAL,
    ONE,
    ZERO,
    BetaFraction,
    RationalLike,
    as_rational,
    check_beta,
    crossing_points,
)
from edgealpha.exceptions import DomainError, UsageError
from utils.format_utils import format_rational, parse_rational
from utils.logging_utils import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class Piece:
    """一段 [lo, hi] 上的 β 分式"""

    lo: Fraction
    hi: Fraction
    fraction: BetaFraction


@dataclass(frozen=True)
class PiecewiseBetaFunction:
    """
    (0,1] 上的连续分段 β 函数，构造即规范化。

    不变量:
        - 区间首尾相接地划分 (0,1]
        - 相邻分段在共享断点处取值精确相等
        - 相邻分段的分式互不相同（相同者自动合并）
    """

    pieces: Tuple[Piece, ...]

    def __post_init__(self) -> None:
        pieces = tuple(self.pieces)
        if not pieces:
            raise UsageError("分段函数至少需要一段")

        # 第一阶段：划分校验
        if pieces[0].lo != ZERO or pieces[-1].hi != ONE:
            raise DomainError("分段必须覆盖 (0,1]")
        for piece in pieces:
            if not piece.lo < piece.hi:
                raise DomainError(
                    f"空区间 [{format_rational(piece.lo)}, {format_rational(piece.hi)}]"
                )
        for left, right in zip(pieces, pieces[1:]):
            if left.hi != right.lo:
                raise DomainError(
                    f"断点不匹配: {format_rational(left.hi)} 与 {format_rational(right.lo)}"
                )
            # 第二阶段：连续性校验
            if left.fraction.value_at(left.hi) != right.fraction.value_at(right.lo):
                raise DomainError(f"在 β={format_rational(left.hi)} 处不连续")

        # 第三阶段：合并相同的相邻分段
        merged: List[Piece] = [pieces[0]]
        for piece in pieces[1:]:
            if piece.fraction == merged[-1].fraction:
                merged[-1] = Piece(merged[-1].lo, piece.hi, piece.fraction)
            else:
                merged.append(piece)
        object.__setattr__(self, "pieces", tuple(merged))

    # ==================== 构造辅助 ====================

    @classmethod
    def constant(cls, value: RationalLike) -> "PiecewiseBetaFunction":
        return cls((Piece(ZERO, ONE, BetaFraction.constant(value)),))

    @classmethod
    def from_breakpoints(
        cls, fractions: Sequence[BetaFraction], breakpoints: Sequence[RationalLike]
    ) -> "PiecewiseBetaFunction":
        """
        由分式序列与内部断点序列构造，常用于手写论文式的分段展示。

        参数:
            fractions: n 个分式，依区间次序排列
            breakpoints: n-1 个严格递增的内部断点
        """
        if len(fractions) != len(breakpoints) + 1:
            raise UsageError("分式数量必须比断点数量多一")
        ends = [ZERO] + [as_rational(point) for point in breakpoints] + [ONE]
        return cls(
            tuple(Piece(lo, hi, fraction) for lo, hi, fraction in zip(ends, ends[1:], fractions))
        )

    # ==================== 求值与性质 ====================

    def evaluate(self, beta: RationalLike) -> Fraction:
        value = check_beta(beta)
        for piece in self.pieces:
            if value <= piece.hi:
                return piece.fraction.value_at(value)
        raise DomainError(f"β={format_rational(value)} 超出定义域")

    def __call__(self, beta: RationalLike) -> Fraction:
        return self.evaluate(beta)

    @property
    def breakpoints(self) -> Tuple[Fraction, ...]:
        """内部断点"""
        return tuple(piece.hi for piece in self.pieces[:-1])

    @property
    def fractions(self) -> Tuple[BetaFraction, ...]:
        return tuple(piece.fraction for piece in self.pieces)

    def piece_at(self, beta: RationalLike) -> Piece:
        value = check_beta(beta)
        for piece in self.pieces:
            if value <= piece.hi:
                return piece
        raise DomainError(f"β={format_rational(value)} 超出定义域")

    def is_nonincreasing(self) -> bool:
        return all(piece.fraction.derivative_numerator <= 0 for piece in self.pieces)

    def initial_constant_interval(self) -> Optional[Fraction]:
        """若首段为常数 1，返回其右端点，否则 None"""
        first = self.pieces[0].fraction
        if first.is_constant and first.p == ONE:
            return self.pieces[0].hi
        return None

    def scaled(self, factor: RationalLike) -> "PiecewiseBetaFunction":
        c = as_rational(factor)
        return PiecewiseBetaFunction(
            tuple(Piece(piece.lo, piece.hi, piece.fraction.scaled(c)) for piece in self.pieces)
        )

    # ==================== 文本形式 ====================

    def serialize(self) -> str:
        """规范文本形式 "lo..hi : (p+q*b)/(r+s*b); ..." """
        return "; ".join(
            f"{format_rational(piece.lo, True)}..{format_rational(piece.hi, True)}"
            f" : {piece.fraction.serialize()}"
            for piece in self.pieces
        )

    def describe(self) -> List[str]:
        """逐段的人类可读描述，例如 "0 < β ≤ 1/6 : 1" """
        lines = []
        for index, piece in enumerate(self.pieces):
            left = "0 < β" if index == 0 else f"{format_rational(piece.lo)} ≤ β"
            lines.append(f"{left} ≤ {format_rational(piece.hi)} : {piece.fraction.pretty()}")
        return lines

    def pretty(self) -> str:
        """min{...} 形式的紧凑表达"""
        parts = [piece.fraction.pretty() for piece in self.pieces]
        if len(parts) == 1:
            return parts[0]
        return "min{" + ", ".join(parts) + "}"

    def __str__(self) -> str:
        return self.pretty()


def parse_piecewise(text: str) -> PiecewiseBetaFunction:
    """解析 serialize() 的输出"""
    from edgealpha.exactmath.beta_fraction import parse_beta_fraction

    pieces = []
    for chunk in text.split(";"):
        interval, separator, formula = chunk.partition(":")
        if not separator or ".." not in interval:
            raise UsageError(f"无法解析分段: {chunk.strip()!r}")
        lo_text, hi_text = interval.split("..")
        pieces.append(
            Piece(parse_rational(lo_text), parse_rational(hi_text), parse_beta_fraction(formula))
        )
    return PiecewiseBetaFunction(tuple(pieces))


# ==================== 包络与比较 ====================


def _envelope_on(lo: Fraction, hi: Fraction, fractions: Sequence[BetaFraction]) -> List[Piece]:
    """
    在 [lo, hi] 上求若干分式的逐点最小值。

    关键实现细节:
        - 第一阶段：收集所有两两交点中落在 (lo, hi) 内者作为候选断点
        - 第二阶段：在每个子区间中点处比较取值，选出最小分式
    """
    distinct = list(dict.fromkeys(fractions))
    cuts = {lo, hi}
    for index, f in enumerate(distinct):
        for g in distinct[index + 1:]:
            points = crossing_points(f, g)
            if points is IDENTICAL:
                continue
            cuts.update(point for point in points if lo < point < hi)

    ordered = sorted(cuts)
    pieces = []
    for left, right in zip(ordered, ordered[1:]):
        middle = (left + right) / 2
        best = min(distinct, key=lambda fraction: fraction.value_at(middle))
        pieces.append(Piece(left, right, best))
    return pieces


def min_envelope(fs: Iterable[BetaFraction]) -> PiecewiseBetaFunction:
    """
    分式列表的逐点最小值，断点为两两交叉相乘差的精确根。

    异常:
        UsageError: 空列表
    """
    fractions = list(fs)
    if not fractions:
        raise UsageError("min_envelope 需要非空分式列表")
    envelope = PiecewiseBetaFunction(tuple(_envelope_on(ZERO, ONE, fractions)))
    logger.debug("包络：%d 个分式 → %d 段", len(fractions), len(envelope.pieces))
    return envelope


def _common_partition(functions: Sequence[PiecewiseBetaFunction]) -> List[Fraction]:
    cuts = {ZERO, ONE}
    for function in functions:
        cuts.update(function.breakpoints)
    return sorted(cuts)


def _fraction_on(function: PiecewiseBetaFunction, lo: Fraction, hi: Fraction) -> BetaFraction:
    middle = (lo + hi) / 2
    for piece in function.pieces:
        if piece.lo <= middle <= piece.hi:
            return piece.fraction
    raise DomainError("区间超出定义域")


def pointwise_min(fs: Iterable[PiecewiseBetaFunction]) -> PiecewiseBetaFunction:
    """
    分段函数列表的逐点最小值。

    异常:
        UsageError: 空列表
    """
    functions = list(fs)
    if not functions:
        raise UsageError("pointwise_min 需要非空函数列表")
    ordered = _common_partition(functions)
    pieces: List[Piece] = []
    for lo, hi in zip(ordered, ordered[1:]):
        local = [_fraction_on(function, lo, hi) for function in functions]
        pieces.extend(_envelope_on(lo, hi, local))
    return PiecewiseBetaFunction(tuple(pieces))


def _refined_intervals(f: PiecewiseBetaFunction, g: PiecewiseBetaFunction):
    """公共划分再按 f、g 分式的交点细分，每个子区间内 f − g 不变号"""
    ordered = _common_partition([f, g])
    for lo, hi in zip(ordered, ordered[1:]):
        left = _fraction_on(f, lo, hi)
        right = _fraction_on(g, lo, hi)
        points = crossing_points(left, right)
        inner = [] if points is IDENTICAL else [point for point in points if lo < point < hi]
        ends = [lo] + inner + [hi]
        for sub_lo, sub_hi in zip(ends, ends[1:]):
            yield sub_lo, sub_hi, left, right


def piecewise_equal(f: PiecewiseBetaFunction, g: PiecewiseBetaFunction) -> bool:
    """规范形式下逐段比较即可判定 (0,1] 上的恒等"""
    return f.pieces == g.pieces


def first_difference(f: PiecewiseBetaFunction, g: PiecewiseBetaFunction) -> Optional[Fraction]:
    """
    返回一个 f(β) ≠ g(β) 的有理见证 β，两者恒等时返回 None。

    见证取自第一个分式不同的子区间，在其中点与三等分点中选取。
    """
    for lo, hi, left, right in _refined_intervals(f, g):
        if left == right:
            continue
        width = hi - lo
        for candidate in (lo + width / 2, lo + width / 3, lo + 2 * width / 3):
            if left.value_at(candidate) != right.value_at(candidate):
                return candidate
    return None


def first_violation(f: PiecewiseBetaFunction, g: PiecewiseBetaFunction) -> Optional[Fraction]:
    """返回一个 f(β) > g(β) 的有理见证 β；f ≤ g 处处成立时返回 None"""
    for lo, hi, left, right in _refined_intervals(f, g):
        middle = (lo + hi) / 2
        if left.value_at(middle) > right.value_at(middle):
            return middle
        if left.value_at(hi) > right.value_at(hi):
            return hi
    return None


def pointwise_le(f: PiecewiseBetaFunction, g: PiecewiseBetaFunction) -> bool:
    """精确判定 f ≤ g 在 (0,1] 上处处成立"""
    return first_violation(f, g) is None


def evaluate(f: PiecewiseBetaFunction, beta: RationalLike) -> Fraction:
    """f 在 β 处的精确值"""
    return f.evaluate(beta)


def is_nonincreasing(f: PiecewiseBetaFunction) -> bool:
    """每段满足 qr − ps ≤ 0；连续性已保证全局单调"""
    return f.is_nonincreasing()
