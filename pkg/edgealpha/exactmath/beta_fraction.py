"""
β 分式模块：形如 (p + qβ)/(r + sβ) 的精确有理 Möbius 函数及其交点求解。

所有运算均基于 fractions.Fraction，不出现任何浮点数。
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, isqrt, lcm
import re
from typing import Tuple, Union

from edgealpha.exceptions import DomainError, UsageError
from utils.format_utils import format_rational, parse_rational

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class Crossing(Enum):
    """交点求解的特殊结果"""

    IDENTICAL = "identical"


IDENTICAL = Crossing.IDENTICAL


def as_rational(value: RationalLike) -> Fraction:
    """
    将整数、Fraction 或 "p/q" 字符串转换为 Fraction；拒绝浮点数。

    Examples:
        >>> as_rational("3/6")
        Fraction(1, 2)
        >>> as_rational(2)
        Fraction(2, 1)
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise DomainError(f"只接受精确有理数，收到 {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"无法解释为有理数: {value!r}")


def check_beta(beta: RationalLike) -> Fraction:
    """校验 β ∈ (0,1] 并返回其 Fraction 形式"""
    value = as_rational(beta)
    if not ZERO < value <= ONE:
        raise DomainError(f"β 必须满足 0 < β ≤ 1，收到 {format_rational(value)}")
    return value


@dataclass(frozen=True)
class BetaFraction:
    """
    (p + qβ)/(r + sβ)，在 (0,1] 上分母严格为正。

    构造时即规范化：
        - 分子分母同时取反，使 r ≥ 0；r = 0 时要求 s > 0
        - ps = qr 时函数为常数 c，存储为 (c + 0β)/(1 + 0β)
        - 否则整体放缩为互素整数系数
    """

    p: Fraction
    q: Fraction
    r: Fraction
    s: Fraction

    def __post_init__(self) -> None:
        # 第一阶段：类型转换
        p, q, r, s = (as_rational(v) for v in (self.p, self.q, self.r, self.s))

        # 第二阶段：分母符号与正性
        if r < 0 or (r == 0 and s < 0):
            p, q, r, s = -p, -q, -r, -s
        if r < 0 or r + s <= 0:
            raise DomainError(
                f"分母 {format_rational(r)} + {format_rational(s)}β 在 (0,1] 上不恒为正"
            )

        # 第三阶段：常数退化
        if p * s == q * r:
            constant = p / r if r != 0 else q / s
            p, q, r, s = constant, ZERO, ONE, ZERO
        else:
            # 第四阶段：整数化并约去公因子
            scale = lcm(p.denominator, q.denominator, r.denominator, s.denominator)
            ints = [int(v * scale) for v in (p, q, r, s)]
            divisor = gcd(*ints)
            p, q, r, s = (Fraction(v, divisor) for v in ints)

        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)

    # ==================== 构造辅助 ====================

    @classmethod
    def constant(cls, value: RationalLike) -> "BetaFraction":
        """常数函数 c"""
        return cls(as_rational(value), ZERO, ONE, ZERO)

    @classmethod
    def over_beta(cls, p: RationalLike, q: RationalLike, s: RationalLike) -> "BetaFraction":
        """(p + qβ)/(sβ)，目录中最常见的形状"""
        return cls(as_rational(p), as_rational(q), ZERO, as_rational(s))

    @classmethod
    def identity(cls) -> "BetaFraction":
        """函数 β 本身"""
        return cls(ZERO, ONE, ONE, ZERO)

    # ==================== 基本性质 ====================

    @property
    def is_constant(self) -> bool:
        return self.q == 0 and self.s == 0 and self.r == 1

    @property
    def derivative_numerator(self) -> Fraction:
        """导数分子 qr − ps，其符号即单调方向"""
        return self.q * self.r - self.p * self.s

    def evaluate(self, beta: RationalLike) -> Fraction:
        value = check_beta(beta)
        return (self.p + self.q * value) / (self.r + self.s * value)

    def __call__(self, beta: RationalLike) -> Fraction:
        return self.evaluate(beta)

    def value_at(self, beta: Fraction) -> Fraction:
        """不校验定义域的求值，供区间端点与内部点使用"""
        return (self.p + self.q * beta) / (self.r + self.s * beta)

    def scaled(self, factor: RationalLike) -> "BetaFraction":
        c = as_rational(factor)
        return BetaFraction(c * self.p, c * self.q, self.r, self.s)

    def times_beta(self) -> "BetaFraction":
        """
        返回 β·f(β)；仅当结果仍为 Möbius 形式时成立。

        异常:
            UsageError: q = s = 0 与 r = 0 之外的情形会产生二次分子
        """
        if self.q == 0 and self.s == 0:
            return BetaFraction(ZERO, self.p, self.r, ZERO)
        if self.r == 0:
            return BetaFraction(self.p, self.q, self.s, ZERO)
        raise UsageError(f"β·({self.pretty()}) 不是 Möbius 形式")

    # ==================== 文本形式 ====================

    def serialize(self) -> str:
        """规范文本形式 "(p+q*b)/(r+s*b)"，有理数写作 "num/den" """
        return (
            f"({format_rational(self.p, True)}{_signed(self.q)}*b)"
            f"/({format_rational(self.r, True)}{_signed(self.s)}*b)"
        )

    def pretty(self) -> str:
        """人类可读形式，例如 "(1+3β)/(9β)"、"1"、"1/(3β)" """
        if self.is_constant:
            return format_rational(self.p)
        numerator = _poly_text(self.p, self.q)
        denominator = _poly_text(self.r, self.s)
        if self.p != 0 and self.q != 0:
            numerator = f"({numerator})"
        if denominator == "1":
            return numerator
        return f"{numerator}/({denominator})"

    def __str__(self) -> str:
        return self.pretty()


_SERIAL_PATTERN = re.compile(
    r"^\(\s*(?P<p>[+-]?\d+(?:/\d+)?)\s*(?P<q>[+-]\s*\d+(?:/\d+)?)\s*\*\s*b\s*\)"
    r"\s*/\s*"
    r"\(\s*(?P<r>[+-]?\d+(?:/\d+)?)\s*(?P<s>[+-]\s*\d+(?:/\d+)?)\s*\*\s*b\s*\)$"
)


def parse_beta_fraction(text: str) -> BetaFraction:
    """解析 serialize() 的输出"""
    match = _SERIAL_PATTERN.match(text.strip())
    if match is None:
        raise UsageError(f"无法解析 β 分式: {text!r}")
    parts = [parse_rational(match.group(name).replace(" ", "")) for name in ("p", "q", "r", "s")]
    return BetaFraction(*parts)


def _signed(value: Fraction) -> str:
    text = format_rational(abs(value), True)
    return f"-{text}" if value < 0 else f"+{text}"


def _poly_text(constant: Fraction, linear: Fraction) -> str:
    terms = []
    if constant != 0:
        terms.append(format_rational(constant))
    if linear != 0:
        if linear == 1:
            coefficient = ""
        elif linear == -1:
            coefficient = "-"
        else:
            coefficient = format_rational(linear)
        term = f"{coefficient}β"
        if terms and not term.startswith("-"):
            term = f"+{term}"
        terms.append(term)
    return "".join(terms) if terms else "0"


# ==================== 交点求解 ====================


def crossing_polynomial(f: BetaFraction, g: BetaFraction) -> Tuple[Fraction, Fraction, Fraction]:
    """
    交叉相乘差 (p1+q1β)(r2+s2β) − (p2+q2β)(r1+s1β) 的系数 (A, B, C)。

    分母在 (0,1] 上为正，故该多项式的符号即 f − g 的符号。
    """
    a = f.p * g.r - g.p * f.r
    b = f.p * g.s + f.q * g.r - g.p * f.s - g.q * f.r
    c = f.q * g.s - g.q * f.s
    return a, b, c


def _rational_sqrt(value: Fraction):
    numerator = value.numerator * value.denominator
    root = isqrt(numerator)
    if root * root != numerator:
        return None
    return Fraction(root, value.denominator)


def _has_root_in_unit_interval(a: Fraction, b: Fraction, c: Fraction) -> bool:
    """二次多项式在 (0,1] 内是否有根（仅用符号判断，不求根）"""
    at_zero = a
    at_one = a + b + c
    if at_one == 0:
        return True
    if at_zero * at_one < 0:
        return True
    vertex = -b / (2 * c)
    if not ZERO < vertex < ONE:
        return False
    at_vertex = a - b * b / (4 * c)
    return at_vertex == 0 or (at_zero != 0 and at_vertex * at_zero < 0)


def crossing_points(f: BetaFraction, g: BetaFraction):
    """
    求 f 与 g 在 (0,1] 内的全部交点。

    返回:
        IDENTICAL（f ≡ g），或升序排列的 Fraction 元组（可能为空）

    异常:
        DomainError: (0,1] 内存在无理交点
    """
    a, b, c = crossing_polynomial(f, g)
    if a == 0 and b == 0 and c == 0:
        return IDENTICAL

    roots = set()
    if c == 0:
        if b != 0:
            roots.add(-a / b)
    else:
        discriminant = b * b - 4 * a * c
        if discriminant >= 0:
            sqrt = _rational_sqrt(discriminant)
            if sqrt is None:
                if _has_root_in_unit_interval(a, b, c):
                    raise DomainError(f"{f.pretty()} 与 {g.pretty()} 在 (0,1] 内的交点不是有理数")
            else:
                roots.add((-b + sqrt) / (2 * c))
                roots.add((-b - sqrt) / (2 * c))

    return tuple(sorted(root for root in roots if ZERO < root <= ONE))


def crossing_point(f: BetaFraction, g: BetaFraction):
    """
    f 与 g 在 (0,1] 内的唯一交点。

    返回:
        IDENTICAL、None（无交点）或该交点

    异常:
        DomainError: 交点多于一个
    """
    points = crossing_points(f, g)
    if points is IDENTICAL:
        return IDENTICAL
    if not points:
        return None
    if len(points) > 1:
        listed = ", ".join(format_rational(point) for point in points)
        raise DomainError(f"{f.pretty()} 与 {g.pretty()} 在 (0,1] 内有多个交点: {listed}")
    return points[0]
