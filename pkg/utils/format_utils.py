"""有理数格式化工具函数"""
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
import re

from edgealpha.exceptions import DomainError, UsageError

_RATIONAL_PATTERN = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """
    解析 "p/q" 或整数形式的有理数字符串

    拒绝小数写法以保证端到端精确。

    Args:
        text: 有理数字符串，支持以下格式：
            - '3/7' (分数)
            - '-2/4' (带符号，自动约分)
            - '1' (整数)

    Returns:
        约分后的 Fraction，分母为正

    Raises:
        UsageError: 小数、空串等非法输入（同时是 ValueError）
        DomainError: 分母为零

    Examples:
        >>> parse_rational('2/4')
        Fraction(1, 2)
        >>> parse_rational('1')
        Fraction(1, 1)
    """
    cleaned = text.strip() if isinstance(text, str) else ""
    if not _RATIONAL_PATTERN.match(cleaned):
        raise UsageError(f"有理数必须写成 p/q 形式（不接受小数），收到 {text!r}")

    if "/" in cleaned:
        numerator, denominator = cleaned.split("/")
        if int(denominator) == 0:
            raise DomainError(f"分母不能为零: {text!r}")
        return Fraction(int(numerator), int(denominator))
    return Fraction(int(cleaned))


def format_rational(value: Fraction, always_fraction: bool = False) -> str:
    """
    格式化有理数

    Args:
        value: 待格式化的有理数
        always_fraction: 为 True 时整数也写成 'n/1'（规范序列化使用）

    Examples:
        >>> format_rational(Fraction(5, 9))
        '5/9'
        >>> format_rational(Fraction(1))
        '1'
        >>> format_rational(Fraction(1), always_fraction=True)
        '1/1'
    """
    value = Fraction(value)
    if value.denominator == 1 and not always_fraction:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, places: int = 6) -> str:
    """
    有理数的十进制展示形式（仅用于展示，不参与任何比较）

    Examples:
        >>> format_decimal(Fraction(5, 9), 4)
        '0.5556'
    """
    value = Fraction(value)
    with localcontext() as context:
        context.prec = max(28, places + 20)
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        quantum = Decimal(1).scaleb(-places)
        return str(exact.quantize(quantum, rounding=ROUND_HALF_EVEN))
