"""
Berman 型普适下界：α(X,(1−β)D) ≥ min{1, 1/(Mβ)} 及由此得到的 R 下界 (n+1)/(nM)。
"""

from fractions import Fraction
from math import factorial

from edgealpha.exactmath import BetaFraction, PiecewiseBetaFunction, RationalLike, check_beta, min_envelope
from edgealpha.exceptions import UsageError

_TABLE = {2: 9, 3: 64}


def _check_dimension(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise UsageError(f"维数 n 必须是 ≥ 2 的整数，收到 {n!r}")
    return n


def berman_constant(n: int) -> int:
    """
    常数 M：n = 2 时为 9，n = 3 时为 64，其余按精确大整数公式
    3ⁿ(2ⁿ−1)ⁿ(n+1)^{n(n+2)(2ⁿ−1)}(2n(n+1)(n+2)!)^{n−1}。
    """
    _check_dimension(n)
    if n in _TABLE:
        return _TABLE[n]
    mersenne = 2 ** n - 1
    return (
        3 ** n
        * mersenne ** n
        * (n + 1) ** (n * (n + 2) * mersenne)
        * (2 * n * (n + 1) * factorial(n + 2)) ** (n - 1)
    )


def berman_lower_bound(n: int, beta: RationalLike) -> Fraction:
    """min{1, 1/(Mβ)}"""
    value = check_beta(beta)
    return min(Fraction(1), 1 / (berman_constant(n) * value))


def berman_envelope(n: int) -> PiecewiseBetaFunction:
    """min{1, 1/(Mβ)} 作为分段函数，供逐点符号比较"""
    return min_envelope([BetaFraction.constant(1), BetaFraction.over_beta(1, 0, berman_constant(n))])


def berman_r_bound(n: int) -> Fraction:
    """R(X,D) ≥ (n+1)/(nM)"""
    _check_dimension(n)
    return Fraction(n + 1, n * berman_constant(n))
