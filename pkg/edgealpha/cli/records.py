"""
输出记录定义

本文件包含命令行发射的全部记录结构：
- α 采样记录（alpha / table 共用，JSON 与 CSV 同源）
- 情形列表记录
"""
from fractions import Fraction
from typing import Annotated, List, Literal, Optional, TypedDict

from edgealpha.catalog import SurfaceConfig
from edgealpha.exactmath import PiecewiseBetaFunction
from utils.format_utils import format_decimal, format_rational

Provenance = Literal["hard-coded", "engine"]

CSV_COLUMNS: List[str] = ["case_id", "beta", "alpha_exact", "alpha_decimal", "piece_formula"]


# ==================== α 记录 ====================

class OutputRecord(TypedDict):
    """
    单个 (情形, β) 的 α̂ 取值。

    所有比较都在精确有理数上完成；alpha_decimal 仅供展示。
    """
    case_id: Annotated[str, "情形标识，例如 'deg9'"]
    beta: Annotated[str, "β 的精确有理数字符串 'p/q'"]
    alpha_exact: Annotated[str, "α̂(β) 的精确有理数字符串"]
    alpha_decimal: Annotated[str, "α̂(β) 的十进制展示形式"]
    piece_formula: Annotated[str, "β 所在分段的分式，例如 '(1+3β)/(9β)'"]
    provenance: Annotated[Provenance, "显式公式（hard-coded）或引擎推导（engine）"]


class SymbolicRecord(TypedDict):
    """未给定 β 时的整条分段函数"""
    case_id: Annotated[str, "情形标识"]
    pieces: Annotated[str, "规范序列化形式 'lo..hi : (p+q*b)/(r+s*b); ...'"]
    breakpoints: Annotated[List[str], "内部断点"]
    provenance: Annotated[Provenance, "显式公式或引擎推导"]


# ==================== 情形列表记录 ====================

class CaseRecord(TypedDict):
    case_id: Annotated[str, "情形标识"]
    degree: Annotated[int, "K² 次数"]
    family: Annotated[str, "曲面族"]
    variant: Annotated[str, "几何配置描述"]
    kahler_einstein_surface: Annotated[bool, "S 本身是否 Kähler–Einstein"]


def alpha_record(
    config: SurfaceConfig,
    function: PiecewiseBetaFunction,
    beta: Fraction,
    places: int,
    provenance: Provenance = "hard-coded",
    value: Optional[Fraction] = None,
) -> OutputRecord:
    """在 β 处对 α̂ 求值并组装记录"""
    value = function.evaluate(beta) if value is None else value
    return OutputRecord(
        case_id=config.value,
        beta=format_rational(beta),
        alpha_exact=format_rational(value),
        alpha_decimal=format_decimal(value, places),
        piece_formula=function.piece_at(beta).fraction.pretty(),
        provenance=provenance,
    )


def symbolic_record(
    config: SurfaceConfig,
    function: PiecewiseBetaFunction,
    provenance: Provenance = "hard-coded",
) -> SymbolicRecord:
    return SymbolicRecord(
        case_id=config.value,
        pieces=function.serialize(),
        breakpoints=[format_rational(point) for point in function.breakpoints],
        provenance=provenance,
    )


def case_record(config: SurfaceConfig) -> CaseRecord:
    return CaseRecord(
        case_id=config.value,
        degree=config.degree,
        family=config.family.value,
        variant=config.variant,
        kahler_einstein_surface=config.kahler_einstein_surface,
    )
