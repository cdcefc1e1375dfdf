"""
命令行模块：情形列表、α 求值与表格、芽文件阈值、界报告、局部不等式与全目录验证。

退出码约定：0 成功；1 验证失败；2 用法错误；3 输入文件格式错误。
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click
import typer

from edgealpha.bounds import bound_report, r_lower_bound
from edgealpha.catalog import (
    SurfaceConfig,
    alpha_engine,
    alpha_hat,
    all_configs,
    blowup_compare,
    declared_links,
    verify_catalog,
)
from edgealpha.cli.emitters import emit_csv, emit_json, emit_lines, emit_table
from edgealpha.cli.records import CSV_COLUMNS, alpha_record, case_record, symbolic_record
from edgealpha.exactmath import check_beta
from edgealpha.exceptions import (
    EdgeAlphaError,
    GermFileError,
    GermStructureError,
    UnboundedThresholdError,
    UsageError,
)
from edgealpha.germ import lct_at, lct_in_t, load_germ_file
from edgealpha.lattice import enumerate_rational_classes
from edgealpha.localineq import MultiplicityLedger, blowup_ledger_check, four_blowup_conditions
from utils.config_loader import load_config
from utils.format_utils import format_rational, parse_rational
from utils.logging_utils import get_logger, setup_logging

logger = get_logger(__name__)

PROG_NAME = "edgealpha"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


@dataclass
class Settings:
    """由配置文件与全局选项合成的运行期设置，通过 ctx.obj 下传"""

    default_format: OutputFormat = OutputFormat.TEXT
    decimal_places: int = 6
    max_workers: int = 4
    grid_denominator: int = 12


app = typer.Typer(
    name=PROG_NAME,
    help="对数 del Pezzo 对 (S, (1−β)C) 的 α 不变量精确计算与验证工具。",
    add_completion=False,
    no_args_is_help=True,
)
ineq_app = typer.Typer(help="局部不等式检验：四次爆破账本与爆破塔断言。", no_args_is_help=True)
app.add_typer(ineq_app, name="ineq")


# ==================== 参数辅助 ====================

def _settings(ctx: typer.Context) -> Settings:
    obj = ctx.find_root().obj
    return obj if isinstance(obj, Settings) else Settings()


def _rational(text: str, name: str) -> Fraction:
    try:
        return parse_rational(text)
    except UsageError as exc:
        raise click.BadParameter(str(exc), param_hint=name) from exc


def _beta(text: str) -> Fraction:
    try:
        return check_beta(_rational(text, "--beta"))
    except UsageError as exc:
        raise click.BadParameter(str(exc), param_hint="--beta") from exc


def _case(case_id: str) -> SurfaceConfig:
    try:
        return SurfaceConfig.from_id(case_id)
    except UsageError as exc:
        raise click.BadParameter(str(exc), param_hint="--case") from exc


def _format(ctx: typer.Context, value: Optional[OutputFormat]) -> OutputFormat:
    return value or _settings(ctx).default_format


# ==================== 全局选项 ====================

@app.callback()
def main_callback(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(None, "--log-level", help="日志级别，覆盖配置文件"),
    config_path: Optional[Path] = typer.Option(None, "--config", help="配置文件路径"),
) -> None:
    """读取配置并安装日志"""
    try:
        config = load_config(config_path)
    except (OSError, ValueError) as exc:
        raise click.UsageError(str(exc)) from exc

    try:
        setup_logging(log_level or config["logging"]["level"])
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--log-level") from exc

    ctx.obj = Settings(
        default_format=OutputFormat(config["output"]["default_format"]),
        decimal_places=config["output"]["decimal_places"],
        max_workers=config["verify"]["max_workers"],
        grid_denominator=config["table"]["grid_denominator"],
    )


# ==================== 目录 ====================

@app.command("cases")
def cases_command(
    ctx: typer.Context,
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", help="text 或 json"),
) -> None:
    """列出全部情形标识"""
    records = [case_record(config) for config in all_configs()]
    if _format(ctx, output_format) is OutputFormat.JSON:
        emit_json(records)
        return
    emit_table(
        "情形",
        ["case_id", "K²", "族", "配置", "S 为 KE"],
        [
            (r["case_id"], r["degree"], r["family"], r["variant"], "是" if r["kahler_einstein_surface"] else "否")
            for r in records
        ],
    )


@app.command("alpha")
def alpha_command(
    ctx: typer.Context,
    case_id: str = typer.Option(..., "--case", help="情形标识，见 `cases`"),
    beta: Optional[str] = typer.Option(None, "--beta", help="β，写作 p/q"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", help="text、json 或 csv"),
    engine: bool = typer.Option(False, "--engine", help="使用引擎推导值而非显式公式"),
) -> None:
    """给出 α̂(S,(1−β)C)：指定 β 时求值，否则输出整条分段函数"""
    settings = _settings(ctx)
    config = _case(case_id)
    fmt = _format(ctx, output_format)
    function = alpha_engine(config) if engine else alpha_hat(config)
    provenance = "engine" if engine else "hard-coded"

    if beta is None:
        record = symbolic_record(config, function, provenance)
        if fmt is OutputFormat.JSON:
            emit_json(record)
        elif fmt is OutputFormat.CSV:
            raise click.BadParameter("CSV 输出需要给定 --beta", param_hint="--format")
        else:
            emit_lines([f"{config.value}: {function.pretty()}", *function.describe()])
        return

    record = alpha_record(config, function, _beta(beta), settings.decimal_places, provenance)
    if fmt is OutputFormat.JSON:
        emit_json(record)
    elif fmt is OutputFormat.CSV:
        emit_csv([record])
    else:
        emit_lines([f"{record['piece_formula']} 在 β={record['beta']} 处 = {record['alpha_exact']}"])


def _grid_rows(config: SurfaceConfig, grid: Sequence[Fraction], places: int) -> List[Dict[str, Any]]:
    function = alpha_hat(config)
    return [alpha_record(config, function, beta, places) for beta in grid]


@app.command("table")
def table_command(
    ctx: typer.Context,
    grid: Optional[int] = typer.Option(None, "--grid", help="网格分母 N，采样 β = k/N"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="输出 CSV 路径，默认标准输出"),
    case_ids: Optional[List[str]] = typer.Option(None, "--case", help="只输出指定情形，可重复"),
) -> None:
    """在有理网格上采样全部情形的 α̂，输出 CSV"""
    settings = _settings(ctx)
    denominator = grid if grid is not None else settings.grid_denominator
    if denominator <= 0:
        raise click.BadParameter("网格分母必须为正整数", param_hint="--grid")
    configs = [_case(case_id) for case_id in case_ids] if case_ids else all_configs()
    points = [Fraction(k, denominator) for k in range(1, denominator + 1)]

    # 并行采样，map 保持输入顺序
    with ThreadPoolExecutor(max_workers=settings.max_workers) as executor:
        blocks = list(executor.map(lambda config: _grid_rows(config, points, settings.decimal_places), configs))
    try:
        emit_csv([row for block in blocks for row in block], CSV_COLUMNS, output)
    except OSError as exc:
        raise click.BadParameter(f"无法写入 {output}: {exc.strerror}", param_hint="--output") from exc
    logger.info("表格：%d 个情形 × %d 个网格点", len(configs), len(points))


@app.command("verify")
def verify_command(
    ctx: typer.Context,
    case_ids: Optional[List[str]] = typer.Option(None, "--case", help="只验证指定情形，可重复"),
) -> None:
    """用芽引擎重新推导每个情形的 α̂，并与显式公式精确比较"""
    settings = _settings(ctx)
    configs = [_case(case_id) for case_id in case_ids] if case_ids else all_configs()
    report = verify_catalog(configs, max_workers=settings.max_workers)

    lines = []
    for result in report.results:
        line = f"{result.status} {result.config.value}"
        if not result.passed:
            witness = format_rational(result.witness) if result.witness is not None else "?"
            line += f" (β={witness}: 公式 {result.hard_coded.pretty()}，引擎 {result.derived.pretty()})"
        lines.append(line)
    emit_lines(lines)
    if not report.all_passed:
        raise typer.Exit(code=EXIT_VERIFY_FAILED)


@app.command("links")
def links_command() -> None:
    """逐条检验目录声明的爆破链接 α̂(源) ≤ α̂(目标)"""
    lines = []
    for link in declared_links():
        comparison = blowup_compare(link.source, link.target, link)
        mark = "例外" if comparison.exceptional else "一般"
        suffix = f" β={format_rational(comparison.witness)}" if comparison.witness is not None else ""
        lines.append(
            f"{link.source.value} -> {link.target.value} [{mark}] {comparison.ordering.value}{suffix}"
        )
    emit_lines(lines)


# ==================== 芽与格 ====================

@app.command("lct")
def lct_command(
    file: Path = typer.Argument(..., help="芽 JSON 文件"),
    beta: Optional[str] = typer.Option(None, "--beta", help="β，写作 p/q；缺省时输出关于 β 的分段函数"),
) -> None:
    """计算芽文件的阈值 lct_t(β)"""
    config = load_germ_file(file)
    try:
        if beta is None:
            function = lct_in_t(config)
            emit_lines([function.pretty(), *function.describe()])
            return
        value = _beta(beta)
        emit_lines([f"lct(β={format_rational(value)}) = {format_rational(lct_at(config, value))}"])
    except (GermStructureError, UnboundedThresholdError) as exc:
        raise GermFileError(str(exc)) from exc


@app.command("lines")
def lines_command(
    ctx: typer.Context,
    degree: int = typer.Option(..., "--degree", help="曲面次数 K²"),
    m: int = typer.Option(1, "--m", help="反典范次数 1、2 或 3"),
    quadric: bool = typer.Option(False, "--quadric", help="使用 ℙ¹×ℙ¹ 的格"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", help="text 或 json"),
) -> None:
    """枚举 −K·D = m、D² = m − 2 的格类"""
    classes = enumerate_rational_classes(degree, m, quadric=quadric)
    if _format(ctx, output_format) is OutputFormat.JSON:
        emit_json(
            {
                "degree": 8 if quadric else degree,
                "m": m,
                "quadric": quadric,
                "count": len(classes),
                "classes": [str(item) for item in classes],
            }
        )
        return
    emit_lines([f"共 {len(classes)} 个类", *(str(item) for item in classes)])


# ==================== 界 ====================

@app.command("rbound")
def rbound_command(case_id: str = typer.Option(..., "--case", help="情形标识")) -> None:
    """α 判据给出的 R(S,C) 下界"""
    emit_lines([format_rational(r_lower_bound(_case(case_id)))])


@app.command("bounds")
def bounds_command(
    ctx: typer.Context,
    case_id: str = typer.Option(..., "--case", help="情形标识"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", help="text 或 json"),
) -> None:
    """R(S,C) 的界报告"""
    payload = bound_report(_case(case_id)).to_dict()
    if _format(ctx, output_format) is OutputFormat.JSON:
        emit_json(payload)
        return
    emit_table("R(S,C) 界报告", ["字段", "值"], [(key, "-" if value is None else value) for key, value in payload.items()])


# ==================== 局部不等式 ====================

@ineq_app.command("four-blowup")
def four_blowup_command(
    ctx: typer.Context,
    a: str = typer.Option(..., "--a"),
    x: str = typer.Option(..., "--x"),
    x1: str = typer.Option(..., "--x1"),
    x2: str = typer.Option(..., "--x2"),
    x3: str = typer.Option(..., "--x3"),
    lambda_beta: str = typer.Option(..., "--lambda-beta"),
    beta: str = typer.Option(..., "--beta"),
    k2: int = typer.Option(..., "--k2"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", help="text 或 json"),
) -> None:
    """四次爆破重数账本的条件表"""
    ledger = MultiplicityLedger(
        a=_rational(a, "--a"),
        x=_rational(x, "--x"),
        x1=_rational(x1, "--x1"),
        x2=_rational(x2, "--x2"),
        x3=_rational(x3, "--x3"),
        lambda_beta=_rational(lambda_beta, "--lambda-beta"),
        beta=_beta(beta),
        k2=k2,
    )
    result = four_blowup_conditions(ledger)
    if _format(ctx, output_format) is OutputFormat.JSON:
        emit_json(
            {
                "conditions": {name: holds for name, holds in zip(("i", "ii", "iii", "iv"), result.conditions)},
                "refinement_applies": result.refinement_applies,
                "verdict": result.verdict.value,
            }
        )
        return
    rows = [(name, "成立" if holds else "不成立") for name, holds in zip(("i", "ii", "iii", "iv"), result.conditions)]
    rows.append(("λβK² ≤ 1+3β", "是" if result.refinement_applies else "否"))
    rows.append(("结论", result.verdict.value))
    emit_table("四次爆破条件", ["条件", "结果"], rows)


@ineq_app.command("ledger")
def ledger_command(
    a: str = typer.Option(..., "--a"),
    m: str = typer.Option(..., "--m", help="逗号分隔的 m_0,m_1,…"),
    n: int = typer.Option(..., "--n"),
) -> None:
    """爆破塔各条断言的假设与结论"""
    values = [_rational(item, "--m") for item in m.split(",") if item.strip()]
    results = blowup_ledger_check(_rational(a, "--a"), values, n)
    emit_table(
        "爆破塔断言",
        ["条款", "假设", "假设成立", "结论", "断言"],
        [
            (r.name, r.hypothesis, "是" if r.hypothesis_holds else "否", r.conclusion, "是" if r.asserted else "否")
            for r in results
        ],
    )


# ==================== 入口 ====================

def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    执行一次命令行调用并返回退出码。

    参数:
        argv: 不含程序名的参数列表

    返回:
        int: 0、1、2 或 3

    关键实现细节:
        - 第一阶段：以非独立模式调用 click 命令，异常交由本函数映射
        - 第二阶段：click 用法错误与 UsageError 映射为 2，GermFileError 与其余文件读写错误映射为 3
    """
    args = list(argv) if argv is not None else []
    command = typer.main.get_command(app)

    # 第一阶段：调用
    try:
        result = command.main(args, prog_name=PROG_NAME, standalone_mode=False)
    # 第二阶段：异常映射
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return EXIT_USAGE
    except GermFileError as exc:
        typer.echo(f"芽文件错误: {exc}", err=True)
        return EXIT_BAD_INPUT
    except OSError as exc:
        typer.echo(f"文件错误: {exc}", err=True)
        return EXIT_BAD_INPUT
    except EdgeAlphaError as exc:
        typer.echo(f"错误: {exc}", err=True)
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK
