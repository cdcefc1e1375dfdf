"""
发射模块：文本（rich 表格）、JSON（orjson 规范排序键）与 CSV（pandas）三种输出。
"""

from pathlib import Path
from typing import Any, Iterable, List, Mapping, Optional, Sequence

import orjson
import pandas as pd
import typer
from rich.console import Console
from rich.table import Table

from edgealpha.cli.records import CSV_COLUMNS


def _console() -> Console:
    # 每次调用重新绑定当前 stdout，CliRunner 替换 stdout 后仍然有效
    return Console(markup=False, highlight=False, soft_wrap=True)


def dumps_json(payload: Any) -> str:
    """规范 JSON：键排序，UTF-8，无多余空白；同一载荷总是得到同一字节串"""
    return orjson.dumps(payload, option=orjson.OPT_SORT_KEYS).decode("utf-8")


def emit_json(payload: Any) -> None:
    typer.echo(dumps_json(payload))


def csv_text(rows: Iterable[Mapping[str, Any]], columns: Sequence[str] = tuple(CSV_COLUMNS)) -> str:
    frame = pd.DataFrame(list(rows), columns=list(columns))
    return frame.to_csv(index=False, lineterminator="\n")


def emit_csv(
    rows: Iterable[Mapping[str, Any]],
    columns: Sequence[str] = tuple(CSV_COLUMNS),
    output: Optional[Path] = None,
) -> None:
    """写入 output（给定时）或标准输出"""
    text = csv_text(rows, columns)
    if output is None:
        typer.echo(text, nl=False)
        return
    output.write_text(text, encoding="utf-8")


def emit_table(title: str, columns: List[str], rows: Iterable[Sequence[Any]]) -> None:
    table = Table(title=title)
    for index, column in enumerate(columns):
        table.add_column(column, no_wrap=index == 0)
    for row in rows:
        table.add_row(*(str(cell) for cell in row))
    _console().print(table)


def emit_lines(lines: Iterable[str]) -> None:
    for line in lines:
        typer.echo(line)
