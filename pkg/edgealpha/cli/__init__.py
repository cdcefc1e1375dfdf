"""
命令行模块：typer 应用与退出码映射入口。
"""

from edgealpha.cli.app import app, run

__all__ = ["app", "run"]
