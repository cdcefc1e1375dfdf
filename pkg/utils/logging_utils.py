"""
日志工具模块：统一的 logger 获取入口与 coloredlogs 安装。
"""

import logging
from typing import Optional

import coloredlogs

ROOT_LOGGER_NAME = "edgealpha"
LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"

_installed_level: Optional[str] = None


def _level_names_mapping() -> dict:
    """返回级别名称到数值的映射（兼容 Python 3.10，3.11+ 才有 getLevelNamesMapping）。"""
    if hasattr(logging, "getLevelNamesMapping"):
        return logging.getLevelNamesMapping()
    return dict(logging._nameToLevel)


def get_logger(name: str) -> logging.Logger:
    """
    获取模块 logger；utils 下的模块也挂在 edgealpha 根 logger 之下。

    参数:
        name: 通常传入 __name__

    返回:
        logging.Logger: 对应的 logger 实例
    """
    if name.startswith(ROOT_LOGGER_NAME):
        return logging.getLogger(name)
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


def setup_logging(level: str = "WARNING") -> None:
    """
    在 edgealpha 根 logger 上安装彩色日志输出。

    参数:
        level: 日志级别名称，例如 "DEBUG"、"INFO"

    关键实现细节:
        - 第一阶段：校验级别名称
        - 第二阶段：同一级别只安装一次，级别变化时重新安装
    """
    # 第一阶段：级别校验
    normalized = str(level).upper()
    if normalized not in _level_names_mapping():
        raise ValueError(f"未知日志级别: {level}")

    # 第二阶段：安装
    global _installed_level
    if _installed_level == normalized:
        return
    coloredlogs.install(
        level=normalized,
        logger=logging.getLogger(ROOT_LOGGER_NAME),
        fmt=LOG_FORMAT,
    )
    _installed_level = normalized
