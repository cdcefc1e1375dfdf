"""
异常定义模块：EdgeAlpha 全部业务异常的统一层级。

调用方只需捕获 EdgeAlphaError 即可拦截库内所有可预期错误；
CLI 层按异常类型映射退出码（UsageError → 2，GermFileError → 3）。
"""

from typing import Optional


class EdgeAlphaError(Exception):
    """EdgeAlpha 异常基类"""


class UsageError(EdgeAlphaError, ValueError):
    """参数不合法：空列表、未知类型、格不匹配、度数越界等"""


class DomainError(UsageError):
    """取值越界：β 不在 (0,1]、分母非正、分段不连续、交点非有理等"""


class GermStructureError(EdgeAlphaError, ValueError):
    """芽结构错误：树的拓扑序、卫星关系、邻近不等式或相交预算被破坏"""


class FixedPartNotLcError(GermStructureError):
    """固定部分本身在芽处不是对数典范的"""


class UnboundedThresholdError(EdgeAlphaError):
    """可缩放部分在所有点上的阶均为零，阈值无上界"""


class GermFileError(EdgeAlphaError):
    """
    芽文件解析错误，携带出错字段路径与（可得时的）行号。

    参数:
        message: 人类可读的错误描述
        field: 出错字段的点分路径，例如 "points.2.parent"
        line: JSON 文本中的行号（仅解码错误可得）
    """

    def __init__(self, message: str, field: str = "", line: Optional[int] = None):
        self.field = field
        self.line = line
        location = []
        if line is not None:
            location.append(f"第 {line} 行")
        if field:
            location.append(f"字段 {field}")
        prefix = f"[{', '.join(location)}] " if location else ""
        super().__init__(f"{prefix}{message}")


__all__ = [
    "EdgeAlphaError",
    "UsageError",
    "DomainError",
    "GermStructureError",
    "FixedPartNotLcError",
    "UnboundedThresholdError",
    "GermFileError",
]
