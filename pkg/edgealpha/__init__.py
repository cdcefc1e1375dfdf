"""
EdgeAlpha：对数 del Pezzo 对 (S, (1−β)C) 的 α 不变量的精确推导、验证与界估计。
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
