"""
曲面配置模块：(次数, 几何配置) 情形的完整分类，每个情形对应一个稳定的 kebab-case 标识。
"""

from enum import Enum
from typing import Dict, List, Tuple

from edgealpha.exceptions import UsageError


class SurfaceFamily(str, Enum):
    """曲面族"""

    PLANE = "plane"
    QUADRIC = "quadric"
    HIRZEBRUCH_ONE = "f1"
    DEL_PEZZO = "del-pezzo"


class SurfaceConfig(str, Enum):
    """
    全部配置情形。

    命名规则：deg<次数>-<变体>；次数 8 分为二次曲面 ℙ¹×ℙ¹ 与 𝔽₁ 两族。
    """

    DEG9 = "deg9"
    DEG8_QUADRIC = "deg8-quadric"
    F1_TANGENT = "f1-tangent"
    F1_GENERAL = "f1-general"
    DEG7_EDGE_POINT = "deg7-edge-point"
    DEG7_L_TANGENT = "deg7-l-tangent"
    DEG7_R_CONTACT3 = "deg7-r-contact3"
    DEG7_R_CONTACT2 = "deg7-r-contact2"
    DEG6_LINE_POINT = "deg6-line-point"
    DEG6_CONIC_TANGENT = "deg6-conic-tangent"
    DEG6_GENERIC = "deg6-generic"
    DEG5 = "deg5"
    DEG4_LINE_POINT = "deg4-line-point"
    DEG4_CONIC_PAIR = "deg4-conic-pair"
    DEG4_GENERIC = "deg4-generic"
    DEG3_ECKARDT_ON_C = "deg3-eckardt-on-c"
    DEG3_ECKARDT_OFF_C = "deg3-eckardt-off-c"
    DEG3_LINE_CONIC_TANGENT = "deg3-line-conic-tangent"
    DEG3_CUSP_MEETS_C_ONCE = "deg3-cusp-meets-c-once"
    DEG3_GENERIC = "deg3-generic"
    DEG2_TACNODE_ON_C = "deg2-tacnode-on-c"
    DEG2_TACNODE_OFF_C = "deg2-tacnode-off-c"
    DEG2_CUSP_ON_C = "deg2-cusp-on-c"
    DEG2_GENERIC = "deg2-generic"
    DEG1_NO_CUSPIDAL = "deg1-no-cuspidal"
    DEG1_CUSPIDAL = "deg1-cuspidal"

    @classmethod
    def from_id(cls, case_id: str) -> "SurfaceConfig":
        try:
            return cls(case_id)
        except ValueError as exc:
            raise UsageError(f"未知情形 {case_id!r}，可用 `cases` 查看全部标识") from exc

    @property
    def degree(self) -> int:
        return _METADATA[self][0]

    @property
    def family(self) -> SurfaceFamily:
        return _METADATA[self][1]

    @property
    def variant(self) -> str:
        return _METADATA[self][2]

    @property
    def is_quadric(self) -> bool:
        return self.family is SurfaceFamily.QUADRIC

    @property
    def kahler_einstein_surface(self) -> bool:
        """S 本身是否具有 Kähler–Einstein 度量：不是 𝔽₁ 且 K² ≠ 7"""
        return self.family is not SurfaceFamily.HIRZEBRUCH_ONE and self.degree != 7


_METADATA: Dict[SurfaceConfig, Tuple[int, SurfaceFamily, str]] = {
    SurfaceConfig.DEG9: (9, SurfaceFamily.PLANE, "ℙ²"),
    SurfaceConfig.DEG8_QUADRIC: (8, SurfaceFamily.QUADRIC, "ℙ¹×ℙ¹"),
    SurfaceConfig.F1_TANGENT: (8, SurfaceFamily.HIRZEBRUCH_ONE, "某条纤维 F 与 C 相切"),
    SurfaceConfig.F1_GENERAL: (8, SurfaceFamily.HIRZEBRUCH_ONE, "纤维均不与 C 相切"),
    SurfaceConfig.DEG7_EDGE_POINT: (7, SurfaceFamily.DEL_PEZZO, "E_1∩L 或 E_2∩L 在 C 上"),
    SurfaceConfig.DEG7_L_TANGENT: (7, SurfaceFamily.DEL_PEZZO, "L_1 或 L_2 与 C 相切"),
    SurfaceConfig.DEG7_R_CONTACT3: (7, SurfaceFamily.DEL_PEZZO, "R 在 C∩L 处与 C 三阶相切"),
    SurfaceConfig.DEG7_R_CONTACT2: (7, SurfaceFamily.DEL_PEZZO, "R 在 C∩L 处与 C 二阶相切"),
    SurfaceConfig.DEG6_LINE_POINT: (6, SurfaceFamily.DEL_PEZZO, "两直线交点在 C 上"),
    SurfaceConfig.DEG6_CONIC_TANGENT: (6, SurfaceFamily.DEL_PEZZO, "二次曲线在直线点处与 C 相切"),
    SurfaceConfig.DEG6_GENERIC: (6, SurfaceFamily.DEL_PEZZO, "一般位置"),
    SurfaceConfig.DEG5: (5, SurfaceFamily.DEL_PEZZO, "一般位置"),
    SurfaceConfig.DEG4_LINE_POINT: (4, SurfaceFamily.DEL_PEZZO, "两直线交点在 C 上"),
    SurfaceConfig.DEG4_CONIC_PAIR: (4, SurfaceFamily.DEL_PEZZO, "C_1+C_2∼−K 且二者与 C 相切于同一点"),
    SurfaceConfig.DEG4_GENERIC: (4, SurfaceFamily.DEL_PEZZO, "一般位置"),
    SurfaceConfig.DEG3_ECKARDT_ON_C: (3, SurfaceFamily.DEL_PEZZO, "C 上有 Eckardt 点"),
    SurfaceConfig.DEG3_ECKARDT_OFF_C: (3, SurfaceFamily.DEL_PEZZO, "有 Eckardt 点但不在 C 上"),
    SurfaceConfig.DEG3_LINE_CONIC_TANGENT: (3, SurfaceFamily.DEL_PEZZO, "直线与二次曲线相切于 C 上一点"),
    SurfaceConfig.DEG3_CUSP_MEETS_C_ONCE: (3, SurfaceFamily.DEL_PEZZO, "尖点三次曲线与 C 只交于一点"),
    SurfaceConfig.DEG3_GENERIC: (3, SurfaceFamily.DEL_PEZZO, "一般位置"),
    SurfaceConfig.DEG2_TACNODE_ON_C: (2, SurfaceFamily.DEL_PEZZO, "C 上有切结点曲线的奇点"),
    SurfaceConfig.DEG2_TACNODE_OFF_C: (2, SurfaceFamily.DEL_PEZZO, "有切结点曲线但奇点不在 C 上"),
    SurfaceConfig.DEG2_CUSP_ON_C: (2, SurfaceFamily.DEL_PEZZO, "C 上有尖点曲线的奇点"),
    SurfaceConfig.DEG2_GENERIC: (2, SurfaceFamily.DEL_PEZZO, "一般位置"),
    SurfaceConfig.DEG1_NO_CUSPIDAL: (1, SurfaceFamily.DEL_PEZZO, "|−K| 中没有尖点曲线"),
    SurfaceConfig.DEG1_CUSPIDAL: (1, SurfaceFamily.DEL_PEZZO, "|−K| 中有尖点曲线"),
}


def all_configs() -> List[SurfaceConfig]:
    """按声明顺序列出全部情形"""
    return list(SurfaceConfig)


def configs_of_degree(degree: int, quadric: bool = False) -> List[SurfaceConfig]:
    """同一次数（同一族）下的全部变体"""
    return [
        config
        for config in SurfaceConfig
        if config.degree == degree and config.is_quadric == quadric
    ]
