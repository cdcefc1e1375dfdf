"""
芽文件模块：JSON 芽文档的模式校验与向领域对象的转换。

文档形如 {points:[{id,parent,satellite_of?}], fixed:[{mult,c0,c1}], scalable:[{mult,weight}]}，
有理数写作 "num/den" 字符串，parent 为 null 或 "ROOT" 表示根点。
"""

from pathlib import Path
from typing import Annotated, Any, Dict, List, Optional, Union

import orjson
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from edgealpha.exceptions import EdgeAlphaError, GermFileError
from edgealpha.germ.engine import FixedBranch, LinearCoefficient, ScalableBranch, WeightedGermConfig
from edgealpha.germ.tree import ROOT, BranchTrace, InfinitelyNearPoint, InfinitelyNearTree
from utils.format_utils import format_rational, parse_rational

Multiplicity = Annotated[int, Field(ge=0, strict=True)]
Weight = Annotated[int, Field(gt=0, strict=True)]


class PointModel(BaseModel):
    """树中一个点的文档形式"""

    model_config = ConfigDict(extra="forbid")

    id: str = Field(min_length=1)
    parent: Optional[str] = None
    satellite_of: Optional[str] = None

    @field_validator("parent")
    @classmethod
    def _root_alias(cls, value: Optional[str]) -> Optional[str]:
        return None if value == ROOT else value


class FixedModel(BaseModel):
    """固定分支：系数 c0 + c1·β"""

    model_config = ConfigDict(extra="forbid")

    mult: Dict[str, Multiplicity]
    c0: str
    c1: str = "0/1"
    label: str = ""

    @field_validator("c0", "c1")
    @classmethod
    def _rational_text(cls, value: str) -> str:
        try:
            parse_rational(value)
        except ValueError as exc:
            raise ValueError(str(exc)) from exc
        return value


class ScalableModel(BaseModel):
    """可缩放分支：整数权重"""

    model_config = ConfigDict(extra="forbid")

    mult: Dict[str, Multiplicity]
    weight: Weight
    label: str = ""


class GermDocument(BaseModel):
    """芽文件顶层结构"""

    model_config = ConfigDict(extra="forbid")

    points: List[PointModel] = Field(min_length=1)
    fixed: List[FixedModel] = Field(default_factory=list)
    scalable: List[ScalableModel] = Field(min_length=1)


def _field_path(location: tuple) -> str:
    return ".".join(str(part) for part in location)


def _to_config(document: GermDocument) -> WeightedGermConfig:
    """
    将已通过模式校验的文档转换为 WeightedGermConfig。

    关键实现细节:
        - 第一阶段：构造树，结构错误定位到 points
        - 第二阶段：逐条构造固定/可缩放分支，错误定位到对应下标
        - 第三阶段：整体不变量校验，错误定位到出错分支所在列表
    """
    # 第一阶段：树
    try:
        tree = InfinitelyNearTree(
            tuple(InfinitelyNearPoint(p.id, p.parent, p.satellite_of) for p in document.points)
        )
    except EdgeAlphaError as exc:
        raise GermFileError(str(exc), field="points") from exc

    # 第二阶段：分支
    fixed = []
    for index, item in enumerate(document.fixed):
        try:
            fixed.append(
                FixedBranch(
                    BranchTrace.of(item.mult, item.label),
                    LinearCoefficient(parse_rational(item.c0), parse_rational(item.c1)),
                )
            )
            WeightedGermConfig(tree, (fixed[-1],), (ScalableBranch(fixed[-1].trace, 1),))
        except EdgeAlphaError as exc:
            raise GermFileError(str(exc), field=f"fixed.{index}") from exc

    scalable = []
    for index, item in enumerate(document.scalable):
        try:
            scalable.append(ScalableBranch(BranchTrace.of(item.mult, item.label), item.weight))
            WeightedGermConfig(tree, (), (scalable[-1],))
        except EdgeAlphaError as exc:
            raise GermFileError(str(exc), field=f"scalable.{index}") from exc

    # 第三阶段：整体
    try:
        return WeightedGermConfig(tree, tuple(fixed), tuple(scalable))
    except EdgeAlphaError as exc:
        raise GermFileError(str(exc), field="scalable") from exc


def parse_germ_document(text: Union[str, bytes]) -> WeightedGermConfig:
    """
    解析芽 JSON 文本。

    异常:
        GermFileError: JSON 语法错误（带行号）、模式错误或不变量错误（带字段路径）
    """
    try:
        data: Any = orjson.loads(text)
    except orjson.JSONDecodeError as exc:
        raise GermFileError(f"JSON 语法错误: {exc.msg}", line=getattr(exc, "lineno", None)) from exc

    try:
        document = GermDocument.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise GermFileError(first["msg"], field=_field_path(first["loc"])) from exc

    return _to_config(document)


def load_germ_file(path: Union[str, Path]) -> WeightedGermConfig:
    """读取并解析芽文件"""
    file_path = Path(path)
    try:
        content = file_path.read_bytes()
    except OSError as exc:
        raise GermFileError(f"无法读取芽文件 {file_path}: {exc.strerror}") from exc
    return parse_germ_document(content)


def dump_germ_document(config: WeightedGermConfig) -> bytes:
    """WeightedGermConfig 的规范 JSON 形式（键排序）"""
    document: Dict[str, Any] = {
        "points": [
            {
                "id": point.id,
                "parent": point.parent,
                **({"satellite_of": point.satellite_of} if point.satellite_of else {}),
            }
            for point in config.tree.points
        ],
        "fixed": [
            {
                "mult": dict(branch.trace.mult),
                "c0": format_rational(branch.coefficient.c0, True),
                "c1": format_rational(branch.coefficient.c1, True),
                "label": branch.trace.label,
            }
            for branch in config.fixed
        ],
        "scalable": [
            {"mult": dict(branch.trace.mult), "weight": branch.weight, "label": branch.trace.label}
            for branch in config.scalable
        ],
    }
    return orjson.dumps(document, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2)
