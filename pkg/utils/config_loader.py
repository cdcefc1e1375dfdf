"""
配置加载模块：负责读取 YAML 与环境变量，提供显式验证后的统一配置字典。
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import dotenv_values

OUTPUT_FORMATS = ("text", "json", "csv")

_SECTIONS = ("logging", "output", "verify", "table")

_DEFAULTS: Dict[str, Dict[str, Any]] = {
    "logging": {"level": "WARNING"},
    "output": {"default_format": "text", "decimal_places": 6},
    "verify": {"max_workers": 4},
    "table": {"grid_denominator": 12},
}


def _positive_int(config: Dict[str, Any], section: str, key: str) -> None:
    value = config[section].get(key)
    try:
        number = int(value)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{section}.{key} 必须是正整数，收到 {value!r}") from exc
    if isinstance(value, bool) or number <= 0 or str(number) != str(value).strip():
        raise ValueError(f"{section}.{key} 必须是正整数，收到 {value!r}")
    config[section][key] = number


def load_config(config_path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    加载配置文件并应用环境变量覆盖，返回经过校验的配置字典。

    参数:
        config_path: 配置文件路径，默认 config/config.yaml；.env 始终取自同一目录的上一级

    返回:
        Dict[str, Any]: 合并且校验后的配置数据。

    异常:
        FileNotFoundError: 配置文件不存在
        ValueError: YAML 语法、结构或取值非法

    关键实现细节:
        - 第一阶段：定位配置路径并确保配置文件存在
        - 第二阶段：读取 YAML 内容并以默认值补全配置段
        - 第三阶段：加载 .env 变量并按映射覆盖 YAML 值
        - 第四阶段：校验输出格式与各项正整数
    """

    # 第一阶段：路径解析与存在性校验
    project_root = Path(__file__).resolve().parent.parent
    path = Path(config_path) if config_path is not None else project_root / "config" / "config.yaml"
    env_path = path.resolve().parent.parent / ".env"

    if not path.exists():
        raise FileNotFoundError(f"缺少配置文件 {path}")

    # 第二阶段：读取 YAML 并准备配置段
    config: Dict[str, Any] = {}
    with path.open("r", encoding="utf-8") as config_file:
        try:
            loaded_config = yaml.safe_load(config_file) or {}
        except yaml.YAMLError as exc:
            raise ValueError(f"{path.name} 不是合法的 YAML: {exc}") from exc
        if not isinstance(loaded_config, dict):
            raise ValueError(f"{path.name} 内容必须为字典结构")
        config.update(loaded_config)

    for section in _SECTIONS:
        section_value = config.get(section)
        if not isinstance(section_value, dict):
            config[section] = {}
        for key, default in _DEFAULTS[section].items():
            config[section].setdefault(key, default)

    # 第三阶段：环境变量覆盖
    env_vars = dotenv_values(env_path)
    mapping: Dict[str, tuple[str, str]] = {
        "EDGEALPHA_LOG_LEVEL": ("logging", "level"),
        "EDGEALPHA_OUTPUT_FORMAT": ("output", "default_format"),
        "EDGEALPHA_DECIMAL_PLACES": ("output", "decimal_places"),
        "EDGEALPHA_VERIFY_WORKERS": ("verify", "max_workers"),
        "EDGEALPHA_GRID_DENOMINATOR": ("table", "grid_denominator"),
    }

    for env_key, (section, key) in mapping.items():
        env_value = env_vars.get(env_key)
        if env_value:
            config[section][key] = env_value

    # 第四阶段：取值校验
    output_format = str(config["output"]["default_format"]).lower()
    if output_format not in OUTPUT_FORMATS:
        raise ValueError(
            f"output.default_format 必须是 {', '.join(OUTPUT_FORMATS)} 之一，收到 {config['output']['default_format']!r}"
        )
    config["output"]["default_format"] = output_format
    config["logging"]["level"] = str(config["logging"]["level"]).upper()

    _positive_int(config, "output", "decimal_places")
    _positive_int(config, "verify", "max_workers")
    _positive_int(config, "table", "grid_denominator")

    return config
