"""
配置加载测试：默认值补全、.env 覆盖与取值校验。
"""

import pytest

from utils.config_loader import load_config


@pytest.fixture
def config_file(tmp_path):
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    path = config_dir / "config.yaml"
    path.write_text("logging:\n  level: info\noutput:\n  decimal_places: 4\n", encoding="utf-8")
    return path


def _write_env(config_file, text):
    (config_file.parent.parent / ".env").write_text(text, encoding="utf-8")


class TestLoadConfig:
    def test_defaults_fill_missing_sections(self, config_file):
        config = load_config(config_file)
        assert config["logging"]["level"] == "INFO"
        assert config["output"] == {"default_format": "text", "decimal_places": 4}
        assert config["verify"]["max_workers"] == 4
        assert config["table"]["grid_denominator"] == 12

    def test_env_overrides_yaml(self, config_file):
        _write_env(config_file, "EDGEALPHA_OUTPUT_FORMAT=JSON\nEDGEALPHA_VERIFY_WORKERS=2\n")
        config = load_config(config_file)
        assert config["output"]["default_format"] == "json"
        assert config["verify"]["max_workers"] == 2

    def test_bundled_config(self):
        config = load_config()
        assert config["output"]["default_format"] in ("text", "json", "csv")

    @pytest.mark.parametrize(
        "env",
        [
            "EDGEALPHA_OUTPUT_FORMAT=xml\n",
            "EDGEALPHA_DECIMAL_PLACES=0\n",
            "EDGEALPHA_GRID_DENOMINATOR=1.5\n",
        ],
    )
    def test_invalid_values(self, config_file, env):
        _write_env(config_file, env)
        with pytest.raises(ValueError):
            load_config(config_file)

    def test_malformed_yaml(self, config_file):
        config_file.write_text("output: [json\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_config(config_file)

    def test_non_mapping_document(self, config_file):
        config_file.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_config(config_file)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_config(tmp_path / "absent.yaml")
