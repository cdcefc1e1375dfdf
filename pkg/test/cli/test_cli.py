"""
命令行测试：退出码约定、三种输出格式与各子命令的端到端行为。
"""

import importlib
import time
from fractions import Fraction

import orjson
import pytest

from edgealpha.bounds import bound_report
from edgealpha.catalog import SurfaceConfig, all_configs, perturbed
from edgealpha.cli import run
from edgealpha.cli.emitters import dumps_json

# edgealpha.cli re-exports the Typer object as `app`, shadowing the submodule name
cli_app = importlib.import_module("edgealpha.cli.app")

ECKARDT_DOCUMENT = {
    "points": [{"id": "p1", "parent": None}],
    "fixed": [{"mult": {"p1": 1}, "c0": "1", "c1": "-1", "label": "C"}],
    "scalable": [{"mult": {"p1": 1}, "weight": 1, "label": f"L{index}"} for index in (1, 2, 3)],
}


def _invoke(capsys, *args):
    code = run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ==================== α 与表格 ====================


class TestAlpha:
    def test_text_at_beta(self, capsys):
        code, out, _ = _invoke(capsys, "alpha", "--case", "deg9", "--beta", "1/2")
        assert code == 0
        assert out.strip() == "(1+3β)/(9β) 在 β=1/2 处 = 5/9"

    def test_whole_function(self, capsys):
        code, out, _ = _invoke(capsys, "alpha", "--case", "deg9")
        assert code == 0
        assert out.splitlines()[0].startswith("deg9: ")
        assert "(1+3β)/(9β)" in out

    def test_json_keys_are_sorted(self, capsys):
        code, out, _ = _invoke(capsys, "alpha", "--case", "deg9", "--beta", "1/2", "--format", "json")
        assert code == 0
        payload = orjson.loads(out)
        assert list(payload) == sorted(payload)
        assert payload["alpha_exact"] == "5/9"
        assert payload["provenance"] == "hard-coded"

    def test_json_reemission_is_byte_identical(self, capsys):
        _, out, _ = _invoke(capsys, "alpha", "--case", "deg7-r-contact3", "--format", "json")
        assert dumps_json(orjson.loads(out)) + "\n" == out

    def test_engine_agrees_with_formula(self, capsys):
        code, out, _ = _invoke(
            capsys, "alpha", "--case", "f1-tangent", "--beta", "1/3", "--format", "json", "--engine"
        )
        assert code == 0
        payload = orjson.loads(out)
        assert payload["provenance"] == "engine"
        assert payload["alpha_exact"] == str(cli_app.alpha_hat(SurfaceConfig.F1_TANGENT)(Fraction(1, 3)))

    def test_csv_header(self, capsys):
        code, out, _ = _invoke(capsys, "alpha", "--case", "deg9", "--beta", "1", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "case_id,beta,alpha_exact,alpha_decimal,piece_formula"
        assert lines[1].startswith("deg9,1,1/3,")

    def test_csv_needs_beta(self, capsys):
        code, _, _ = _invoke(capsys, "alpha", "--case", "deg9", "--format", "csv")
        assert code == 2

    @pytest.mark.parametrize("beta", ["0", "3/2", "0.5"])
    def test_bad_beta(self, capsys, beta):
        code, _, _ = _invoke(capsys, "alpha", "--case", "deg9", "--beta", beta)
        assert code == 2

    def test_unknown_case(self, capsys):
        code, _, err = _invoke(capsys, "alpha", "--case", "deg10", "--beta", "1/2")
        assert code == 2
        assert err


class TestTable:
    def test_rows_agree_with_alpha(self, tmp_path, capsys):
        output = tmp_path / "alpha.csv"
        code, _, _ = _invoke(capsys, "table", "--grid", "2", "--case", "deg9", "--case", "deg5", "-o", str(output))
        assert code == 0
        lines = output.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "case_id,beta,alpha_exact,alpha_decimal,piece_formula"
        rows = [line.split(",") for line in lines[1:]]
        assert [(row[0], row[1], row[2]) for row in rows[:2]] == [("deg9", "1/2", "5/9"), ("deg9", "1", "1/3")]
        assert [row[0] for row in rows] == ["deg9", "deg9", "deg5", "deg5"]

    def test_nonpositive_grid(self, capsys):
        code, _, _ = _invoke(capsys, "table", "--grid", "0")
        assert code == 2

    def test_unwritable_output(self, tmp_path, capsys):
        target = tmp_path / "missing_dir" / "alpha.csv"
        code, _, err = _invoke(capsys, "table", "--grid", "2", "--case", "deg9", "-o", str(target))
        assert code == 2
        assert "--output" in err
        assert not target.exists()


# ==================== 验证与链接 ====================


class TestVerify:
    def test_full_catalog_passes_quickly(self, capsys):
        start = time.perf_counter()
        code, out, _ = _invoke(capsys, "verify")
        elapsed = time.perf_counter() - start
        assert code == 0
        assert out.splitlines() == [f"PASS {config.value}" for config in all_configs()]
        assert elapsed < 10

    def test_subset_passes(self, capsys):
        code, out, _ = _invoke(capsys, "verify", "--case", "deg9", "--case", "deg3-generic")
        assert code == 0
        assert out.splitlines() == ["PASS deg9", "PASS deg3-generic"]

    def test_failure_exit_code(self, capsys, monkeypatch):
        real = cli_app.verify_catalog
        monkeypatch.setattr(
            cli_app,
            "verify_catalog",
            lambda configs, max_workers: real(configs, max_workers=max_workers, formula=perturbed),
        )
        code, out, _ = _invoke(capsys, "verify", "--case", "deg9")
        assert code == 1
        assert out.startswith("FAIL deg9 (β=")


class TestLinks:
    def test_every_declared_link_is_listed(self, capsys):
        code, out, _ = _invoke(capsys, "links")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 33
        assert sum("violated" in line for line in lines) == 3
        assert any(line.startswith("deg9 -> f1-tangent [例外] violated β=") for line in lines)


# ==================== 芽文件 ====================


class TestLct:
    def test_threshold_at_beta(self, tmp_path, capsys):
        path = tmp_path / "eckardt.json"
        path.write_bytes(orjson.dumps(ECKARDT_DOCUMENT))
        code, out, _ = _invoke(capsys, "lct", str(path), "--beta", "1/2")
        assert code == 0
        assert out.strip() == "lct(β=1/2) = 1"

    def test_threshold_function(self, tmp_path, capsys):
        path = tmp_path / "eckardt.json"
        path.write_bytes(orjson.dumps(ECKARDT_DOCUMENT))
        code, out, _ = _invoke(capsys, "lct", str(path))
        assert code == 0
        assert "(1+β)/(3β)" in out

    def test_malformed_file(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        path.write_text('{"points": [', encoding="utf-8")
        code, _, err = _invoke(capsys, "lct", str(path), "--beta", "1/2")
        assert code == 3
        assert err.startswith("芽文件错误")

    def test_missing_file(self, tmp_path, capsys):
        code, _, _ = _invoke(capsys, "lct", str(tmp_path / "absent.json"))
        assert code == 3


# ==================== 格、界与局部不等式 ====================


class TestLattice:
    def test_cubic_lines(self, capsys):
        code, out, _ = _invoke(capsys, "lines", "--degree", "3")
        assert code == 0
        assert out.splitlines()[0] == "共 27 个类"

    def test_quadric_json(self, capsys):
        code, out, _ = _invoke(capsys, "lines", "--degree", "8", "--m", "2", "--quadric", "--format", "json")
        assert code == 0
        assert orjson.loads(out) == {
            "degree": 8,
            "m": 2,
            "quadric": True,
            "count": 2,
            "classes": ["(1,0)", "(0,1)"],
        }

    def test_invalid_m(self, capsys):
        code, _, _ = _invoke(capsys, "lines", "--degree", "3", "--m", "4")
        assert code == 2


class TestBounds:
    def test_rbound(self, capsys):
        code, out, _ = _invoke(capsys, "rbound", "--case", "f1-general")
        assert code == 0
        assert out.strip() == "3/7"

    def test_report_json(self, capsys):
        code, out, _ = _invoke(capsys, "bounds", "--case", "f1-general", "--format", "json")
        assert code == 0
        assert orjson.loads(out) == bound_report(SurfaceConfig.F1_GENERAL).to_dict()


class TestIneq:
    def _four_blowup(self, capsys, lambda_beta):
        return _invoke(
            capsys,
            "ineq", "four-blowup",
            "--a", "0", "--x", "0", "--x1", "0", "--x2", "0", "--x3", "0",
            "--lambda-beta", lambda_beta, "--beta", "1/2", "--k2", "1",
            "--format", "json",
        )

    def test_verdict_flips(self, capsys):
        code, out, _ = self._four_blowup(capsys, "3")
        assert code == 0
        assert orjson.loads(out) == {
            "conditions": {"i": True, "ii": True, "iii": True, "iv": True},
            "refinement_applies": False,
            "verdict": "obstructed",
        }
        code, out, _ = self._four_blowup(capsys, "3001/1000")
        assert orjson.loads(out)["verdict"] == "not-excluded"

    def test_invalid_ledger(self, capsys):
        code, _, _ = self._four_blowup(capsys, "0")
        assert code == 2

    def test_ledger_table(self, capsys):
        code, out, _ = _invoke(capsys, "ineq", "ledger", "--a", "1", "--m", "1,1,1", "--n", "2")
        assert code == 0
        assert "vii" in out


# ==================== 全局选项 ====================


class TestGlobalOptions:
    def test_cases_json(self, capsys):
        code, out, _ = _invoke(capsys, "cases", "--format", "json")
        assert code == 0
        records = orjson.loads(out)
        assert len(records) == 26
        assert records[0]["case_id"] == "deg9"

    def test_missing_config(self, tmp_path, capsys):
        code, _, _ = _invoke(capsys, "--config", str(tmp_path / "absent.yaml"), "cases")
        assert code == 2

    def test_config_sets_default_format(self, tmp_path, capsys):
        config_dir = tmp_path / "config"
        config_dir.mkdir()
        path = config_dir / "config.yaml"
        path.write_text("output:\n  default_format: json\n", encoding="utf-8")
        code, out, _ = _invoke(capsys, "--config", str(path), "alpha", "--case", "deg9", "--beta", "1")
        assert code == 0
        assert orjson.loads(out)["alpha_exact"] == "1/3"

    def test_config_directory(self, tmp_path, capsys):
        code, _, _ = _invoke(capsys, "--config", str(tmp_path), "cases")
        assert code == 2

    def test_malformed_yaml_config(self, tmp_path, capsys):
        path = tmp_path / "config.yaml"
        path.write_text("output: [json\n", encoding="utf-8")
        code, _, _ = _invoke(capsys, "--config", str(path), "cases")
        assert code == 2

    def test_no_arguments(self, capsys):
        code, _, _ = _invoke(capsys)
        assert code == 2

    def test_unknown_command(self, capsys):
        code, _, _ = _invoke(capsys, "frobnicate")
        assert code == 2
