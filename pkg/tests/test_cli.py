"""命令行测试"""
import json

import pytest

from hstrata import __version__
from hstrata.core.models import CheckResult, VerificationReport


class TestEnumerateCommand:
    """enumerate 命令测试"""

    def test_json(self, run_cli):
        """测试 n = 2 的 JSON 输出"""
        result = run_cli("enumerate", "--n", "2", "--format", "json")
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data == {
            "n": "2",
            "total": "6",
            "counts": {"0": "2", "1": "3", "2": "1"},
            "matches_series": True,
        }

    def test_counts_only(self, run_cli):
        """测试只计数"""
        result = run_cli("enumerate", "--n", "3", "--counts-only", "--format", "json")
        assert result.exit_code == 0, result.output
        assert json.loads(result.output) == {"n": "3", "total": "26", "matches_series": True}

    def test_csv(self, run_cli):
        """测试 CSV 列顺序"""
        result = run_cli("enumerate", "--n", "2", "--format", "csv")
        assert result.exit_code == 0, result.output
        assert result.output == "n,dimension,count\n2,0,2\n2,1,3\n2,2,1\n"

    def test_table(self, run_cli):
        """测试默认表格输出"""
        result = run_cli("enumerate", "--n", "1")
        assert result.exit_code == 0, result.output
        assert "2" in result.output

    def test_cap_exit_code(self, run_cli):
        """测试超出上限时退出码为 2"""
        result = run_cli("enumerate", "--n", "9")
        assert result.exit_code == 2
        assert "--unsafe-no-cap" in result.output

    def test_deterministic_across_jobs(self, run_cli, temp_dir):
        """测试不同 worker 数输出逐字节一致"""
        single = temp_dir / "single.json"
        multi = temp_dir / "multi.json"
        first = run_cli("enumerate", "--n", "4", "--jobs", "1", "--format", "json", "--out", str(single))
        second = run_cli(
            "enumerate", "--n", "4", "--jobs", "3", "--prefix-depth", "3",
            "--format", "json", "--out", str(multi),
        )
        assert first.exit_code == 0 and second.exit_code == 0
        assert single.read_bytes() == multi.read_bytes()

    @pytest.mark.slow
    def test_deterministic_rank_six(self, run_cli, temp_dir):
        """测试 n = 6 时 --jobs 1 与 --jobs 8 一致"""
        outputs = []
        for jobs in ("1", "8"):
            path = temp_dir / f"jobs{jobs}.json"
            result = run_cli("enumerate", "--n", "6", "--jobs", jobs, "--format", "json", "--out", str(path))
            assert result.exit_code == 0
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1]


class TestGfCommand:
    """gf 命令测试"""

    def test_polynomials_and_evaluations(self, run_cli):
        """测试 p_1、p_2 与求值"""
        result = run_cli("gf", "--max-n", "2", "--eval", "1", "--eval", "0", "--format", "json")
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        polynomials = data["polynomials"]
        assert polynomials[1]["coefficients"] == ["1", "1"]
        assert polynomials[2]["coefficients"] == ["2", "3", "1"]
        assert polynomials[2]["evaluations"] == {"1": "6", "0": "2"}

    def test_rational_point(self, run_cli):
        """测试有理数求值点"""
        result = run_cli("gf", "--max-n", "1", "--eval", "1/2", "--format", "json")
        assert json.loads(result.output)["polynomials"][1]["evaluations"] == {"1/2": "3/2"}

    def test_csv(self, run_cli):
        """测试 CSV"""
        result = run_cli("gf", "--max-n", "1", "--format", "csv")
        assert result.output == "n,degree,coefficient\n0,0,1\n1,0,1\n1,1,1\n"

    def test_order_too_small(self, run_cli):
        """测试截断阶小于 max-n"""
        result = run_cli("gf", "--max-n", "5", "--order", "3")
        assert result.exit_code == 2

    def test_bad_eval(self, run_cli):
        """测试无法解析的求值点"""
        result = run_cli("gf", "--max-n", "1", "--eval", "abc")
        assert result.exit_code == 2


class TestDiagramCommand:
    """diagram 命令测试"""

    def test_figure(self, run_cli):
        """测试示例图"""
        result = run_cli("diagram", "--n", "4", "--bits", "16", "--format", "json")
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data["tau"] == "(1 -4)(-1 4)(2 3 -2 -3)"
        assert data["dimension"] == {"cycles": "1", "kernel": "1"}
        assert data["positions"] == ["2", "3", "5"]
        assert data["grid"] == [".#..", "###.", ".#..", "...."]

    def test_all_black(self, run_cli):
        """测试全集给出恒等元"""
        result = run_cli("diagram", "--n", "2", "--bits", "7", "--format", "json")
        data = json.loads(result.output)
        assert data["tau"] == "()"
        assert data["dimension"]["cycles"] == "0"

    def test_not_cauchon(self, run_cli):
        """测试非 Cauchon 图报出失败位置"""
        result = run_cli("diagram", "--n", "2", "--bits", "4")
        assert result.exit_code == 2
        assert "position 1" in result.output

    def test_bad_bits(self, run_cli):
        """测试非法位掩码"""
        assert run_cli("diagram", "--n", "2", "--bits", "zz").exit_code == 2
        assert run_cli("diagram", "--n", "2", "--bits", "ff").exit_code == 2

    def test_table(self, run_cli):
        """测试表格输出"""
        result = run_cli("diagram", "--n", "4", "--bits", "16", "--format", "table")
        assert result.exit_code == 0, result.output
        assert "(1 -4)(-1 4)(2 3 -2 -3)" in result.output


class TestVerifyCommand:
    """verify 命令测试"""

    def test_lw_passes(self, run_cli):
        """测试 lw 套件"""
        result = run_cli("verify", "lw", "--n", "3", "--format", "json")
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert data["suite"] == "lw"
        assert data["passed"] is True
        assert data["checks"][0]["checked"] == "64"

    def test_failure_exit_code(self, run_cli, monkeypatch):
        """测试校验失败时退出码为 1 并输出反例"""
        check = CheckResult("broken")
        check.fail("mismatch at n=2", {"n": "2", "diagram": "6", "expected": "1", "actual": "0"})
        monkeypatch.setattr(
            "hstrata.cli.verify_commands.run_suite",
            lambda name, options: VerificationReport(name, [check]),
        )
        result = run_cli("verify", "tau", "--format", "json")
        assert result.exit_code == 1
        data = json.loads(result.output)
        assert data["passed"] is False
        assert data["checks"][0]["counterexample"]["diagram"] == "6"

    def test_out_of_range(self, run_cli):
        """测试超出范围的秩为用法错误"""
        assert run_cli("verify", "bruhat", "--n", "6").exit_code == 2

    def test_unknown_suite(self, run_cli):
        """测试未知套件"""
        assert run_cli("verify", "nonsense").exit_code == 2


class TestPrimitiveRatioCommand:
    """primitive-ratio 命令测试"""

    def test_rows(self, run_cli):
        """测试前三行"""
        result = run_cli("primitive-ratio", "--max-n", "3", "--order", "10", "--format", "json")
        assert result.exit_code == 0, result.output
        data = json.loads(result.output)
        assert [row["ratio"] for row in data["rows"]] == ["1/2", "1/3", "7/26"]
        assert data["rows"][0]["total"] == "2"
        assert data["decreasing"] is True

    def test_csv(self, run_cli):
        """测试 CSV 列"""
        result = run_cli("primitive-ratio", "--max-n", "2", "--order", "5", "--format", "csv")
        assert result.output == (
            "n,total,primitive,ratio,decimal\n1,2,1,1/2,0.500000\n2,6,2,1/3,0.333333\n"
        )

    def test_truncation(self, run_cli):
        """测试 max-n 超出截断阶"""
        assert run_cli("primitive-ratio", "--max-n", "8", "--order", "5").exit_code == 2


class TestConfigCommand:
    """config 命令测试"""

    def test_set_and_show(self, run_cli, config_path):
        """测试设置后显示"""
        result = run_cli("config", "set", "enumeration.jobs", "4")
        assert result.exit_code == 0, result.output
        assert config_path.exists()
        shown = run_cli("config", "show")
        assert "jobs: 4" in shown.output

    def test_config_format_default(self, run_cli):
        """测试配置中的默认输出格式"""
        run_cli("config", "set", "output.format", "json")
        result = run_cli("enumerate", "--n", "1")
        assert json.loads(result.output)["total"] == "2"


class TestGlobalOptions:
    """全局选项测试"""

    def test_version(self, run_cli):
        """测试版本号"""
        result = run_cli("--version")
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_verbose_logs(self, run_cli):
        """测试 -v 不影响结果"""
        result = run_cli("-v", "enumerate", "--n", "1", "--format", "json")
        assert result.exit_code == 0
