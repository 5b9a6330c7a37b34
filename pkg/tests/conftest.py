"""Pytest配置和fixtures"""
import pytest
import tempfile
from pathlib import Path

from click.testing import CliRunner

from hstrata.diagrams.reduced_word import Diagram, build_reduced_word
from hstrata.utils.config import Config


@pytest.fixture
def temp_dir():
    """临时目录"""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture
def word2():
    """n = 2 的阶梯约化字 s2 s1 s2"""
    return build_reduced_word(2)


@pytest.fixture
def word4():
    """n = 4 的阶梯约化字"""
    return build_reduced_word(4)


@pytest.fixture
def figure_diagram():
    """示例图 Δ = {2, 3, 5}"""
    return Diagram.from_hex(4, "16")


@pytest.fixture
def config_path(temp_dir):
    """临时配置文件路径（文件尚不存在）"""
    return temp_dir / "config.yaml"


@pytest.fixture
def temp_config(config_path):
    """临时配置"""
    return Config(config_path)


@pytest.fixture
def run_cli(config_path):
    """用临时配置调用 CLI"""
    from hstrata.cli.main import cli

    runner = CliRunner()

    def invoke(*args: str):
        return runner.invoke(cli, ["--config", str(config_path), *args])

    return invoke
