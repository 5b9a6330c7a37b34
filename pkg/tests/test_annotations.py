"""类型注解完整性测试（与 mypy 的 disallow_untyped_defs 设置一致）"""
import ast
from pathlib import Path
from typing import Iterator, List, Tuple

import pytest

PACKAGE_DIR = Path(__file__).resolve().parent.parent / "hstrata"


def _functions(path: Path) -> Iterator[Tuple[str, ast.AST]]:
    tree = ast.parse(path.read_text(encoding="utf-8"))
    for node in ast.walk(tree):
        if isinstance(node, (ast.FunctionDef, ast.AsyncFunctionDef)):
            yield f"{path.relative_to(PACKAGE_DIR.parent)}:{node.lineno} {node.name}", node


def _missing(node: ast.FunctionDef) -> List[str]:
    args = node.args
    params = args.posonlyargs + args.args + args.kwonlyargs
    missing = [
        a.arg for a in params if a.annotation is None and a.arg not in ("self", "cls")
    ]
    for star in (args.vararg, args.kwarg):
        if star is not None and star.annotation is None:
            missing.append(star.arg)
    if node.returns is None:
        missing.append("return")
    return missing


@pytest.mark.parametrize(
    "path", sorted(PACKAGE_DIR.rglob("*.py")), ids=lambda p: str(p.relative_to(PACKAGE_DIR))
)
def test_functions_fully_annotated(path):
    """测试每个函数的参数和返回值都有注解"""
    gaps = {name: _missing(node) for name, node in _functions(path)}
    assert {name: m for name, m in gaps.items() if m} == {}


def test_mypy_settings():
    """测试 pyproject 中保留了严格的 mypy 设置"""
    text = (PACKAGE_DIR.parent / "pyproject.toml").read_text(encoding="utf-8")
    mypy_section = text.split("[tool.mypy]", 1)[1].split("[[tool.mypy.overrides]]", 1)[0]
    assert "disallow_untyped_defs = true" in mypy_section
    assert "disallow_incomplete_defs = true" in mypy_section
