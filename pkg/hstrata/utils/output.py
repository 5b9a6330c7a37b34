"""输出渲染：json / csv / table"""
import io
import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import click
import pandas as pd
from rich.console import Console
from rich.table import Table

FORMATS = ["json", "csv", "table"]


def render_json(data: Any) -> str:
    """固定缩进和键顺序，不含时间戳"""
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def render_csv(rows: List[Dict[str, str]], columns: Sequence[str]) -> str:
    """按给定列顺序写 CSV，换行统一为 \\n"""
    frame = pd.DataFrame(rows, columns=list(columns))
    return frame.to_csv(index=False, lineterminator="\n")


def render_tables(*tables: Table) -> str:
    """把 rich 表格渲染成纯文本"""
    buffer = io.StringIO()
    console = Console(file=buffer, width=100, color_system=None, force_terminal=False)
    for table in tables:
        console.print(table)
    return buffer.getvalue()


def emit(text: str, out: Optional[str] = None) -> None:
    """
    输出渲染结果

    Args:
        text: 渲染后的文本
        out: 输出文件路径，None 时写 stdout
    """
    if out is None:
        click.echo(text, nl=False)
        return
    Path(out).expanduser().write_text(text, encoding="utf-8")
