"""单个图的检视命令"""
from typing import Optional

import click
from rich.table import Table

from hstrata.cli.main import Context, handle_errors, pass_context, resolve_format
from hstrata.diagrams.grid import diagram_to_staircase, symmetric_grid
from hstrata.diagrams.reduced_word import Diagram, build_reduced_word, w_delta
from hstrata.pipes.kernel import kernel_dimension
from hstrata.pipes.pipe_dreams import classify_cycles, require_cauchon, tau
from hstrata.utils.output import FORMATS, emit, render_csv, render_json, render_tables

CSV_COLUMNS = ["kind", "cycle", "size", "parity", "contributes"]


@click.command(name="diagram")
@click.option("--n", "n", type=int, required=True, help="秩 n")
@click.option("--bits", required=True, help="位置子集的十六进制位掩码（第 k-1 位对应位置 k）")
@click.option("--format", "output_format", type=click.Choice(FORMATS), help="输出格式")
@click.option("--out", type=click.Path(dir_okay=False), help="输出到文件")
@pass_context
@handle_errors
def diagram_command(
    ctx: Context, n: int, bits: str, output_format: Optional[str], out: Optional[str]
) -> None:
    """检视一个 Cauchon 图：网格、w^Δ、τ_Δ 与维数"""
    word = build_reduced_word(n)
    d = Diagram.from_hex(n, bits)
    require_cauchon(word, d)

    grid = symmetric_grid(diagram_to_staircase(word, d))
    endpoints = tau(grid)
    classification = classify_cycles(endpoints)
    data = {
        "n": str(n),
        "bits": d.to_hex(),
        "positions": [str(k) for k in d.positions()],
        "grid": grid.render_ascii(),
        "w_delta": w_delta(word, d).to_window_string(),
        "tau": endpoints.cycle_notation(),
        "cycles": [cycle.to_dict() for cycle in classification.cycles],
        "dimension": {
            "cycles": str(classification.dimension),
            "kernel": str(kernel_dimension(endpoints)),
        },
    }

    fmt = resolve_format(ctx, output_format)
    if fmt == "json":
        emit(render_json(data), out)
    elif fmt == "csv":
        rows = [
            {key: str(value).lower() if isinstance(value, bool) else value
             for key, value in cycle.items()}
            for cycle in data["cycles"]
        ]
        emit(render_csv(rows, CSV_COLUMNS), out)
    else:
        summary = Table(title=f"图 {data['bits']}（n = {n}）", show_header=False)
        summary.add_column("项目", style="yellow")
        summary.add_column("值", style="white")
        summary.add_row("位置", " ".join(data["positions"]) or "∅")
        summary.add_row("网格", "\n".join(data["grid"]))
        summary.add_row("w^Δ", data["w_delta"])
        summary.add_row("τ_Δ", data["tau"])
        summary.add_row("维数（轮换）", data["dimension"]["cycles"])
        summary.add_row("维数（核）", data["dimension"]["kernel"])

        cycles = Table(title="分组轮换")
        for column in CSV_COLUMNS:
            cycles.add_column(column)
        for cycle in data["cycles"]:
            cycles.add_row(*(str(cycle[column]) for column in CSV_COLUMNS))
        emit(render_tables(summary, cycles), out)
