"""枚举命令"""
import sys
from typing import Dict, Optional

import click
from rich.progress import Progress
from rich.table import Table

from hstrata.cli.main import Context, err_console, handle_errors, pass_context, resolve_format
from hstrata.enumeration.driver import count_diagrams, enumerate_histogram
from hstrata.series.counting import series_histogram, totals
from hstrata.utils.output import FORMATS, emit, render_csv, render_json, render_tables

CSV_COLUMNS = ["n", "dimension", "count"]
COUNTS_ONLY_CSV_COLUMNS = ["n", "total"]


@click.command(name="enumerate")
@click.option("--n", "n", type=int, required=True, help="秩 n")
@click.option("--counts-only", is_flag=True, help="只计数，不计算维数")
@click.option("--jobs", type=int, help="worker 数（默认取配置）")
@click.option("--prefix-depth", type=int, help="切分子树的前缀深度（默认取配置）")
@click.option("--unsafe-no-cap", "unsafe", is_flag=True, help="解除秩上限")
@click.option("--format", "output_format", type=click.Choice(FORMATS), help="输出格式")
@click.option("--out", type=click.Path(dir_okay=False), help="输出到文件")
@pass_context
@handle_errors
def enumerate_command(
    ctx: Context,
    n: int,
    counts_only: bool,
    jobs: Optional[int],
    prefix_depth: Optional[int],
    unsafe: bool,
    output_format: Optional[str],
    out: Optional[str],
) -> None:
    """枚举 Cauchon 图并统计各维数的层"""
    config = ctx.config
    jobs = jobs if jobs is not None else config.get_int("enumeration.jobs")
    if prefix_depth is None:
        prefix_depth = config.get_int("enumeration.prefix_depth")

    with Progress(console=err_console, transient=True, disable=not sys.stderr.isatty()) as progress:
        task = progress.add_task(f"[green]rank {n}", total=None)

        def update_progress(done: int, total: int) -> None:
            progress.update(task, completed=done, total=total)

        if counts_only:
            total = count_diagrams(
                n, jobs, prefix_depth, config.get_int("enumeration.cap_counts_only"),
                unsafe, update_progress,
            )
        else:
            histogram = enumerate_histogram(
                n, jobs, prefix_depth, config.get_int("enumeration.cap_with_dimensions"),
                unsafe, update_progress,
            )

    data: Dict = {"n": str(n)}
    if counts_only:
        data["total"] = str(total)
        data["matches_series"] = total == totals(n)
    else:
        data.update(histogram.to_dict())
        data["matches_series"] = histogram == series_histogram(n)

    fmt = resolve_format(ctx, output_format)
    if fmt == "json":
        emit(render_json(data), out)
    elif fmt == "csv":
        if counts_only:
            emit(render_csv([{"n": data["n"], "total": data["total"]}], COUNTS_ONLY_CSV_COLUMNS), out)
        else:
            rows = [
                {"n": str(n), "dimension": str(d), "count": str(c)}
                for d, c in enumerate(histogram.as_list())
            ]
            emit(render_csv(rows, CSV_COLUMNS), out)
    else:
        table = Table(title=f"秩 {n} 的 H-层")
        table.add_column("维数", style="cyan", justify="right")
        table.add_column("个数", style="green", justify="right")
        if not counts_only:
            for d, c in enumerate(histogram.as_list()):
                table.add_row(str(d), str(c))
        table.add_row("合计", data["total"], style="bold")
        table.caption = "与 p_n(t) 一致" if data["matches_series"] else "与 p_n(t) 不一致"
        emit(render_tables(table), out)
