"""本原比例命令"""
from typing import Optional

import click
from rich.table import Table

from hstrata.cli.main import Context, handle_errors, pass_context, resolve_format
from hstrata.series.counting import primitive_ratio_rows
from hstrata.utils.output import FORMATS, emit, render_csv, render_json, render_tables

CSV_COLUMNS = ["n", "total", "primitive", "ratio", "decimal"]


@click.command(name="primitive-ratio")
@click.option("--max-n", type=int, required=True, help="输出 n = 1 .. max-n")
@click.option("--order", type=int, help="截断阶（默认取 series.ratio_order）")
@click.option("--format", "output_format", type=click.Choice(FORMATS), help="输出格式")
@click.option("--out", type=click.Path(dir_okay=False), help="输出到文件")
@pass_context
@handle_errors
def primitive_ratio_command(
    ctx: Context,
    max_n: int,
    order: Optional[int],
    output_format: Optional[str],
    out: Optional[str],
) -> None:
    """本原 H-素理想在全部 H-素理想中的比例"""
    if max_n < 1:
        raise click.BadParameter("must be at least 1", param_hint="--max-n")
    if order is None:
        order = ctx.config.get_int("series.ratio_order")
    rows = primitive_ratio_rows(max_n, order)
    ratios = [row.ratio for row in rows]
    decreasing = all(later < earlier for earlier, later in zip(ratios, ratios[1:]))

    fmt = resolve_format(ctx, output_format)
    if fmt == "json":
        data = {
            "max_n": str(max_n),
            "order": str(order),
            "rows": [row.to_dict() for row in rows],
            "decreasing": decreasing,
        }
        emit(render_json(data), out)
    elif fmt == "csv":
        emit(render_csv([row.to_dict() for row in rows], CSV_COLUMNS), out)
    else:
        table = Table(title=f"本原比例（截断阶 {order}）")
        for column, style in zip(CSV_COLUMNS, ["cyan", "white", "white", "green", "green"]):
            table.add_column(column, style=style, justify="right")
        for row in rows:
            item = row.to_dict()
            table.add_row(*(item[column] for column in CSV_COLUMNS))
        table.caption = "严格递减" if decreasing else "不是严格递减"
        emit(render_tables(table), out)
