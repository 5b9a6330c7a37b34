"""生成函数命令"""
from fractions import Fraction
from typing import List, Optional, Tuple

import click
from rich.table import Table

from hstrata.cli.main import Context, handle_errors, pass_context, resolve_format
from hstrata.core.exceptions import TruncationError
from hstrata.series.counting import H_series
from hstrata.utils.output import FORMATS, emit, render_csv, render_json, render_tables

CSV_COLUMNS = ["n", "degree", "coefficient"]


def _format_rational(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _parse_points(values: Tuple[str, ...]) -> List[Fraction]:
    points = []
    for text in values:
        try:
            points.append(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise click.BadParameter(f"'{text}' is not a rational number", param_hint="--eval")
    return points


@click.command(name="gf")
@click.option("--max-n", type=int, help="输出 p_0 .. p_max-n（默认取 series.default_order）")
@click.option("--order", type=int, help="截断阶，不得小于 max-n（默认等于 max-n）")
@click.option("--eval", "eval_points", multiple=True, help="在 t = T 处求值，可重复，如 1、0、1/2")
@click.option("--format", "output_format", type=click.Choice(FORMATS), help="输出格式")
@click.option("--out", type=click.Path(dir_okay=False), help="输出到文件")
@pass_context
@handle_errors
def gf_command(
    ctx: Context,
    max_n: Optional[int],
    order: Optional[int],
    eval_points: Tuple[str, ...],
    output_format: Optional[str],
    out: Optional[str],
) -> None:
    """输出层计数多项式 p_n(t)"""
    points = _parse_points(eval_points)
    if max_n is None:
        max_n = ctx.config.get_int("series.default_order")
    if max_n < 0:
        raise click.BadParameter("must be non-negative", param_hint="--max-n")
    order = max_n if order is None else order
    if order < max_n:
        raise TruncationError(f"Order {order} is smaller than --max-n {max_n}")

    h = H_series(order)
    polynomials = []
    for n in range(max_n + 1):
        p = h.coefficient(n)
        polynomials.append({
            "n": str(n),
            "coefficients": p.to_json(),
            "evaluations": {_format_rational(t): _format_rational(p(t)) for t in points},
        })
    data = {"max_n": str(max_n), "order": str(order), "polynomials": polynomials}

    fmt = resolve_format(ctx, output_format)
    if fmt == "json":
        emit(render_json(data), out)
    elif fmt == "csv":
        rows = [
            {"n": item["n"], "degree": str(d), "coefficient": c}
            for item in polynomials
            for d, c in enumerate(item["coefficients"])
        ]
        emit(render_csv(rows, CSV_COLUMNS), out)
    else:
        table = Table(title=f"p_n(t)，截断阶 {order}")
        table.add_column("n", style="cyan", justify="right")
        table.add_column("p_n(t)", style="white")
        for t in points:
            table.add_column(f"t={_format_rational(t)}", style="green", justify="right")
        for n, item in enumerate(polynomials):
            row = [item["n"], str(h.coefficient(n))]
            row.extend(item["evaluations"].values())
            table.add_row(*row)
        emit(render_tables(table), out)
