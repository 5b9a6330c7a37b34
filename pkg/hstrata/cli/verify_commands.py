"""校验命令"""
from typing import Optional

import click
from rich.table import Table

from hstrata.cli.main import (
    EXIT_VERIFICATION_FAILED,
    Context,
    handle_errors,
    pass_context,
    resolve_format,
)
from hstrata.utils.output import FORMATS, emit, render_csv, render_json, render_tables
from hstrata.verification.suites import SUITE_NAMES, SuiteOptions, run_suite

CSV_COLUMNS = ["suite", "name", "passed", "checked", "detail"]


@click.command(name="verify")
@click.argument("suite", type=click.Choice(SUITE_NAMES), default="all")
@click.option("--n", "n", type=int, help="只检查该秩（默认检查套件的全部秩）")
@click.option("--seed", type=int, help="抽样种子（默认取配置）")
@click.option("--samples", type=int, help="n = 6, 7 的抽样个数（默认取配置）")
@click.option("--unsafe-no-cap", "unsafe", is_flag=True, help="允许超出套件范围的秩")
@click.option("--format", "output_format", type=click.Choice(FORMATS), help="输出格式")
@click.option("--out", type=click.Path(dir_okay=False), help="输出到文件")
@pass_context
@handle_errors
def verify_command(
    ctx: Context,
    suite: str,
    n: Optional[int],
    seed: Optional[int],
    samples: Optional[int],
    unsafe: bool,
    output_format: Optional[str],
    out: Optional[str],
) -> None:
    """运行不变量校验套件，失败时退出码为 1"""
    config = ctx.config
    options = SuiteOptions(
        n=n,
        seed=seed if seed is not None else config.get_int("verification.seed"),
        samples=samples if samples is not None else config.get_int("verification.samples"),
        max_exhaustive_n=config.get_int("verification.max_exhaustive_n"),
        unsafe=unsafe,
        ratio_order=config.get_int("series.ratio_order"),
    )
    report = run_suite(suite, options)

    fmt = resolve_format(ctx, output_format)
    if fmt == "json":
        emit(render_json(report.to_dict()), out)
    elif fmt == "csv":
        rows = [
            {
                "suite": report.suite,
                "name": check.name,
                "passed": str(check.passed).lower(),
                "checked": str(check.checked),
                "detail": check.detail,
            }
            for check in report.checks
        ]
        emit(render_csv(rows, CSV_COLUMNS), out)
    else:
        table = Table(title=f"校验套件 {report.suite}")
        table.add_column("检查项", style="white")
        table.add_column("结果", justify="center")
        table.add_column("检查数", style="cyan", justify="right")
        table.add_column("说明", style="yellow")
        for check in report.checks:
            status = "[green]通过[/green]" if check.passed else "[red]失败[/red]"
            table.add_row(check.name, status, str(check.checked), check.detail)
        emit(render_tables(table), out)

    if not report.passed:
        ctx_click = click.get_current_context()
        ctx_click.exit(EXIT_VERIFICATION_FAILED)
