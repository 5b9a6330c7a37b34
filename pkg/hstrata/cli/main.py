"""主CLI入口"""
import functools
import logging
from pathlib import Path
from typing import Any, Callable, Optional

import click
from rich.console import Console
from rich.logging import RichHandler

from hstrata import __version__
from hstrata.core.exceptions import HStrataError
from hstrata.utils.config import Config, get_config, init_config

# 日志和错误信息走 stderr，stdout 只放结果
err_console = Console(stderr=True)

EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2


# 全局上下文
class Context:
    """CLI上下文"""

    def __init__(self) -> None:
        self.config: Optional[Config] = None


pass_context = click.make_pass_decorator(Context, ensure=True)


def _setup_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def fail(message: str, code: int = EXIT_USAGE) -> None:
    """打印红色错误信息并以 code 退出"""
    err_console.print(f"[red]错误: {message}[/red]", soft_wrap=True)
    click.get_current_context().exit(code)


def handle_errors(func: Callable) -> Callable:
    """把领域异常和写文件失败转换为退出码 2"""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except HStrataError as e:
            logging.getLogger(func.__module__).debug(f"{type(e).__name__}: {e}")
            fail(str(e))
        except OSError as e:
            fail(f"I/O failure: {e}")

    return wrapper


def resolve_format(ctx: Context, output_format: Optional[str]) -> str:
    return output_format or ctx.config.get("output.format", "table")


@click.group()
@click.version_option(version=__version__)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="配置文件路径")
@click.option("-v", "--verbose", count=True, help="输出日志（-vv 为调试级别）")
@pass_context
def cli(ctx: Context, config_path: Optional[str], verbose: int) -> None:
    """HStrata - B 型量子矩阵 H-层的枚举与校验工具"""
    _setup_logging(verbose)
    if config_path:
        ctx.config = init_config(Path(config_path))
    else:
        ctx.config = get_config()


# 导入子命令
from hstrata.cli import (  # noqa: E402
    config_commands,
    diagram_commands,
    enumerate_commands,
    gf_commands,
    ratio_commands,
    verify_commands,
)

cli.add_command(enumerate_commands.enumerate_command)
cli.add_command(gf_commands.gf_command)
cli.add_command(verify_commands.verify_command)
cli.add_command(diagram_commands.diagram_command)
cli.add_command(ratio_commands.primitive_ratio_command)
cli.add_command(config_commands.config_group)


if __name__ == "__main__":
    cli()
