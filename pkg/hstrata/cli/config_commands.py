"""配置命令"""
import click
import yaml
from rich.console import Console

from hstrata.cli.main import Context, handle_errors, pass_context

console = Console()


@click.group(name="config")
def config_group() -> None:
    """查看和修改配置"""
    pass


@config_group.command(name="show")
@pass_context
def show_config(ctx: Context) -> None:
    """显示当前配置（默认值与配置文件合并后）"""
    console.print(f"[dim]# {ctx.config.config_path}[/dim]")
    click.echo(yaml.dump(ctx.config.list_all(), default_flow_style=False, allow_unicode=True), nl=False)


@config_group.command(name="set")
@click.argument("key")
@click.argument("value")
@pass_context
@handle_errors
def set_config(ctx: Context, key: str, value: str) -> None:
    """设置配置项，VALUE 按 YAML 解析（例如 8、true、json）"""
    try:
        parsed = yaml.safe_load(value)
    except yaml.YAMLError:
        parsed = value
    ctx.config.set(key, parsed)
    console.print(f"[green]✓ {key} = {parsed!r}[/green]")


@config_group.command(name="reset")
@click.confirmation_option(prompt="确定恢复默认配置吗？")
@pass_context
@handle_errors
def reset_config(ctx: Context) -> None:
    """恢复默认配置"""
    ctx.config.reset()
    console.print(f"[green]✓ 已恢复默认配置: {ctx.config.config_path}[/green]")
