"""
Console output helpers built on rich.

`console` carries reports (stdout); `err_console` carries every diagnostic
(stderr), so the report stream stays machine-readable.
"""
import logging

from rich.console import Console as RichConsole
from rich.logging import RichHandler
from rich.markup import escape
from rich.theme import Theme

# 自定义主题
CUSTOM_THEME = Theme({
    "info": "cyan bold",
    "success": "green bold",
    "warning": "yellow bold",
    "error": "red bold",
    "heading": "bold underline",
    "path": "magenta",
    "order": "bold white",
})

console = RichConsole(theme=CUSTOM_THEME, soft_wrap=True)
err_console = RichConsole(theme=CUSTOM_THEME, soft_wrap=True, stderr=True)


# --- diagnostics (stderr) ---

def info(message: str):
    """青色信息提示"""
    err_console.print(f"💡 [info]INFO[/info]: {escape(message)}")


def success(message: str):
    """绿色成功提示"""
    err_console.print(f"✅ [success]SUCCESS[/success]: {escape(message)}")


def warning(message: str):
    """黄色警告提示"""
    err_console.print(f"⚠️  [warning]WARNING[/warning]: {escape(message)}")


def error(message: str):
    """红色错误提示"""
    err_console.print(f"❌ [error]ERROR[/error]: {escape(message)}")


def heading(title: str):
    """标题输出"""
    err_console.print(f"\n🎯 [heading]{escape(title)}[/heading]\n")


def show_welcome():
    """欢迎横幅"""
    err_console.print("\n" + "═" * 50, style="bold blue")
    err_console.print("🧮 [bold green]wedgeaut[/bold green] - orders of self-equivalence groups of wedges")
    err_console.print("═" * 50 + "\n", style="bold blue")


def setup_logging(verbose: bool = False):
    """Route library log records to stderr through rich."""
    handler = RichHandler(console=err_console, show_time=False, show_path=False, markup=False)
    root = logging.getLogger()
    for h in list(root.handlers):
        if isinstance(h, RichHandler):
            root.removeHandler(h)
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def confirm(prompt: str, default: bool = True) -> bool:
    """Y/N question on the diagnostic stream."""
    yes_no = "[Y/n]" if default else "[y/N]"
    response = err_console.input(escape(f"❓ {prompt} {yes_no}: ")).strip().lower()
    if not response:
        return default
    return response in ("y", "yes")
