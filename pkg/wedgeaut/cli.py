# wedgeaut/cli.py
"""
wedgeaut CLI entry point.

Reports go to stdout; diagnostics, warnings and errors go to stderr.
Exit codes: 0 computed, 2 usage/parse error, 3 reducibility undetermined,
4 group-table load error.
"""
import json
from pathlib import Path
from typing import List, Optional, Sequence

import click
from rich.table import Table

from wedgealg.core.hall_basis import basic_commutators, count_by_weight
from wedgespace.core.errors import ParseError, SpaceError, TableLoadError
from wedgespace.core.group_table import GroupTable
from wedgespace.core.models import WedgeInput
from wedgespace.core.parser import parse_wedge
from wedgespace.storage.table_loader import load_tables

from wedgeaut import __version__
from wedgeaut.config import CONFIG_FILE, STATE_DIR, ConfigError, WedgeConfig, load_config, render_config, validate_config_content
from wedgeaut.core.engine import InvalidWedgeError, UndeterminedReducibilityError, aut_order
from wedgeaut.core.reducibility import CRITERION, check_reducible
from wedgeaut.core.report import ReportRenderer, report_to_dict
from wedgeaut.utils.console import (
    console, info, success, warning, error,
    heading, show_welcome, confirm, setup_logging,
)


# ------------------------------
# Exit-code carrying exceptions
# ------------------------------

class _Failure(click.ClickException):
    def show(self, file=None):
        error(self.format_message())


class UsageFailure(_Failure):
    exit_code = 2


class ReducibilityFailure(_Failure):
    exit_code = 3


class TableFailure(_Failure):
    exit_code = 4


# ------------------------------
# Helpers
# ------------------------------

def _load_config(path: Optional[str]) -> WedgeConfig:
    try:
        return load_config(path)
    except ConfigError as e:
        raise UsageFailure(f"Invalid configuration: {e}")


def _parse(expr: str) -> WedgeInput:
    try:
        return parse_wedge(expr)
    except ParseError as e:
        raise UsageFailure(f"{e}\n{e.caret()}")
    except SpaceError as e:
        raise UsageFailure(str(e))


def _load_table(paths: Sequence[str]) -> GroupTable:
    try:
        table = load_tables(paths)
    except TableLoadError as e:
        raise TableFailure(f"Cannot load group table: {e}")
    for message in table.warnings:
        warning(message)
    return table


def _undetermined_message(e: UndeterminedReducibilityError) -> str:
    lines = ["Reducibility is undetermined; nothing was computed (use --assume-reducible to override)."]
    for p in e.pairs:
        lines.append(f"  pair ({p.r},{p.s}): {p.justification}")
    return "\n".join(lines)


# ------------------------------
# CLI 主入口
# ------------------------------

@click.group(invoke_without_command=True)
@click.version_option(__version__, message="wedgeaut v%(version)s")
@click.option("--verbose", is_flag=True, help="Debug logging on stderr")
@click.pass_context
def cli(ctx, verbose: bool):
    """🧮 wedgeaut - order of Aut of a wedge of suspensions"""
    setup_logging(verbose)
    if ctx.invoked_subcommand is None:
        show_welcome()
        click.echo(ctx.get_help())


# ------------------------------
# 命令 1: order
# ------------------------------

@cli.command()
@click.argument("expr")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable report")
@click.option("--explain", is_flag=True, help="List every evaluated factor, trivial ones included")
@click.option("--table", "tables", multiple=True, type=click.Path(dir_okay=False),
              help="Extra group-table JSON file (repeatable)")
@click.option("--max-weight", type=click.IntRange(min=1), default=None,
              help="Override the commutator weight bound")
@click.option("--assume-reducible", is_flag=True, help="Proceed when reducibility cannot be certified")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="Config file (default: .wedgeaut/config.yaml if present)")
def order(expr: str, as_json: bool, explain: bool, tables: Sequence[str],
          max_weight: Optional[int], assume_reducible: bool, config_path: Optional[str]):
    """📐 Compute the order of Aut(EXPR), e.g. "S2 v M(2,2)" """
    cfg = _load_config(config_path)
    explain = explain or cfg.explain
    assume_reducible = assume_reducible or cfg.assume_reducible
    max_weight = max_weight if max_weight is not None else cfg.max_weight

    wedge = _parse(expr)
    table = _load_table(list(cfg.tables) + list(tables))
    try:
        report = aut_order(wedge, table, assume_reducible=assume_reducible, max_weight=max_weight)
    except UndeterminedReducibilityError as e:
        raise ReducibilityFailure(_undetermined_message(e))
    except InvalidWedgeError as e:
        raise UsageFailure(str(e))

    if report.missing_entries:
        listed = ", ".join(f"{s} -> {t}" for s, t in report.missing_entries)
        warning(f"Missing table entries: {listed}")
    if as_json:
        click.echo(json.dumps(report_to_dict(report, explain=explain), indent=2))
    else:
        click.echo(ReportRenderer().render_report(report, explain=explain), nl=False)


# ------------------------------
# 命令 2: basis
# ------------------------------

@cli.command()
@click.option("-k", "k", type=click.IntRange(min=1), required=True, help="Number of generators")
@click.option("-w", "max_weight", type=click.IntRange(min=1), required=True, help="Maximal weight")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable listing")
def basis(k: int, max_weight: int, as_json: bool):
    """🔤 List basic commutators on K generators up to weight W"""
    commutators = basic_commutators(k, max_weight)
    counts = [(w, count_by_weight(k, w)) for w in range(1, max_weight + 1)]
    if as_json:
        click.echo(json.dumps({
            "k": k,
            "max_weight": max_weight,
            "commutators": [
                {"commutator": c.render(), "weight": c.weight, "multidegree": list(c.multidegree)}
                for c in commutators
            ],
            "counts": {str(w): n for w, n in counts},
        }, indent=2))
    else:
        text = ReportRenderer().render('basis', k=k, max_weight=max_weight,
                                       commutators=commutators, counts=counts)
        click.echo(text, nl=False)


# ------------------------------
# 命令 3: reducible
# ------------------------------

@cli.command()
@click.argument("expr")
def reducible(expr: str):
    """🔍 Show the per-pair reducibility check for EXPR"""
    wedge = _parse(expr)
    check = check_reducible(wedge)

    table = Table(title=f"Reducibility of {wedge}", show_header=True, header_style="bold magenta")
    table.add_column("Pair", style="cyan")
    table.add_column("Certified")
    table.add_column("Justification")
    for p in check.pairs:
        table.add_row(f"({p.r},{p.s})", "yes" if p.certified else "no", p.justification)
    console.print(table)
    console.print(f"criterion: {CRITERION}", markup=False)

    if not check.is_sufficient:
        raise ReducibilityFailure("Reducibility is undetermined for pair(s) "
                                  + ", ".join(f"({p.r},{p.s})" for p in check.failing_pairs))
    if wedge.k == 1:
        info("Single summand: reducible vacuously.")


# ------------------------------
# 命令 4: table
# ------------------------------

@cli.group()
def table():
    """📚 Inspect and check group tables"""


@table.command(name="show")
@click.option("--table", "tables", multiple=True, type=click.Path(dir_okay=False),
              help="Extra group-table JSON file (repeatable)")
def table_show(tables: Sequence[str]):
    """📋 List the merged table entries with provenance"""
    merged = _load_table(list(tables))
    out = Table(title=f"Group table (bundled v{merged.version})", show_header=True, header_style="bold magenta")
    out.add_column("Source", style="cyan")
    out.add_column("Target", style="cyan")
    out.add_column("Value")
    out.add_column("Provenance")
    for (source, target), entry in sorted(merged.entries.items()):
        out.add_row(source, target, entry.render_value(), entry.provenance)
    console.print(out)

    stems = Table(title="Stable stems", show_header=True, header_style="bold magenta")
    stems.add_column("Stem")
    stems.add_column("Group")
    for k, g in enumerate(merged.stable_stems):
        stems.add_row(str(k), g.render())
    console.print(stems)


@table.command(name="check")
@click.argument("path", type=click.Path(dir_okay=False))
def table_check(path: str):
    """✅ Load a user table and report self-check warnings"""
    heading(f"Checking {path}")
    merged = _load_table([path])
    if merged.warnings:
        warning(f"{len(merged.warnings)} consistency warning(s)")
    else:
        success(f"{path} loaded; {len(merged.entries)} entries in the merged table, no warnings")


# ------------------------------
# 命令 5: init / validate
# ------------------------------

@cli.command()
def init():
    """🔧 Create .wedgeaut/config.yaml"""
    heading("Project Initialization")
    if CONFIG_FILE.exists() and not confirm(f"{CONFIG_FILE} already exists. Overwrite?", default=False):
        info("Cancelled.")
        return
    STATE_DIR.mkdir(exist_ok=True)
    CONFIG_FILE.write_text(render_config(), encoding="utf-8")
    success(f"Generated: {CONFIG_FILE}")


@cli.command(name="validate")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None,
              help="Config file to validate (default: .wedgeaut/config.yaml)")
def config_validate(config_path: Optional[str]):
    """✅ Validate the configuration file"""
    path = Path(config_path) if config_path else CONFIG_FILE
    heading(f"Validating {path}")
    if not path.exists():
        raise UsageFailure(f"{path} not found. Run `wedgeaut init` first.")
    try:
        cfg = validate_config_content(path.read_text(encoding="utf-8"), source=path)
    except ConfigError as e:
        raise UsageFailure(f"Validation failed: {e}")
    for t in cfg.tables:
        if not Path(t).exists():
            warning(f"table file {t} does not exist")
    success(f"{path} is valid ({len(cfg.tables)} extra table(s))")


# ------------------------------
# 主入口
# ------------------------------

def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI without exiting the interpreter; returns the exit code."""
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, prog_name="wedgeaut", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        error("Aborted.")
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == '__main__':
    cli(obj={})
