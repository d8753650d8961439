# wedgeaut/config.py
"""
Project configuration (.wedgeaut/config.yaml).

Rendering of a fresh config from the packaged template, validation and
loading. Precedence is applied by the CLI: option > config file > default.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Union

import yaml

from wedgeaut.core.report import ReportRenderer

STATE_DIR = Path(".wedgeaut")
CONFIG_FILE = STATE_DIR / "config.yaml"

_KEYS = {"tables", "explain", "assume_reducible", "max_weight"}


class ConfigError(ValueError):
    """Invalid or unreadable configuration."""


@dataclass(frozen=True)
class WedgeConfig:
    tables: List[str] = field(default_factory=list)
    explain: bool = False
    assume_reducible: bool = False
    max_weight: Optional[int] = None
    source: Optional[Path] = None


def render_config(tables: Optional[List[str]] = None, explain: bool = False,
                  assume_reducible: bool = False, max_weight: Optional[int] = None) -> str:
    """Render the config template; the caller writes the file."""
    return ReportRenderer().render(
        'config',
        tables=tables or [],
        explain=explain,
        assume_reducible=assume_reducible,
        max_weight=max_weight,
    )


def validate_config_content(content: str, source: Optional[Path] = None) -> WedgeConfig:
    """Parse and check a config document. Empty content is the default config."""
    try:
        data = yaml.safe_load(content)
    except yaml.YAMLError as e:
        raise ConfigError(f"YAML syntax error: {e}") from e

    if data is None:
        return WedgeConfig(source=source)
    if not isinstance(data, dict):
        raise ConfigError("config must be a YAML mapping")

    unknown = set(data) - _KEYS
    if unknown:
        raise ConfigError(f"unknown key(s): {', '.join(sorted(unknown))}")

    tables = data.get("tables") or []
    if not isinstance(tables, list) or not all(isinstance(t, str) for t in tables):
        raise ConfigError("'tables' must be a list of file paths")

    for key in ("explain", "assume_reducible"):
        if not isinstance(data.get(key, False), bool):
            raise ConfigError(f"'{key}' must be true or false, got {data[key]!r}")

    max_weight = data.get("max_weight")
    if max_weight is not None and (not isinstance(max_weight, int) or isinstance(max_weight, bool) or max_weight < 1):
        raise ConfigError(f"'max_weight' must be a positive integer or null, got {max_weight!r}")

    # relative table paths: project root for .wedgeaut/config.yaml, else the file's directory
    if source is not None:
        root = source.parent.parent if source.parent.name == STATE_DIR.name else source.parent
        tables = [t if Path(t).is_absolute() else str(root / t) for t in tables]

    return WedgeConfig(
        tables=tables,
        explain=data.get("explain", False),
        assume_reducible=data.get("assume_reducible", False),
        max_weight=max_weight,
        source=source,
    )


def load_config(path: Union[str, Path, None] = None) -> WedgeConfig:
    """Load an explicit config file, or the project default if it exists."""
    if path is None:
        if not CONFIG_FILE.exists():
            return WedgeConfig()
        path = CONFIG_FILE
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e.strerror or e}") from e
    return validate_config_content(content, source=path)
