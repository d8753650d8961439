# wedgespace/storage/table_loader.py
"""
Loading of group tables.

The bundled table is YAML shipped in `wedgespace/data/`; user tables are
JSON with the same schema:

    {"entries": [{"source": "S6", "target": "S3", "group": "Z/12"}, ...],
     "stable_stems": ["Z", "Z/2", ...]}

Each entry carries exactly one of "group", "order" or "infinite": true.
User entries override bundled ones; user stems replace the bundled list.
"""

import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

import yaml

from wedgealg.core.abelian_groups import AbelianGroup, ExtOrder, GroupFormatError, group_order, parse_group

from ..core.errors import ParseError, SpaceError, TableLoadError
from ..core.group_table import GroupTable, TableEntry, in_stable_range
from ..core.models import Sphere
from ..core.parser import parse_space

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).parent.parent / "data"
BUNDLED_TABLE = DATA_DIR / "group_table.yaml"

_ENTRY_FIELDS = {"source", "target", "group", "order", "infinite", "provenance"}
_VALUE_FIELDS = ("group", "order", "infinite")


def _canonical(text: Any, field: str, where: str) -> str:
    if not isinstance(text, str):
        raise TableLoadError(f"'{field}' must be a string, got {text!r}", where)
    try:
        return parse_space(text).render()
    except (ParseError, SpaceError) as e:
        raise TableLoadError(f"invalid {field} {text!r}: {e}", where) from e


def parse_entry(raw: Any, where: str, default_provenance: str = "") -> TableEntry:
    """Validate one raw entry object into a TableEntry with canonical keys."""
    if not isinstance(raw, dict):
        raise TableLoadError(f"entry must be an object, got {type(raw).__name__}", where)
    unknown = set(raw) - _ENTRY_FIELDS
    if unknown:
        raise TableLoadError(f"unknown field(s) {sorted(unknown)}", where)
    source = _canonical(raw.get("source"), "source", where)
    target = _canonical(raw.get("target"), "target", where)
    where = f"{where} ({source} -> {target})"

    present = [f for f in _VALUE_FIELDS if f in raw]
    if len(present) != 1:
        raise TableLoadError("entry needs exactly one of 'group', 'order', 'infinite'", where)
    provenance = raw.get("provenance", default_provenance)
    if not isinstance(provenance, str):
        raise TableLoadError("'provenance' must be a string", where)

    kind = present[0]
    if kind == "group":
        if not isinstance(raw["group"], str):
            raise TableLoadError(f"'group' must be a string such as 'Z/2', got {raw['group']!r}", where)
        try:
            group = parse_group(raw["group"])
        except GroupFormatError as e:
            raise TableLoadError(str(e), where) from e
        return TableEntry(source, target, group_order(group), group, provenance)
    if kind == "order":
        value = raw["order"]
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise TableLoadError(f"'order' must be an integer >= 1, got {value!r}", where)
        return TableEntry(source, target, ExtOrder.finite(value), None, provenance)
    if raw["infinite"] is not True:
        raise TableLoadError("'infinite' may only be true", where)
    return TableEntry(source, target, ExtOrder.infinite(), None, provenance)


def parse_stems(raw: Any, where: str) -> Tuple[AbelianGroup, ...]:
    if not isinstance(raw, list) or not raw:
        raise TableLoadError("'stable_stems' must be a nonempty array of group strings", where)
    stems = []
    for k, text in enumerate(raw):
        try:
            stems.append(parse_group(text))
        except GroupFormatError as e:
            raise TableLoadError(str(e), f"{where} stable_stems[{k}]") from e
    if stems[0] != AbelianGroup.free(1):
        raise TableLoadError(f"stable_stems[0] must be Z, got {stems[0]}", where)
    return tuple(stems)


def parse_document(data: Any, origin: str) -> Tuple[List[TableEntry], Optional[Tuple[AbelianGroup, ...]], str]:
    if data is None:
        return [], None, ""
    if not isinstance(data, dict):
        raise TableLoadError("top level must be an object", origin)
    unknown = set(data) - {"entries", "stable_stems", "version"}
    if unknown:
        raise TableLoadError(f"unknown top-level key(s) {sorted(unknown)}", origin)
    raw_entries = data.get("entries", [])
    if not isinstance(raw_entries, list):
        raise TableLoadError("'entries' must be an array", origin)
    entries = [parse_entry(raw, f"{origin} entries[{i}]", default_provenance=origin)
               for i, raw in enumerate(raw_entries)]
    stems = parse_stems(data["stable_stems"], origin) if "stable_stems" in data else None
    return entries, stems, str(data.get("version", ""))


def self_check(entries: Iterable[TableEntry], stable_stems: Tuple[AbelianGroup, ...]) -> List[str]:
    """Consistency warnings: stable-range disagreements, vanishing conflicts, shadowed sphere entries."""
    stem_range = len(stable_stems) - 1
    warnings = []
    for e in entries:
        source, target = parse_space(e.source), parse_space(e.target)
        label = f"{e.source} -> {e.target}"
        if source.dim <= target.conn:
            if not e.order.is_trivial:
                warnings.append(f"{label}: table says {e.render_value()}, but the map set vanishes by connectivity")
            continue
        if not (isinstance(source, Sphere) and isinstance(target, Sphere)):
            continue
        a, b = source.n, target.n
        if a == b or (b % 2 == 0 and a == 2 * b - 1):
            warnings.append(f"{label}: entry is shadowed by a closed-form sphere rule")
        elif in_stable_range(a, b) and a - b <= stem_range:
            stem = group_order(stable_stems[a - b])
            if stem != e.order:
                warnings.append(f"{label}: table says {e.render_value()}, stable stem {a - b} has order {stem}")
    return warnings


def _read(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise TableLoadError(f"cannot read table: {e.strerror or e}", str(path)) from e


@lru_cache(maxsize=1)
def _bundled_document() -> Tuple[Tuple[TableEntry, ...], Tuple[AbelianGroup, ...], str]:
    try:
        data = yaml.safe_load(_read(BUNDLED_TABLE))
    except yaml.YAMLError as e:
        raise TableLoadError(f"bundled table is not valid YAML: {e}", str(BUNDLED_TABLE)) from e
    entries, stems, version = parse_document(data, "bundled")
    if stems is None:
        raise TableLoadError("bundled table has no stable_stems", "bundled")
    return tuple(entries), stems, version


def _merge(overlays: List[Tuple[List[TableEntry], Optional[Tuple[AbelianGroup, ...]]]]) -> GroupTable:
    bundled_entries, stems, version = _bundled_document()
    merged: Dict[Tuple[str, str], TableEntry] = {e.key: e for e in bundled_entries}
    for entries, user_stems in overlays:
        for e in entries:
            if e.key in merged:
                logger.debug("override %s -> %s", *e.key)
            merged[e.key] = e
        if user_stems is not None:
            stems = user_stems
    warnings = self_check(merged.values(), stems)
    if warnings:
        logger.debug("table self-check: %d warning(s)", len(warnings))
    return GroupTable(merged, stems, tuple(warnings), version)


@lru_cache(maxsize=1)
def bundled_table() -> GroupTable:
    return _merge([])


def parse_user_json(text: str, origin: str) -> Tuple[List[TableEntry], Optional[Tuple[AbelianGroup, ...]]]:
    if not text.strip():
        return [], None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TableLoadError(f"malformed JSON: {e}", origin) from e
    entries, stems, _ = parse_document(data, origin)
    return entries, stems


def load_table(path: Union[str, Path, None] = None, text: Optional[str] = None) -> GroupTable:
    """Bundled table merged with one user table given by path or text."""
    if path is not None and text is not None:
        raise ValueError("load_table takes a path or a text, not both")
    if path is not None:
        return load_tables([path])
    if text is not None:
        return _merge([parse_user_json(text, "<text>")])
    return bundled_table()


def load_tables(paths: Iterable[Union[str, Path]]) -> GroupTable:
    """Bundled table merged with user tables; later files override earlier ones."""
    overlays = []
    for p in paths:
        p = Path(p)
        overlays.append(parse_user_json(_read(p), str(p)))
    return _merge(overlays)
