# wedgespace/core/group_table.py
"""
Order oracle for mapping sets [A, T] and homotopy groups of spheres.

Answers come from an ordered list of rules; the first rule that fires
decides. Closed-form rules encode connectivity vanishing and Serre
finiteness, everything else is table data (bundled or user-supplied).
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

from wedgealg.core.abelian_groups import (
    AbelianGroup, ExtOrder, aut_cyclic_order, ext_group, group_order,
)
from wedgealg.core.order_arithmetic import mul

from .models import Moore, SpaceDesc, Sphere, SuspendedSummand

logger = logging.getLogger(__name__)

TableKey = Tuple[str, str]


class Rule(Enum):
    VANISHING = "vanishing"
    SPHERE_BELOW = "sphere-below"
    SPHERE_DEGREE = "sphere-degree"
    SPHERE_HOPF = "sphere-hopf"
    STABLE_STEM = "stable-stem"
    TABLE = "table"
    SPHERE_AUT = "sphere-aut"
    MOORE_AUT = "moore-aut"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TableEntry:
    """One mapping-set value. `group` is None for order-only and infinite entries."""
    source: str
    target: str
    order: ExtOrder
    group: Optional[AbelianGroup] = None
    provenance: str = ""

    @property
    def key(self) -> TableKey:
        return (self.source, self.target)

    def render_value(self) -> str:
        if self.group is not None:
            return self.group.render()
        if self.order.is_infinite:
            return "infinite"
        return f"order {self.order}"


@dataclass(frozen=True)
class GroupTable:
    entries: Mapping[TableKey, TableEntry] = field(default_factory=dict)
    stable_stems: Tuple[AbelianGroup, ...] = ()
    warnings: Tuple[str, ...] = ()
    version: str = ""

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))
        object.__setattr__(self, "stable_stems", tuple(self.stable_stems))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def stable_range(self) -> int:
        """Largest stem S with a known stable value."""
        return len(self.stable_stems) - 1

    def lookup(self, source: str, target: str) -> Optional[TableEntry]:
        return self.entries.get((source, target))

    def stem_order(self, k: int) -> Optional[ExtOrder]:
        if 0 <= k <= self.stable_range:
            return group_order(self.stable_stems[k])
        return None


@dataclass(frozen=True)
class Resolution:
    """An answer together with the rule that produced it.

    `missing_key` names the table entry whose absence made the order Unknown.
    """
    order: ExtOrder
    rule: Rule
    missing_key: Optional[TableKey] = None


def in_stable_range(a: int, b: int) -> bool:
    return b >= (a - b) + 2


def resolve_sphere_pi(a: int, b: int, table: GroupTable) -> Resolution:
    """pi_a(S^b)."""
    if a < b:
        return Resolution(ExtOrder.finite(1), Rule.SPHERE_BELOW)
    if a == b:
        return Resolution(ExtOrder.infinite(), Rule.SPHERE_DEGREE)
    if b % 2 == 0 and a == 2 * b - 1:
        return Resolution(ExtOrder.infinite(), Rule.SPHERE_HOPF)
    if in_stable_range(a, b):
        stem = table.stem_order(a - b)
        if stem is not None:
            return Resolution(stem, Rule.STABLE_STEM)
    entry = table.lookup(f"S{a}", f"S{b}")
    if entry is not None:
        return Resolution(entry.order, Rule.TABLE)
    return Resolution(ExtOrder.unknown(), Rule.UNKNOWN, (f"S{a}", f"S{b}"))


def sphere_pi_order(a: int, b: int, table: Optional[GroupTable] = None) -> ExtOrder:
    if table is None:
        from wedgespace.storage.table_loader import bundled_table
        table = bundled_table()
    return resolve_sphere_pi(a, b, table).order


def resolve_mapping(source: SpaceDesc, target: SpaceDesc, table: GroupTable) -> Resolution:
    if source.dim <= target.conn:
        return Resolution(ExtOrder.finite(1), Rule.VANISHING)
    if isinstance(source, Sphere) and isinstance(target, Sphere):
        return resolve_sphere_pi(source.n, target.n, table)
    key = (source.render(), target.render())
    entry = table.lookup(*key)
    if entry is not None:
        return Resolution(entry.order, Rule.TABLE)
    return Resolution(ExtOrder.unknown(), Rule.UNKNOWN, key)


def mapping_group_order(source: SpaceDesc, target: SpaceDesc, table: GroupTable) -> ExtOrder:
    return resolve_mapping(source, target, table).order


def resolve_summand_aut(s: SuspendedSummand, table: GroupTable) -> Resolution:
    """Order of Aut(s).

    Spheres have Aut = Z/2. For M(q,n) the sequence
    0 -> Ext(Z/q, pi_{n+1}) -> Aut(M(q,n)) -> Aut(Z/q) -> 1 multiplies orders,
    which needs pi_{n+1}(M(q,n)) as a group.
    """
    space = s.space
    if isinstance(space, Sphere):
        return Resolution(ExtOrder.finite(2), Rule.SPHERE_AUT)
    if isinstance(space, Moore):
        key = (f"S{space.n + 1}", space.render())
        entry = table.lookup(*key)
        if entry is None or entry.group is None:
            if entry is not None:
                logger.warning("%s -> %s is order-only; Aut(%s) needs the group", *key, space.render())
            return Resolution(ExtOrder.unknown(), Rule.UNKNOWN, key)
        ext = ext_group(AbelianGroup.cyclic(space.q), entry.group)
        return Resolution(mul(group_order(ext), aut_cyclic_order(space.q)), Rule.MOORE_AUT)
    return Resolution(ExtOrder.unknown(), Rule.UNKNOWN)


def summand_aut_order(s: SuspendedSummand, table: GroupTable) -> ExtOrder:
    return resolve_summand_aut(s, table).order
