# wedgeaut/core/models.py
"""
Report data structures for the order calculator.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple

from wedgealg.core.abelian_groups import ExtOrder
from wedgealg.core.hall_basis import Commutator, Multidegree
from wedgealg.core.order_arithmetic import power
from wedgespace.core.group_table import Rule, TableKey
from wedgespace.core.models import SpaceDesc, WedgeInput


class FactorKind(str, Enum):
    AUT_SUMMAND = "aut-summand"
    WEIGHT_ONE_PAIR = "weight-1 pair"
    HIGHER_COMMUTATOR = "higher-commutator"


class ReducibilityMode(str, Enum):
    CHECKED = "checked"
    ASSUMED = "assumed"


class NoteKind(str, Enum):
    ORDERED_PAIR = "ordered-pair"
    LEADING_SUMMAND = "leading-summand"


@dataclass(frozen=True)
class PairCheck:
    """Reducibility evidence for summands r < s (1-based)."""
    r: int
    s: int
    certified: bool
    direction: Optional[Tuple[int, int]]
    justification: str

    def to_dict(self) -> dict:
        return {
            "summands": [self.r, self.s],
            "certified": self.certified,
            "direction": list(self.direction) if self.direction else None,
            "justification": self.justification,
        }


@dataclass(frozen=True)
class ReducibilityCheck:
    """Outcome of the sufficient-condition check: sufficient or undetermined."""
    pairs: Tuple[PairCheck, ...] = ()

    @property
    def is_sufficient(self) -> bool:
        return all(p.certified for p in self.pairs)

    @property
    def failing_pairs(self) -> Tuple[PairCheck, ...]:
        return tuple(p for p in self.pairs if not p.certified)


@dataclass(frozen=True)
class FactorRecord:
    """One mapping set, repeated `multiplicity` times.

    Basic commutators of one multidegree share a target, so a record stands
    for the whole class; `commutator` is set when the class has one member.
    """
    kind: FactorKind
    summand: int
    order: ExtOrder
    rule: Rule
    commutator: Optional[Commutator] = None
    target: Optional[SpaceDesc] = None
    missing_key: Optional[TableKey] = None
    multidegree: Optional[Multidegree] = None
    multiplicity: int = 1

    @property
    def is_trivial(self) -> bool:
        return self.order.is_trivial

    @property
    def contribution(self) -> ExtOrder:
        return power(self.order, self.multiplicity)

    @property
    def partner(self) -> Optional[int]:
        """For weight-1 pair factors, the index i of c = z_i."""
        if self.kind is FactorKind.WEIGHT_ONE_PAIR:
            return self.commutator.generator
        return None


@dataclass(frozen=True)
class Note:
    kind: NoteKind
    summands: Tuple[int, int]
    message: str

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "summands": list(self.summands), "message": self.message}


@dataclass
class FactorReport:
    input: WedgeInput
    mode: ReducibilityMode
    reducibility: ReducibilityCheck
    factors: List[FactorRecord]
    total: ExtOrder
    weight_bound: int
    pruned_commutators: int = 0
    notes: List[Note] = field(default_factory=list)
    missing_entries: List[TableKey] = field(default_factory=list)

    @property
    def nontrivial_factors(self) -> List[FactorRecord]:
        return [f for f in self.factors if not f.is_trivial]

    @property
    def omitted_trivial(self) -> int:
        return sum(f.multiplicity for f in self.factors if f.is_trivial)
