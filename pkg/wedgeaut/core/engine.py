# wedgeaut/core/engine.py
"""
Order of Aut(Sigma X_1 v ... v Sigma X_k) for a reducible wedge.

For each summand j the factor list is Aut(Sigma X_j) together with
[Sigma X_j, Sigma ^c B] for every basic commutator c != z_j. The target only
depends on the multidegree of c, so each multidegree class is evaluated once
and weighted by its size. The target is omega(c)-connected with
omega(c) = sum_t m_t * conn(Sigma X_t); classes with
omega(c) >= max_j dim(Sigma X_j) only contribute vanishing factors and are
counted but never evaluated.
"""

import logging
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from wedgealg.core.hall_basis import (
    Commutator, Multidegree, commutators_with_multidegree, count_by_weight, multidegree_classes,
)
from wedgealg.core.order_arithmetic import product
from wedgespace.core.group_table import GroupTable, TableKey, resolve_mapping, resolve_summand_aut
from wedgespace.core.models import SpaceDesc, WedgeInput
from wedgespace.core.smash import smash_power, suspend

from .models import (
    FactorKind, FactorRecord, FactorReport, Note, NoteKind, PairCheck, ReducibilityMode,
)
from .reducibility import check_reducible

logger = logging.getLogger(__name__)


class EngineError(RuntimeError):
    """Base class for engine refusals."""


class InvalidWedgeError(EngineError):
    pass


class UndeterminedReducibilityError(EngineError):
    def __init__(self, pairs: Sequence[PairCheck]):
        self.pairs = tuple(pairs)
        listed = ", ".join(f"({p.r},{p.s})" for p in self.pairs)
        super().__init__(f"Reducibility could not be certified for summand pair(s) {listed}")


def max_weight_bound(w: WedgeInput) -> int:
    """W = max_j dim(Sigma X_j); heavier commutators only give vanishing factors."""
    return max(s.dim for s in w.summands)


def target_connectivity(w: WedgeInput, multidegree: Sequence[int]) -> int:
    """conn(Sigma ^c B) = sum_t m_t * conn(Sigma X_t)."""
    return sum(m * s.conn for m, s in zip(multidegree, w.summands))


def admission_filter(w: WedgeInput) -> Callable[[Sequence[int]], bool]:
    top = max_weight_bound(w)
    return lambda degree: target_connectivity(w, degree) < top


def _notes_for(w: WedgeInput, record: FactorRecord) -> List[Note]:
    notes = []
    j, i = record.summand, record.partner
    factor = f"[{w.summands[j - 1]}, {w.summands[i - 1]}]"
    if j > i:
        notes.append(Note(
            NoteKind.ORDERED_PAIR, (j, i),
            f"{factor} has order {record.order}; a product over pairs r < s alone omits it",
        ))
    if w.k >= 3 and j != 1 and i != 1:
        notes.append(Note(
            NoteKind.LEADING_SUMMAND, (j, i),
            f"{factor} has order {record.order}; a product keeping only pairs out of the first summand omits it",
        ))
    return notes


def aut_order(w: WedgeInput, table: GroupTable, assume_reducible: bool = False,
              max_weight: Optional[int] = None, prune: bool = True) -> FactorReport:
    """Factor report for Aut of the wedge.

    `max_weight` overrides the weight bound. With `prune` off every
    multidegree class up to the bound is evaluated.
    """
    if max_weight is not None and max_weight < 1:
        raise InvalidWedgeError(f"Weight bound must be >= 1, got {max_weight}")

    check = check_reducible(w)
    if check.is_sufficient:
        mode = ReducibilityMode.CHECKED
    elif assume_reducible:
        mode = ReducibilityMode.ASSUMED
        logger.debug("reducibility assumed for %s", w)
    else:
        raise UndeterminedReducibilityError(check.failing_pairs)

    bound = max_weight if max_weight is not None else max_weight_bound(w)
    if w.k == 1:
        classes: List[Tuple[Multidegree, int]] = []
        pruned = 0
    else:
        admit = admission_filter(w) if prune else None
        classes = multidegree_classes(w.k, bound, admit=admit)
        admitted = sum(n for _, n in classes)
        pruned = sum(count_by_weight(w.k, wt) for wt in range(1, bound + 1)) - admitted
    logger.debug("%s: bound %d, %d classes evaluated, %d commutators pruned", w, bound, len(classes), pruned)

    desusps = w.desusps
    targets: Dict[Multidegree, SpaceDesc] = {}
    singles: Dict[Multidegree, Commutator] = {}
    factors: List[FactorRecord] = []
    notes: List[Note] = []
    missing: List[TableKey] = []

    def record(rec: FactorRecord):
        factors.append(rec)
        if rec.missing_key is not None and rec.missing_key not in missing:
            missing.append(rec.missing_key)

    for j, summand in enumerate(w.summands, start=1):
        aut = resolve_summand_aut(summand, table)
        record(FactorRecord(FactorKind.AUT_SUMMAND, j, aut.order, aut.rule, missing_key=aut.missing_key))
        for degree, count in classes:
            weight = sum(degree)
            # c != z_j
            n = count - 1 if weight == 1 and degree[j - 1] == 1 else count
            if n == 0:
                continue
            target = targets.get(degree)
            if target is None:
                target = targets[degree] = suspend(smash_power(degree, desusps))
            c = None
            if count == 1:
                c = singles.get(degree)
                if c is None:
                    (c,) = commutators_with_multidegree(degree)
                    singles[degree] = c
            res = resolve_mapping(summand.space, target, table)
            kind = FactorKind.WEIGHT_ONE_PAIR if weight == 1 else FactorKind.HIGHER_COMMUTATOR
            rec = FactorRecord(kind, j, res.order, res.rule, c, target, res.missing_key,
                               multidegree=degree, multiplicity=n)
            record(rec)
            if kind is FactorKind.WEIGHT_ONE_PAIR and not rec.is_trivial:
                notes.extend(_notes_for(w, rec))

    total = product(f.contribution for f in factors)
    logger.debug("%s: total %s from %d factor classes", w, total, len(factors))
    return FactorReport(
        input=w, mode=mode, reducibility=check, factors=factors, total=total,
        weight_bound=bound, pruned_commutators=pruned, notes=notes, missing_entries=missing,
    )
