# wedgeaut/core/reducibility.py
"""
Sufficient-condition check for reducibility of Aut of a wedge.

A pair of summands {r, s} is certified when Hom(H_k(A), H_k(B)) = 0 for
every k in at least one direction A -> B. Only one direction is required.
The check never certifies a pair that fails both ways.
"""

import logging
from itertools import combinations
from typing import Optional, Tuple

from wedgealg.core.abelian_groups import hom_group
from wedgespace.core.models import SpaceDesc, WedgeInput, homology

from .models import PairCheck, ReducibilityCheck

logger = logging.getLogger(__name__)

CRITERION = "sufficient condition: Hom(H_k(A), H_k(B)) = 0 for all k, in one direction per pair"


def hom_trivial_all_degrees(a: SpaceDesc, b: SpaceDesc) -> bool:
    ha, hb = homology(a), homology(b)
    return all(hom_group(ha[k], hb[k]).is_trivial for k in ha.keys() & hb.keys())


def _certify(w: WedgeInput, r: int, s: int) -> PairCheck:
    a, b = w.summands[r].space, w.summands[s].space
    direction: Optional[Tuple[int, int]] = None
    if hom_trivial_all_degrees(a, b):
        direction = (r + 1, s + 1)
        text = f"Hom(H_*({a}), H_*({b})) = 0"
    elif hom_trivial_all_degrees(b, a):
        direction = (s + 1, r + 1)
        text = f"Hom(H_*({b}), H_*({a})) = 0"
    else:
        text = f"Hom(H_*({a}), H_*({b})) and Hom(H_*({b}), H_*({a})) are both nonzero"
    return PairCheck(r + 1, s + 1, direction is not None, direction, text)


def check_reducible(w: WedgeInput) -> ReducibilityCheck:
    pairs = tuple(_certify(w, r, s) for r, s in combinations(range(w.k), 2))
    for p in pairs:
        logger.debug("pair %s: %s", (p.r, p.s), p.justification)
    return ReducibilityCheck(pairs)
