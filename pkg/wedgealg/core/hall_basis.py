"""
Basic commutators on generators z1 < z2 < ... < zk.

A bracket [a, b] of weight w is basic when a and b are basic, a < b in the
global order, and, if b = [c, d], then c <= a. Commutators are ordered by
weight first; inside one weight by (left, right) positions, recursively.
Generation is a dynamic program over weights, so every element of a weight
is built only from the already-ordered lighter elements.
"""

import logging
from dataclasses import dataclass, field
from math import factorial, gcd
from functools import reduce
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from sympy import divisors, mobius

logger = logging.getLogger(__name__)

Multidegree = Tuple[int, ...]
AdmitFn = Callable[[Multidegree], bool]


@dataclass(frozen=True)
class Commutator:
    """A leaf z_i (generator set, no children) or a bracket [left, right]."""
    weight: int
    multidegree: Multidegree
    generator: Optional[int] = None
    left: Optional["Commutator"] = field(default=None, repr=False)
    right: Optional["Commutator"] = field(default=None, repr=False)

    @classmethod
    def leaf(cls, index: int, k: int) -> "Commutator":
        if not 1 <= index <= k:
            raise ValueError(f"Generator index {index} outside 1..{k}")
        degree = tuple(1 if i == index else 0 for i in range(1, k + 1))
        return cls(weight=1, multidegree=degree, generator=index)

    @classmethod
    def bracket(cls, left: "Commutator", right: "Commutator") -> "Commutator":
        if len(left.multidegree) != len(right.multidegree):
            raise ValueError("Cannot bracket commutators over different generator sets")
        degree = tuple(x + y for x, y in zip(left.multidegree, right.multidegree))
        return cls(weight=left.weight + right.weight, multidegree=degree,
                   left=left, right=right)

    @property
    def is_leaf(self) -> bool:
        return self.generator is not None

    def render(self) -> str:
        if self.is_leaf:
            return f"z{self.generator}"
        return f"[{self.left.render()},{self.right.render()}]"

    def __str__(self) -> str:
        return self.render()


def basic_commutators(k: int, max_weight: int,
                      admit: Optional[AdmitFn] = None) -> List[Commutator]:
    """All basic commutators of weight <= max_weight, in the global order.

    `admit` restricts generation to multidegrees it accepts. It must be
    down-closed (accepting a multidegree implies accepting every smaller
    nonzero one); the result is then exactly the admitted subsequence of the
    unrestricted sequence.
    """
    if k < 1 or max_weight < 1:
        raise ValueError(f"basic_commutators needs k >= 1 and max_weight >= 1, got k={k}, max_weight={max_weight}")

    ordered: List[Commutator] = []
    # left_pos[p] is the position of the left factor of ordered[p], -1 for leaves
    left_pos: List[int] = []
    by_weight: Dict[int, List[int]] = {}

    def append(c: Commutator, left: int = -1):
        by_weight.setdefault(c.weight, []).append(len(ordered))
        ordered.append(c)
        left_pos.append(left)

    for i in range(1, k + 1):
        leaf = Commutator.leaf(i, k)
        if admit is None or admit(leaf.multidegree):
            append(leaf)

    for w in range(2, max_weight + 1):
        candidates: List[Tuple[int, int]] = []
        for wa in range(1, w // 2 + 1):
            wb = w - wa
            for pa in by_weight.get(wa, ()):
                for pb in by_weight.get(wb, ()):
                    if wa == wb and pa >= pb:
                        continue
                    if left_pos[pb] > pa:
                        continue
                    if admit is not None:
                        degree = tuple(x + y for x, y in zip(ordered[pa].multidegree, ordered[pb].multidegree))
                        if not admit(degree):
                            continue
                    candidates.append((pa, pb))
        if not candidates:
            # admitted classes of weight w + 1 always contain one of weight w
            break
        candidates.sort()
        for pa, pb in candidates:
            append(Commutator.bracket(ordered[pa], ordered[pb]), pa)

    logger.debug("generated %d basic commutators (k=%d, max_weight=%d)", len(ordered), k, max_weight)
    return ordered


def count_by_weight(k: int, w: int) -> int:
    """Witt number (1/w) * sum_{d | w} mu(d) * k^(w/d)."""
    if k < 1 or w < 1:
        raise ValueError(f"count_by_weight needs k >= 1 and w >= 1, got k={k}, w={w}")
    return sum(int(mobius(d)) * k ** (w // d) for d in divisors(w)) // w


def count_by_multidegree(multidegree: Sequence[int]) -> int:
    """Number of basic commutators with the given multidegree.

    (1/n) * sum_{d | gcd(m)} mu(d) * (n/d)! / prod((m_i/d)!), n = sum(m).
    """
    parts = [m for m in multidegree if m]
    if any(m < 0 for m in multidegree) or not parts:
        raise ValueError(f"Invalid multidegree: {tuple(multidegree)}")
    n = sum(parts)
    if len(parts) == 1:
        return 1 if n == 1 else 0
    total = 0
    for d in divisors(reduce(gcd, parts)):
        term = factorial(n // d)
        for m in parts:
            term //= factorial(m // d)
        total += int(mobius(d)) * term
    return total // n


def multidegree_classes(k: int, max_weight: int,
                        admit: Optional[AdmitFn] = None) -> List[Tuple[Multidegree, int]]:
    """Nonempty multidegree classes of basic commutators of weight <= max_weight.

    Returns (multidegree, count) pairs, weight-ascending and, inside a
    weight, descending lexicographically, so z1 < z2 and [z1,z2] < [z1,z3]
    keep their places. `admit` must be down-closed as in basic_commutators;
    only the admitted classes are visited.
    """
    if k < 1 or max_weight < 1:
        raise ValueError(f"multidegree_classes needs k >= 1 and max_weight >= 1, got k={k}, max_weight={max_weight}")

    found: List[Multidegree] = []

    def extend(prefix: Tuple[int, ...], weight: int):
        if len(prefix) == k:
            if weight:
                found.append(prefix)
            return
        pad = (0,) * (k - len(prefix) - 1)
        m = 0
        while weight + m <= max_weight:
            degree = prefix + (m,)
            if m and admit is not None and not admit(degree + pad):
                break
            extend(degree, weight + m)
            m += 1

    extend((), 0)
    classes = [(m, count_by_multidegree(m)) for m in found]
    classes = [(m, n) for m, n in classes if n]
    classes.sort(key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))
    logger.debug("%d multidegree classes (k=%d, max_weight=%d)", len(classes), k, max_weight)
    return classes


def commutators_with_multidegree(multidegree: Sequence[int]) -> List[Commutator]:
    """Basic commutators of exactly this multidegree, in the global order."""
    target = tuple(multidegree)
    if any(m < 0 for m in target) or not any(target):
        raise ValueError(f"Invalid multidegree: {target}")
    below = basic_commutators(len(target), sum(target),
                              admit=lambda d: all(x <= y for x, y in zip(d, target)))
    return [c for c in below if c.multidegree == target]
