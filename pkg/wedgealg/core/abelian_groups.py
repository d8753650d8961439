"""
Finitely generated abelian groups in invariant-factor form, and the extended
order domain (finite / infinite / unknown) that every mapping-set size lives in.

Groups render and parse with the grammar used by the group-table files:

    "0"            trivial group
    "Z", "Z^3"     free part
    "Z/12"         cyclic part
    "Z + Z/12"     "+"-joined direct sums

>>> print(AbelianGroup.of(4, 6))
Z/2 + Z/12
>>> print(hom_group(parse_group("Z/6"), parse_group("Z/4")))
Z/2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from math import gcd, prod
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from sympy import totient


class GroupFormatError(ValueError):
    """Raised for invalid invariant factors or unparseable group strings."""


def invariant_factors(orders: Iterable[int]) -> Tuple[int, ...]:
    """Fold cyclic orders into a divisibility chain d1 | d2 | ... via gcd/lcm."""
    factors = []
    for d in orders:
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise GroupFormatError(f"Invalid cyclic order: {d!r}")
        if d != 1:
            factors.append(d)
    factors.sort()
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            a, b = factors[i], factors[j]
            g = gcd(a, b)
            factors[i], factors[j] = g, a // g * b
    return tuple(d for d in factors if d != 1)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank + Z/d1 + ... + Z/dr with d1 | d2 | ... | dr, every di >= 2."""
    rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 0:
            raise GroupFormatError(f"Rank must be a nonnegative integer, got {self.rank!r}")
        object.__setattr__(self, "torsion", invariant_factors(self.torsion))

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls()

    @classmethod
    def free(cls, rank: int = 1) -> "AbelianGroup":
        return cls(rank=rank)

    @classmethod
    def cyclic(cls, q: int) -> "AbelianGroup":
        """Z/q for q >= 2; Z/1 is the trivial group."""
        return cls(torsion=(q,))

    @classmethod
    def of(cls, *orders: int, rank: int = 0) -> "AbelianGroup":
        return cls(rank=rank, torsion=tuple(orders))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.rank + other.rank, self.torsion + other.torsion)

    __add__ = direct_sum

    def render(self) -> str:
        if self.is_trivial:
            return "0"
        terms = []
        if self.rank == 1:
            terms.append("Z")
        elif self.rank > 1:
            terms.append(f"Z^{self.rank}")
        terms.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(terms)

    def __str__(self) -> str:
        return self.render()


_TERM = re.compile(r"^(?:(?P<zero>0)|Z(?:\^(?P<rank>\d+)|/(?P<mod>\d+))?)$")


def parse_group(text: str) -> AbelianGroup:
    """Parse the canonical rendering, e.g. "Z + Z/12", back into a group."""
    if not isinstance(text, str):
        raise GroupFormatError(f"Group must be a string such as 'Z/2', got {type(text).__name__} {text!r}")
    if not text.strip():
        raise GroupFormatError(f"Empty group string: {text!r}")
    rank = 0
    torsion = []
    for raw in text.split("+"):
        term = raw.replace(" ", "")
        m = _TERM.match(term)
        if not m:
            raise GroupFormatError(f"Unparseable group term {raw.strip()!r} in {text!r}")
        if m.group("zero"):
            continue
        if m.group("mod") is not None:
            q = int(m.group("mod"))
            if q < 2:
                raise GroupFormatError(f"Invalid invariant factor Z/{q} in {text!r}")
            torsion.append(q)
        elif m.group("rank") is not None:
            r = int(m.group("rank"))
            if r < 1:
                raise GroupFormatError(f"Invalid rank Z^{r} in {text!r}")
            rank += r
        else:
            rank += 1
    return AbelianGroup(rank, tuple(torsion))


class OrderKind(Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class ExtOrder:
    """Size of a group or mapping set: Finite(n >= 1), Infinite or Unknown.

    There is no Finite(0): every mapping set contains the constant class.
    """
    kind: OrderKind
    value: Optional[int] = None

    def __post_init__(self):
        if self.kind is OrderKind.FINITE:
            if not isinstance(self.value, int) or isinstance(self.value, bool) or self.value < 1:
                raise ValueError(f"Finite order must be an integer >= 1, got {self.value!r}")
        elif self.value is not None:
            raise ValueError(f"{self.kind.value} order carries no value")

    @classmethod
    def finite(cls, n: int) -> "ExtOrder":
        return cls(OrderKind.FINITE, n)

    @classmethod
    def infinite(cls) -> "ExtOrder":
        return cls(OrderKind.INFINITE)

    @classmethod
    def unknown(cls) -> "ExtOrder":
        return cls(OrderKind.UNKNOWN)

    @property
    def is_finite(self) -> bool:
        return self.kind is OrderKind.FINITE

    @property
    def is_infinite(self) -> bool:
        return self.kind is OrderKind.INFINITE

    @property
    def is_unknown(self) -> bool:
        return self.kind is OrderKind.UNKNOWN

    @property
    def is_trivial(self) -> bool:
        return self.kind is OrderKind.FINITE and self.value == 1

    def to_json(self) -> Union[Dict[str, int], str]:
        if self.is_finite:
            return {"finite": self.value}
        return self.kind.value

    @classmethod
    def from_json(cls, data: Any) -> "ExtOrder":
        if isinstance(data, dict) and set(data) == {"finite"}:
            return cls.finite(data["finite"])
        if data == "infinite":
            return cls.infinite()
        if data == "unknown":
            return cls.unknown()
        raise ValueError(f"Not an order: {data!r}")

    def __str__(self) -> str:
        return str(self.value) if self.is_finite else self.kind.value


def group_order(g: AbelianGroup) -> ExtOrder:
    if g.rank > 0:
        return ExtOrder.infinite()
    return ExtOrder.finite(prod(g.torsion))


def hom_group(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    """Hom(a, b), summand by summand.

    Hom(Z, B) = B, Hom(Z/d, Z) = 0, Hom(Z/d, Z/e) = Z/gcd(d, e).
    """
    torsion = [e for _ in range(a.rank) for e in b.torsion]
    torsion += [gcd(d, e) for d in a.torsion for e in b.torsion]
    return AbelianGroup(a.rank * b.rank, tuple(torsion))


def ext_group(a: AbelianGroup, b: AbelianGroup) -> AbelianGroup:
    """Ext(a, b), summand by summand.

    Ext(Z, B) = 0, Ext(Z/d, Z) = Z/d, Ext(Z/d, Z/e) = Z/gcd(d, e).
    """
    torsion = [d for d in a.torsion for _ in range(b.rank)]
    torsion += [gcd(d, e) for d in a.torsion for e in b.torsion]
    return AbelianGroup(0, tuple(torsion))


def aut_cyclic_order(q: int) -> ExtOrder:
    """|Aut(Z/q)| = phi(q)."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"aut_cyclic_order needs q >= 2, got {q!r}")
    return ExtOrder.finite(int(totient(q)))
