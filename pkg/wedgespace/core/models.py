# wedgespace/core/models.py
"""
Homotopy-type descriptors: spheres, Moore spaces and generic smashes.

Canonical renderings ("S4", "M(2,3)", "Sigma^2(M(2,1) ^ M(3,2))") are the
keys of the group-table format.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Tuple

from wedgealg.core.abelian_groups import AbelianGroup

from .errors import NotSimplyConnectedError, UnsupportedSpaceError


class SpaceDesc(ABC):
    """A homotopy type known through its connectivity and dimension."""

    @property
    @abstractmethod
    def conn(self) -> int:
        ...

    @property
    @abstractmethod
    def dim(self) -> int:
        ...

    @abstractmethod
    def render(self) -> str:
        ...

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Sphere(SpaceDesc):
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise UnsupportedSpaceError(f"Sphere dimension must be >= 1, got {self.n!r}")

    @property
    def conn(self) -> int:
        return self.n - 1

    @property
    def dim(self) -> int:
        return self.n

    def render(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class Moore(SpaceDesc):
    """M(Z/q, n): reduced homology Z/q in degree n only. M(2,2) is the suspended projective plane."""
    q: int
    n: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise UnsupportedSpaceError(f"Moore space coefficient must be >= 2, got {self.q!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise UnsupportedSpaceError(f"Moore space degree must be >= 1, got {self.n!r}")

    @property
    def conn(self) -> int:
        return self.n - 1

    @property
    def dim(self) -> int:
        return self.n + 1

    def render(self) -> str:
        return f"M({self.q},{self.n})"


@dataclass(frozen=True)
class GenericSmash(SpaceDesc):
    """Sigma^suspensions of a smash of two or more Moore spaces.

    Only conn and dim are tracked. Connectivity uses the additive formula
    conn(A ^ B) = conn A + conn B + 1 as an equality, which holds for smashes
    of spheres and Moore spaces.
    """
    factors: Tuple[Moore, ...]
    suspensions: int = 0

    def __post_init__(self):
        if len(self.factors) < 2:
            raise UnsupportedSpaceError("A generic smash needs at least two Moore factors")
        if self.suspensions < 0:
            raise UnsupportedSpaceError(f"Negative suspension count: {self.suspensions}")
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=lambda m: (m.q, m.n))))

    @property
    def conn(self) -> int:
        return sum(m.conn for m in self.factors) + len(self.factors) - 1 + self.suspensions

    @property
    def dim(self) -> int:
        return sum(m.dim for m in self.factors) + self.suspensions

    def render(self) -> str:
        inner = "(" + " ^ ".join(m.render() for m in self.factors) + ")"
        if self.suspensions:
            return f"Sigma^{self.suspensions}{inner}"
        return inner


def homology(s: SpaceDesc) -> Dict[int, AbelianGroup]:
    """Nonzero reduced homology groups by degree."""
    if isinstance(s, Sphere):
        return {s.n: AbelianGroup.free(1)}
    if isinstance(s, Moore):
        return {s.n: AbelianGroup.cyclic(s.q)}
    raise UnsupportedSpaceError(f"Homology of {s.render()} is not tracked")


def desuspend(s: SpaceDesc) -> SpaceDesc:
    if isinstance(s, Sphere) and s.n >= 2:
        return Sphere(s.n - 1)
    if isinstance(s, Moore) and s.n >= 2:
        return Moore(s.q, s.n - 1)
    raise UnsupportedSpaceError(f"{s.render()} has no desuspension in this model")


@dataclass(frozen=True)
class SuspendedSummand:
    """A wedge summand Sigma X: a simply connected sphere or Moore space."""
    space: SpaceDesc

    def __post_init__(self):
        if not isinstance(self.space, (Sphere, Moore)):
            raise UnsupportedSpaceError(f"Wedge summands must be spheres or Moore spaces, got {self.space.render()}")
        if self.space.conn < 1:
            raise NotSimplyConnectedError(self.space.render())

    @property
    def desusp(self) -> SpaceDesc:
        return desuspend(self.space)

    @property
    def conn(self) -> int:
        return self.space.conn

    @property
    def dim(self) -> int:
        return self.space.dim

    def render(self) -> str:
        return self.space.render()

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class WedgeInput:
    summands: Tuple[SuspendedSummand, ...]

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(self.summands))
        if not self.summands:
            raise UnsupportedSpaceError("A wedge needs at least one summand")

    @property
    def k(self) -> int:
        return len(self.summands)

    @property
    def desusps(self) -> Tuple[SpaceDesc, ...]:
        return tuple(s.desusp for s in self.summands)

    def render(self) -> str:
        return " v ".join(s.render() for s in self.summands)

    def __str__(self) -> str:
        return self.render()
