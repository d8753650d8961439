# wedgespace/core/smash.py
"""
Smash powers of desuspended summands and their suspensions.

Normalization: spheres fold into a suspension count; a single Moore factor
absorbs it (M(q,n) ^ S^d = M(q,n+d)); two or more Moore factors stay a
GenericSmash that only tracks conn and dim.
"""

import logging
from typing import Iterable, Sequence

from .errors import EmptySmashError, UnsupportedSpaceError
from .models import GenericSmash, Moore, SpaceDesc, Sphere

logger = logging.getLogger(__name__)


def smash_factors(factors: Iterable[SpaceDesc], suspensions: int = 0) -> SpaceDesc:
    """Sigma^suspensions of the smash of `factors`, normalized."""
    moores = []
    shift = suspensions
    count = 0
    for f in factors:
        count += 1
        if isinstance(f, Sphere):
            shift += f.n
        elif isinstance(f, Moore):
            moores.append(f)
        elif isinstance(f, GenericSmash):
            moores.extend(f.factors)
            shift += f.suspensions
        else:
            raise UnsupportedSpaceError(f"Cannot smash {f!r}")
    if count == 0:
        raise EmptySmashError("Smash of no factors")
    if not moores:
        return Sphere(shift)
    if len(moores) == 1:
        return Moore(moores[0].q, moores[0].n + shift)
    return GenericSmash(tuple(moores), shift)


def smash_power(multidegree: Sequence[int], desusps: Sequence[SpaceDesc]) -> SpaceDesc:
    """The smash of m_t copies of each desusps[t]."""
    if len(multidegree) != len(desusps):
        raise ValueError(f"Multidegree {tuple(multidegree)} does not match {len(desusps)} spaces")
    if any(m < 0 for m in multidegree):
        raise ValueError(f"Negative multidegree {tuple(multidegree)}")
    if sum(multidegree) < 1:
        raise EmptySmashError(f"Zero multidegree {tuple(multidegree)}")
    factors = [d for m, d in zip(multidegree, desusps) for _ in range(m)]
    result = smash_factors(factors)
    logger.debug("smash_power %s -> %s", tuple(multidegree), result.render())
    return result


def suspend(s: SpaceDesc) -> SpaceDesc:
    if isinstance(s, Sphere):
        return Sphere(s.n + 1)
    if isinstance(s, Moore):
        return Moore(s.q, s.n + 1)
    if isinstance(s, GenericSmash):
        return GenericSmash(s.factors, s.suspensions + 1)
    raise UnsupportedSpaceError(f"Cannot suspend {s!r}")
