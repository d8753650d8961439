"""Multiplication of extended orders.

Infinite absorbs everything, Unknown included: factor sets are never empty,
so one infinite factor makes the whole product infinite.
"""

from functools import reduce
from typing import Iterable

from .abelian_groups import ExtOrder

ONE = ExtOrder.finite(1)


def mul(a: ExtOrder, b: ExtOrder) -> ExtOrder:
    if a.is_infinite or b.is_infinite:
        return ExtOrder.infinite()
    if a.is_unknown or b.is_unknown:
        return ExtOrder.unknown()
    return ExtOrder.finite(a.value * b.value)


def product(xs: Iterable[ExtOrder]) -> ExtOrder:
    return reduce(mul, xs, ONE)


def power(x: ExtOrder, n: int) -> ExtOrder:
    """x multiplied with itself n times; power(x, 0) is Finite(1)."""
    if n < 0:
        raise ValueError(f"Exponent must be nonnegative, got {n}")
    if n == 0:
        return ONE
    if x.is_finite:
        return ExtOrder.finite(x.value ** n)
    return x
