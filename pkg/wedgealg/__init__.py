# wedgealg/__init__.py
"""
wedgealg - exact algebra for the order calculator: abelian groups,
extended orders and basic commutators.
"""

from .core.abelian_groups import (
    AbelianGroup, ExtOrder, OrderKind, GroupFormatError,
    group_order, hom_group, ext_group, aut_cyclic_order, parse_group,
)
from .core.order_arithmetic import mul, product, power
from .core.hall_basis import (
    Commutator, basic_commutators, count_by_weight, count_by_multidegree,
    multidegree_classes, commutators_with_multidegree,
)

__all__ = [
    'AbelianGroup', 'ExtOrder', 'OrderKind', 'GroupFormatError',
    'group_order', 'hom_group', 'ext_group', 'aut_cyclic_order', 'parse_group',
    'mul', 'product', 'power',
    'Commutator', 'basic_commutators', 'count_by_weight', 'count_by_multidegree',
    'multidegree_classes', 'commutators_with_multidegree',
]
