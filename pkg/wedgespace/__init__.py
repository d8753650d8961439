# wedgespace/__init__.py
"""
wedgespace - homotopy-type descriptors, smash calculus and the
mapping-group order oracle.
"""

from .core.errors import (
    SpaceError, ParseError, NotSimplyConnectedError, UnsupportedSpaceError,
    EmptySmashError, TableLoadError,
)
from .core.models import SpaceDesc, Sphere, Moore, GenericSmash, SuspendedSummand, WedgeInput, homology
from .core.parser import parse_summand, parse_wedge, parse_space
from .core.smash import smash_power, suspend
from .core.group_table import (
    GroupTable, TableEntry, Rule, Resolution,
    sphere_pi_order, mapping_group_order, summand_aut_order,
)
from .storage.table_loader import load_table, load_tables, bundled_table

__all__ = [
    'SpaceError', 'ParseError', 'NotSimplyConnectedError', 'UnsupportedSpaceError',
    'EmptySmashError', 'TableLoadError',
    'SpaceDesc', 'Sphere', 'Moore', 'GenericSmash', 'SuspendedSummand', 'WedgeInput', 'homology',
    'parse_summand', 'parse_wedge', 'parse_space',
    'smash_power', 'suspend',
    'GroupTable', 'TableEntry', 'Rule', 'Resolution',
    'sphere_pi_order', 'mapping_group_order', 'summand_aut_order',
    'load_table', 'load_tables', 'bundled_table',
]
