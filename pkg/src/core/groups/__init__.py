"""Finite groups, subgroups and abelian subgroup posets."""

from src.core.groups.builtins import builtin_group, load_group
from src.core.groups.finite_group import ConjClassTable, FiniteGroup, group_from_table
from src.core.groups.poset import AbelianPoset, abelian_subgroup_poset
from src.core.groups.subgroups import (
    Subgroup,
    centralizer,
    ell_torsion,
    exponent_valuation,
    normalizer,
)

__all__ = [
    "AbelianPoset",
    "ConjClassTable",
    "FiniteGroup",
    "Subgroup",
    "abelian_subgroup_poset",
    "builtin_group",
    "centralizer",
    "ell_torsion",
    "exponent_valuation",
    "group_from_table",
    "load_group",
    "normalizer",
]
