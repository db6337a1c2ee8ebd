"""Permutation arithmetic and finite permutation groups."""

from .permutation import (
    Permutation,
    compose,
    compose_all,
    perm_order,
    perm_power,
    commutator,
)
from .finite_group import (
    FiniteGroup,
    closure,
    is_generating_pair,
    extend_to_automorphism,
    pairs_equivalent,
)

__all__ = [
    "Permutation",
    "compose",
    "compose_all",
    "perm_order",
    "perm_power",
    "commutator",
    "FiniteGroup",
    "closure",
    "is_generating_pair",
    "extend_to_automorphism",
    "pairs_equivalent",
]
