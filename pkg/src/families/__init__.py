"""Constructors for the example origami families."""

from .constructors import (
    trivial_origami,
    alternating_origami,
    dihedral_origami,
    psl2_group,
    abc_search,
    hurwitz_origami,
    catalog,
)

__all__ = [
    "trivial_origami",
    "alternating_origami",
    "dihedral_origami",
    "psl2_group",
    "abc_search",
    "hurwitz_origami",
    "catalog",
]
