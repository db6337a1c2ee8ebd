"""
Square-tiled surfaces: regular origamis and their invariants.

Cylinder decompositions live in src.surfaces.cylinders, which depends on
the SL(2,Z) action and is imported by module path.
"""

from .origami import (
    RegularOrigami,
    PermOrigami,
    make_regular_origami,
    cayley_origami,
    deck_transformation,
    cone_angles,
    singularities,
    euler_characteristic,
    genus,
    origami_summary,
)

__all__ = [
    "RegularOrigami",
    "PermOrigami",
    "make_regular_origami",
    "cayley_origami",
    "deck_transformation",
    "cone_angles",
    "singularities",
    "euler_characteristic",
    "genus",
    "origami_summary",
]
