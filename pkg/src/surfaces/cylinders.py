"""
Cylinder Decomposition Module for origami-veech.
Maximal horizontal cylinders of square-tiled surfaces, decompositions in
rational directions, and the parabolic Veech elements they give.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from src.modular.action import act_word
from src.modular.sl2 import (
    Sl2Matrix,
    Sl2Word,
    T,
    matrix_to_word,
    matrix_with_first_column,
    word_to_matrix,
)
from .origami import PermOrigami, RegularOrigami, cayley_origami

logger = logging.getLogger(__name__)

# (S³TS)^1 = (1 0; -1 1)
LEMMA_STEP = Sl2Word("SSSTS")


@dataclass(frozen=True)
class Cylinder:
    """Horizontal cylinder of h rows, each of w squares."""

    w: int
    h: int
    square_ids: Tuple[int, ...]

    def __post_init__(self):
        if self.w * self.h != len(self.square_ids):
            raise ValueError(
                f"Cylinder w={self.w} h={self.h} cannot hold {len(self.square_ids)} squares"
            )

    @property
    def inverse_modulus(self) -> Fraction:
        """Circumference over height, w/h."""
        return Fraction(self.w, self.h)

    def to_dict(self) -> dict:
        return {"w": self.w, "h": self.h, "squares": list(self.square_ids)}


@dataclass(frozen=True)
class CylinderDecomposition:
    """
    Cylinders of an origami in direction A·e₁.

    The cylinders are the horizontal cylinders of the image origami O·A;
    square ids refer to that image's Cayley realization.
    """

    direction: Tuple[int, int]
    A: Sl2Matrix
    cylinders: Tuple[Cylinder, ...]

    @property
    def squares(self) -> int:
        return sum(c.w * c.h for c in self.cylinders)

    @property
    def inverse_moduli(self) -> List[Fraction]:
        return [c.inverse_modulus for c in self.cylinders]

    @property
    def parabolic(self) -> Sl2Matrix:
        return parabolic_element(self)

    def to_dict(self) -> dict:
        return {
            "direction": list(self.direction),
            "A": self.A.as_list(),
            "cylinders": [c.to_dict() for c in self.cylinders],
            "parabolic": self.parabolic.as_list(),
        }


def horizontal_cylinders(P: PermOrigami) -> List[Cylinder]:
    """
    Maximal horizontal cylinders of a square-tiled surface.

    Rows are the cycles of sigma_r. The interface above row R carries no
    singularity iff sigma_u(sigma_r(t)) == sigma_r(sigma_u(t)) for every t
    in R; rows joined across such interfaces form one cylinder.

    Args:
        P: the origami.

    Returns:
        Cylinders ordered by their smallest square.
    """
    sr = P.sigma_r.images
    su = P.sigma_u.images
    rows = P.sigma_r.cycles(include_fixed=True)
    row_of = np.empty(P.squares, dtype=np.int64)
    for r, row in enumerate(rows):
        row_of[row] = r

    sources, targets = [], []
    for r, row in enumerate(rows):
        squares = np.asarray(row, dtype=np.int64)
        if np.array_equal(su[sr[squares]], sr[su[squares]]):
            sources.append(r)
            targets.append(int(row_of[su[squares[0]]]))

    adjacency = coo_matrix(
        (np.ones(len(sources)),
         (np.asarray(sources, dtype=np.int64), np.asarray(targets, dtype=np.int64))),
        shape=(len(rows), len(rows))
    )
    n_components, labels = connected_components(adjacency, directed=False)

    cylinders = []
    for label in range(n_components):
        members = [rows[r] for r in np.flatnonzero(labels == label)]
        widths = {len(row) for row in members}
        if len(widths) != 1:
            raise ValueError(f"Rows of unequal length {sorted(widths)} in one cylinder")
        square_ids = tuple(sorted(t for row in members for t in row))
        cylinders.append(Cylinder(w=widths.pop(), h=len(members), square_ids=square_ids))

    cylinders.sort(key=lambda c: c.square_ids[0])
    return cylinders


def parabolic_element(D: CylinderDecomposition) -> Sl2Matrix:
    """
    A·T^k·A⁻¹ where k is the least positive integer that is a multiple of
    every inverse modulus in D.

    Raises:
        ValueError: if D has no cylinders.
    """
    if not D.cylinders:
        raise ValueError("Empty cylinder decomposition")
    k = math.lcm(*(c.inverse_modulus.numerator for c in D.cylinders))
    return D.A @ (T ** k) @ D.A.inverse()


def _decompose(O: RegularOrigami, A: Sl2Matrix, word: Sl2Word) -> CylinderDecomposition:
    image = act_word(O, word)
    cylinders = horizontal_cylinders(cayley_origami(image))
    decomposition = CylinderDecomposition(
        direction=A.first_column(),
        A=A,
        cylinders=tuple(cylinders)
    )
    logger.debug(
        f"Direction {decomposition.direction}: {len(cylinders)} cylinders, "
        f"inverse moduli {[str(f) for f in decomposition.inverse_moduli]}"
    )
    return decomposition


def cylinders_in_direction(O: RegularOrigami, m: int) -> CylinderDecomposition:
    """
    Cylinder decomposition of O in direction (1, -m).

    Acts with A = (S³TS)^m = (1 0; -m 1) and decomposes the image
    horizontally. For non-abelian G every cylinder then has inverse
    modulus ord(x·y^m).

    Args:
        O: the origami.
        m: non-negative slope parameter.

    Returns:
        The decomposition with A attached.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    word = LEMMA_STEP ** m
    return _decompose(O, word_to_matrix(word), word)


def cylinders_in_vector_direction(O: RegularOrigami, v: Tuple[int, int]) -> CylinderDecomposition:
    """
    Cylinder decomposition of O in the primitive direction v.

    A with A·e₁ = v comes from the extended Euclidean algorithm.
    """
    A = matrix_with_first_column(*v)
    return _decompose(O, A, matrix_to_word(A))
