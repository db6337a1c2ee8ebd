"""
Origami Module for origami-veech.
Regular origamis (G, x, y), their square-tiled realization and basic
translation-surface invariants.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from src.errors import DegreeMismatchError, NotGeneratingError
from src.groups import (
    FiniteGroup,
    Permutation,
    commutator,
    compose,
    is_generating_pair,
    perm_order,
)

logger = logging.getLogger(__name__)


class RegularOrigami:
    """
    Regular origami (G, x, y): squares are the elements of G, the right
    neighbour of square g is g·x and the upper neighbour is g·y.

    Instances are immutable. Build validated ones with make_regular_origami;
    the SL(2,Z) action uses with_pair, which skips the generation check
    because the action maps generating pairs to generating pairs.
    """

    __slots__ = ("group", "x", "y")

    def __init__(self, group: FiniteGroup, x: Permutation, y: Permutation):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __setattr__(self, name, value):
        raise AttributeError("RegularOrigami is immutable")

    def __repr__(self) -> str:
        return (
            f"RegularOrigami(|G|={self.group.order}, "
            f"x={self.x.cycle_string()}, y={self.y.cycle_string()})"
        )

    @property
    def pair(self) -> Tuple[Permutation, Permutation]:
        return self.x, self.y

    @property
    def squares(self) -> int:
        return self.group.order

    def with_pair(self, x: Permutation, y: Permutation) -> "RegularOrigami":
        """Same group, new generating pair."""
        return RegularOrigami(self.group, x, y)

    def invariants(self) -> Tuple[int, int, int, int, int]:
        """
        (ord x, ord y, ord xy, ord xy⁻¹, ord [x, y]).

        All five are preserved by automorphisms of G, so equivalent
        origamis share them. The last entry fixes the cone-angle multiset,
        which for a regular origami is |G| / k copies of k.
        """
        x, y = self.x, self.y
        return (
            perm_order(x),
            perm_order(y),
            perm_order(compose(x, y)),
            perm_order(compose(x, y.inverse())),
            perm_order(commutator(x, y)),
        )


@dataclass(frozen=True)
class PermOrigami:
    """Origami on N squares given by its right and up neighbour maps."""

    squares: int
    sigma_r: Permutation
    sigma_u: Permutation

    def __post_init__(self):
        if self.sigma_r.degree != self.squares or self.sigma_u.degree != self.squares:
            raise DegreeMismatchError(
                f"Neighbour maps must act on {self.squares} squares"
            )
        if not _is_transitive(self.squares, self.sigma_r, self.sigma_u):
            raise NotGeneratingError("Origami is not connected")


def _is_transitive(n: int, *perms: Permutation) -> bool:
    sources = np.tile(np.arange(n, dtype=np.int64), len(perms))
    targets = np.concatenate([p.images for p in perms])
    adjacency = coo_matrix((np.ones(len(sources)), (sources, targets)), shape=(n, n))
    n_components, _ = connected_components(adjacency, directed=False)
    return n_components == 1


def make_regular_origami(G: FiniteGroup, x: Permutation, y: Permutation) -> RegularOrigami:
    """
    Validate (G, x, y) and build the origami.

    Args:
        G: deck transformation group.
        x: right-neighbour deck transformation.
        y: upper-neighbour deck transformation.

    Returns:
        The validated RegularOrigami.

    Raises:
        NotGeneratingError: if x or y is not in G, or they do not generate G.
    """
    if x not in G or y not in G:
        raise NotGeneratingError("x and y must be elements of the group")
    if not is_generating_pair(G, x, y):
        raise NotGeneratingError(
            f"<{x.cycle_string()}, {y.cycle_string()}> is a proper subgroup of the group of order {G.order}"
        )
    return RegularOrigami(G, x, y)


def cayley_origami(O: RegularOrigami) -> PermOrigami:
    """
    Square-tiled realization: square i is group element i.

    Returns:
        PermOrigami with sigma_r = right multiplication by x and
        sigma_u = right multiplication by y.
    """
    G = O.group
    sigma_r = Permutation._trusted(G.right_multiplication(O.x))
    sigma_u = Permutation._trusted(G.right_multiplication(O.y))
    return PermOrigami(G.order, sigma_r, sigma_u)


def deck_transformation(O: RegularOrigami, g: Permutation) -> Permutation:
    """Left multiplication by g as a permutation of the squares."""
    G = O.group
    if g not in G:
        raise ValueError(f"{g} is not in the group")
    table = [G.index_of(compose(g, h)) for h in G.elements]
    return Permutation._trusted(np.asarray(table, dtype=np.int64))


def cone_angles(P: PermOrigami) -> List[int]:
    """
    Cycle lengths of the commutator sigma_r sigma_u sigma_r⁻¹ sigma_u⁻¹.

    A cycle of length k is a vertex of cone angle 2πk; entries >= 2 are
    singularities. Sorted ascending.
    """
    return sorted(commutator(P.sigma_r, P.sigma_u).cycle_lengths())


def singularities(P: PermOrigami) -> Counter:
    """Multiset {k: count} of cone angles 2πk with k >= 2."""
    return Counter(k for k in cone_angles(P) if k > 1)


def euler_characteristic(P: PermOrigami) -> int:
    """V - E + F with V commutator cycles, E = 2N and F = N."""
    return len(cone_angles(P)) - P.squares


def genus(P: PermOrigami) -> int:
    """Genus of the closed surface, (2 - χ) / 2."""
    chi = euler_characteristic(P)
    if chi % 2:
        raise ValueError(f"Euler characteristic {chi} is odd")
    return (2 - chi) // 2


def origami_summary(O: RegularOrigami, P: Optional[PermOrigami] = None) -> dict:
    """Invariants of a regular origami in one dictionary."""
    P = cayley_origami(O) if P is None else P
    angles = cone_angles(P)
    ord_x, ord_y, ord_xy, ord_xy_inv, ord_comm = O.invariants()
    return {
        "squares": P.squares,
        "ord_x": ord_x,
        "ord_y": ord_y,
        "ord_xy": ord_xy,
        "ord_xy_inv": ord_xy_inv,
        "ord_commutator": ord_comm,
        "cone_angles": dict(sorted(Counter(angles).items())),
        "genus": genus(P),
    }
