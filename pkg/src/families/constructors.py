"""
Origami Families Module for origami-veech.
Constructors for the alternating, dihedral and PSL(2,q) families, and an
exhaustive search for (a,b,c)-generating pairs.
"""

import logging
import math
from typing import Dict, Optional, Tuple

from sympy import isprime

from config import Config
from src.errors import NotGeneratingError, ResourceLimitError
from src.groups import (
    FiniteGroup,
    Permutation,
    closure,
    compose,
    is_generating_pair,
    perm_order,
)
from src.surfaces.origami import RegularOrigami, make_regular_origami

logger = logging.getLogger(__name__)


def trivial_origami() -> RegularOrigami:
    """The one-square torus over the trivial group."""
    identity = Permutation.identity(1)
    G = closure(1, [identity])
    return RegularOrigami(G, identity, identity)


def alternating_origami(n: int) -> RegularOrigami:
    """
    The origami (A_n, (1,2,3), (1,2,...,n)).

    Args:
        n: number of points, n >= 4.

    Returns:
        The origami over the closure of the two cycles.

    Raises:
        NotGeneratingError: if the closure is not of order n!/2. For even
            n the n-cycle is odd and the closure is all of S_n.
    """
    if n < 4:
        raise ValueError("alternating_origami needs n >= 4")
    x = Permutation.from_cycles([[1, 2, 3]], n)
    y = Permutation.from_cycles([list(range(1, n + 1))], n)
    G = closure(n, [x, y])
    expected = math.factorial(n) // 2
    if G.order != expected:
        raise NotGeneratingError(
            f"(1,2,3) and (1,...,{n}) generate a group of order {G.order}, not {expected}"
        )
    logger.info(f"Alternating origami on {n} points has {G.order} squares")
    return RegularOrigami(G, x, y)


def dihedral_origami(k: int) -> RegularOrigami:
    """
    The origami (D_2k, r, s) with r a rotation and s a reflection.

    For k >= 3, r = (1,2,...,k) and s fixes 1 and swaps j with k+2-j.
    For k = 2 the action on two vertices is not faithful, so r = (1,2)
    and s = (3,4) on four points (the Klein four group).
    """
    if k < 2:
        raise ValueError("dihedral_origami needs k >= 2")
    if k == 2:
        r = Permutation.from_cycles([[1, 2]], 4)
        s = Permutation.from_cycles([[3, 4]], 4)
        degree = 4
    else:
        r = Permutation.from_cycles([list(range(1, k + 1))], k)
        s = Permutation.from_cycles(
            [[j, k + 2 - j] for j in range(2, k + 2) if j < k + 2 - j],
            k
        )
        degree = k
    G = closure(degree, [r, s])
    if G.order != 2 * k:
        raise NotGeneratingError(f"Dihedral generators closed to order {G.order}, not {2 * k}")
    return RegularOrigami(G, r, s)


def psl2_group(q: int) -> FiniteGroup:
    """
    PSL(2,q) acting on the q+1 points of the projective line over F_q.

    Points 0..q-1 are field elements and point q is infinity. The group is
    generated by z -> z+1 and z -> -1/z.

    Args:
        q: a prime, q >= 5.

    Returns:
        The permutation group of order q(q²-1)/2.
    """
    if q < 5 or not isprime(q):
        raise ValueError(f"psl2_group needs a prime q >= 5, got {q}")
    infinity = q
    translate = [(z + 1) % q for z in range(q)] + [infinity]
    invert = [infinity] + [(-pow(z, -1, q)) % q for z in range(1, q)] + [0]
    generators = [Permutation(translate), Permutation(invert)]
    G = closure(q + 1, generators)
    expected = q * (q * q - 1) // 2
    if G.order != expected:
        raise ValueError(f"PSL(2,{q}) closed to order {G.order}, not {expected}")
    logger.info(f"PSL(2,{q}) on {q + 1} points has order {G.order}")
    return G


def abc_search(
    G: FiniteGroup,
    a: int,
    b: int,
    c: int,
    max_pairs: Optional[int] = None
) -> Optional[Tuple[Permutation, Permutation]]:
    """
    First generating pair with ord(x)=a, ord(y)=b and ord(xy)=c.

    Pairs are scanned by element index, x first, so the result is
    deterministic.

    Args:
        G: the group.
        a, b, c: target orders.
        max_pairs: bound on |G|² (defaults to Config.MAX_ABC_PAIRS).

    Returns:
        (x, y), or None when G has no such pair.

    Raises:
        ResourceLimitError: if |G|² exceeds the bound.
    """
    if min(a, b, c) < 1:
        raise ValueError("a, b and c must be positive")
    limit = Config.MAX_ABC_PAIRS if max_pairs is None else max_pairs
    if G.order ** 2 > limit:
        raise ResourceLimitError(f"Scanning {G.order}² pairs exceeds the bound {limit}")

    orders = [perm_order(g) for g in G.elements]
    xs = [g for g, o in zip(G.elements, orders) if o == a]
    ys = [g for g, o in zip(G.elements, orders) if o == b]
    for x in xs:
        for y in ys:
            if perm_order(compose(x, y)) != c:
                continue
            if is_generating_pair(G, x, y):
                logger.info(f"({a},{b},{c})-generators: x={x.cycle_string()}, y={y.cycle_string()}")
                return x, y
    logger.info(f"No ({a},{b},{c})-generating pair in group of order {G.order}")
    return None


def hurwitz_origami(q: int = 7) -> RegularOrigami:
    """
    The origami (PSL(2,q), y, x) for the first (2,3,7)-generators x, y.

    Raises:
        NotGeneratingError: if PSL(2,q) is not a (2,3,7)-group.
    """
    G = psl2_group(q)
    pair = abc_search(G, 2, 3, 7)
    if pair is None:
        raise NotGeneratingError(f"PSL(2,{q}) has no (2,3,7)-generators")
    x, y = pair
    return make_regular_origami(G, y, x)


def catalog() -> Dict[str, RegularOrigami]:
    """The standard test origamis."""
    return {
        "torus": trivial_origami(),
        "d8": dihedral_origami(4),
        "d10": dihedral_origami(5),
        "a5": alternating_origami(5),
        "psl2_7": hurwitz_origami(7),
    }
