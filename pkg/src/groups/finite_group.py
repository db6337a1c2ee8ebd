"""
Finite Group Module for origami-veech.
Permutation groups by breadth-first closure, and the automorphism test
that decides when two generating pairs describe the same origami.
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from src.errors import DegreeMismatchError, ResourceLimitError
from .permutation import Permutation, compose, perm_order

logger = logging.getLogger(__name__)

Pair = Tuple[Permutation, Permutation]


class FiniteGroup:
    """
    Finite group given by permutation generators, with every element enumerated.

    elements[0] is the identity and elements are stored in breadth-first
    order, so words[i] is a shortest word (over generator indices) for
    elements[i].
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Permutation],
        elements: List[Permutation],
        words: List[Tuple[int, ...]]
    ):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = elements
        self.words = words
        self._index: Dict[bytes, int] = {g.key: i for i, g in enumerate(elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, p: object) -> bool:
        return (
            isinstance(p, Permutation)
            and p.degree == self.degree
            and p.key in self._index
        )

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators)
        return f"FiniteGroup(order={self.order}, degree={self.degree}, generators=[{gens}])"

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def index_of(self, p: Permutation) -> Optional[int]:
        """Position of p in elements, or None if p is not in the group."""
        if p.degree != self.degree:
            return None
        return self._index.get(p.key)

    def evaluate_word(self, word: Sequence[int], images: Optional[Sequence[Permutation]] = None) -> Permutation:
        """
        Evaluate a word over generator indices.

        Args:
            word: generator indices, left to right.
            images: values to substitute for the generators (defaults to
                the generators themselves).

        Returns:
            The product images[w0] images[w1] ... as a permutation.
        """
        images = self.generators if images is None else images
        result = Permutation.identity(images[0].degree)
        for i in word:
            result = compose(result, images[i])
        return result

    def right_multiplication(self, s: Permutation) -> np.ndarray:
        """Index table t with elements[t[i]] == elements[i]·s."""
        return np.fromiter(
            (self._index[compose(g, s).key] for g in self.elements),
            dtype=np.int64,
            count=self.order
        )

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for a in gens for b in gens)


def closure(
    degree: int,
    generators: Sequence[Permutation],
    max_order: Optional[int] = None
) -> FiniteGroup:
    """
    Enumerate the group generated by the given permutations.

    Args:
        degree: number of points moved.
        generators: non-empty list of generators.
        max_order: abort once more elements than this are found
            (defaults to Config.MAX_GROUP_ORDER).

    Returns:
        The enumerated FiniteGroup.

    Raises:
        DegreeMismatchError: if a generator has the wrong degree.
        ResourceLimitError: if the group is larger than max_order.
    """
    if not generators:
        raise ValueError("closure needs at least one generator")
    for gen in generators:
        if gen.degree != degree:
            raise DegreeMismatchError(f"Generator {gen} does not have degree {degree}")
    limit = Config.MAX_GROUP_ORDER if max_order is None else max_order

    identity = Permutation.identity(degree)
    elements = [identity]
    words: List[Tuple[int, ...]] = [()]
    seen = {identity.key}
    queue = deque([0])

    while queue:
        i = queue.popleft()
        g = elements[i]
        for gi, s in enumerate(generators):
            h = compose(g, s)
            if h.key in seen:
                continue
            seen.add(h.key)
            elements.append(h)
            words.append(words[i] + (gi,))
            if len(elements) > limit:
                raise ResourceLimitError(
                    f"Group closure exceeded {limit} elements"
                )
            queue.append(len(elements) - 1)

    logger.debug(f"Closure of {len(generators)} generators on {degree} points has order {len(elements)}")
    return FiniteGroup(degree, generators, elements, words)


def is_generating_pair(G: FiniteGroup, x: Permutation, y: Permutation) -> bool:
    """True iff x and y lie in G and generate all of G."""
    if x not in G or y not in G:
        return False
    span = closure(G.degree, [x, y], max_order=G.order)
    return span.order == G.order


def _extension(G: FiniteGroup, pair: Pair, target: Pair) -> Optional[List[int]]:
    """
    Extend x -> x2, y -> y2 along the Cayley graph of (x, y).

    phi(g·s) is forced to phi(g)·phi(s); every edge is checked for
    consistency, then phi must be onto.
    """
    x, y = pair
    x2, y2 = target
    if x2 not in G or y2 not in G:
        return None
    index = G._index
    elements = G.elements
    n = G.order

    phi = [-1] * n
    phi[0] = 0
    queue = [0]
    steps = ((x, x2), (y, y2))
    for g_idx in queue:
        g = elements[g_idx]
        image = elements[phi[g_idx]]
        for s, s2 in steps:
            h = index.get(compose(g, s).key)
            if h is None:
                return None
            h_image = index[compose(image, s2).key]
            if phi[h] == -1:
                phi[h] = h_image
                queue.append(h)
            elif phi[h] != h_image:
                return None

    if len(queue) != n:
        # (x, y) does not generate G
        return None
    if len(set(phi)) != n:
        return None
    return phi


def extend_to_automorphism(
    G: FiniteGroup,
    pair: Pair,
    target: Pair
) -> Optional[Dict[Permutation, Permutation]]:
    """
    Extend the assignment x -> x2, y -> y2 to an automorphism of G.

    Args:
        G: the group.
        pair: generating pair (x, y) of G.
        target: candidate images (x2, y2).

    Returns:
        The automorphism as a full element map, or None if the assignment
        does not extend.
    """
    phi = _extension(G, pair, target)
    if phi is None:
        return None
    return {G.elements[i]: G.elements[j] for i, j in enumerate(phi)}


def pairs_equivalent(G: FiniteGroup, pair: Pair, target: Pair) -> bool:
    """
    Decide whether two generating pairs of G differ by an automorphism.

    Element orders are compared first; automorphisms preserve them.
    """
    x, y = pair
    x2, y2 = target
    if x == x2 and y == y2:
        return True
    if perm_order(x) != perm_order(x2) or perm_order(y) != perm_order(y2):
        return False
    if perm_order(compose(x, y)) != perm_order(compose(x2, y2)):
        return False
    return _extension(G, pair, target) is not None
