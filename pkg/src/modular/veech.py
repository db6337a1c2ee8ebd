"""
Veech Group Module for origami-veech.
SL(2,Z)-orbits of regular origamis, the Veech group as the stabiliser of
the base origami, and cusp data of its coset graph.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from config import Config
from src.errors import ResourceLimitError
from src.groups import Permutation, pairs_equivalent
from src.serialization.codecs import origami_content_hash, permutation_from_cycles
from src.surfaces.origami import RegularOrigami
from src.utils.cache import OrbitCache
from .action import act_generator, act_matrix
from .sl2 import Sl2Matrix, Sl2Word, WordLike, as_word, matrix_to_word, word_to_matrix

logger = logging.getLogger(__name__)

# BFS letter order; fixes node numbering
LETTERS = "STst"


@dataclass
class OrbitGraph:
    """
    SL(2,Z)-orbit of a base origami.

    nodes[0] is the base, transversal[i] carries the base to nodes[i], and
    edges[letter][i] is the node reached from node i by that generator.
    """

    nodes: List[RegularOrigami]
    transversal: List[Sl2Word]
    edges: Dict[str, List[int]]

    @property
    def base(self) -> RegularOrigami:
        return self.nodes[0]

    def __len__(self) -> int:
        return len(self.nodes)

    def coset_permutation(self, letter: str) -> Permutation:
        """Permutation of the nodes induced by one generator."""
        return Permutation(self.edges[letter])

    def trace(self, w: WordLike, start: int = 0) -> int:
        """Node reached from start by following the letters of w."""
        node = start
        for letter in as_word(w):
            node = self.edges[letter][node]
        return node

    def to_dict(self) -> dict:
        return {
            "nodes": [
                {"x": node.x.to_cycles(), "y": node.y.to_cycles()}
                for node in self.nodes
            ],
            "transversal": [str(w) for w in self.transversal],
            "edges": {letter: list(targets) for letter, targets in self.edges.items()},
        }

    @classmethod
    def from_dict(cls, base: RegularOrigami, data: dict) -> "OrbitGraph":
        """Rebuild a graph over the group of base."""
        degree = base.group.degree
        nodes = [
            base.with_pair(
                permutation_from_cycles(node["x"], degree),
                permutation_from_cycles(node["y"], degree),
            )
            for node in data["nodes"]
        ]
        transversal = [Sl2Word(w) for w in data["transversal"]]
        edges = {letter: [int(t) for t in targets] for letter, targets in data["edges"].items()}
        size = len(nodes)
        if len(transversal) != size or set(edges) != set(LETTERS):
            raise ValueError("Cached orbit does not match its node list")
        if any(
            len(targets) != size or not all(0 <= t < size for t in targets)
            for targets in edges.values()
        ):
            raise ValueError("Cached orbit has edges outside its node list")
        return cls(nodes=nodes, transversal=transversal, edges=edges)


@dataclass
class VeechGroup:
    """Finite-index subgroup of SL(2,Z) stabilising the base origami."""

    base: RegularOrigami
    graph: OrbitGraph
    generators: List[Sl2Word]
    coset_perms: Dict[str, Permutation]
    cusp_widths: List[int]
    level: int
    matrices: List[Sl2Matrix] = field(init=False)

    def __post_init__(self):
        self.matrices = [word_to_matrix(w) for w in self.generators]

    @property
    def index(self) -> int:
        return len(self.graph)

    def contains(self, M: Sl2Matrix) -> bool:
        """Membership by walking the coset graph."""
        return self.graph.trace(matrix_to_word(M)) == 0

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "generators": [
                {"word": str(w), "matrix": M.as_list()}
                for w, M in zip(self.generators, self.matrices)
            ],
            "coset_perms": {
                letter: perm.to_cycles() for letter, perm in self.coset_perms.items()
            },
            "cusp_widths": list(self.cusp_widths),
            "level": self.level,
        }


def _find_equivalent(
    candidate: RegularOrigami,
    nodes: List[RegularOrigami],
    buckets: Dict[Tuple[int, ...], List[int]],
    key: Tuple[int, ...]
) -> Optional[int]:
    for j in buckets.get(key, ()):
        if pairs_equivalent(candidate.group, nodes[j].pair, candidate.pair):
            return j
    return None


def orbit(O: RegularOrigami, max_size: Optional[int] = None) -> OrbitGraph:
    """
    Breadth-first SL(2,Z)-orbit of O up to equivalence.

    Candidates are bucketed by RegularOrigami.invariants() and only
    compared exactly within a bucket.

    Args:
        O: base origami.
        max_size: orbit bound (defaults to Config.MAX_ORBIT_SIZE).

    Returns:
        The orbit graph, node 0 being O.

    Raises:
        ResourceLimitError: if the orbit has more than max_size elements.
    """
    limit = Config.MAX_ORBIT_SIZE if max_size is None else max_size
    nodes = [O]
    transversal = [Sl2Word("")]
    buckets: Dict[Tuple[int, ...], List[int]] = {O.invariants(): [0]}
    edges: Dict[str, List[int]] = {letter: [] for letter in LETTERS}

    i = 0
    while i < len(nodes):
        for letter in LETTERS:
            image = act_generator(nodes[i], letter)
            key = image.invariants()
            j = _find_equivalent(image, nodes, buckets, key)
            if j is None:
                j = len(nodes)
                nodes.append(image)
                transversal.append(transversal[i] * letter)
                buckets.setdefault(key, []).append(j)
                if len(nodes) > limit:
                    raise ResourceLimitError(f"Orbit exceeded {limit} origamis")
            edges[letter].append(j)
        i += 1

    logger.info(f"Orbit of origami with {O.squares} squares has {len(nodes)} elements")
    return OrbitGraph(nodes=nodes, transversal=transversal, edges=edges)


def cusp_data(g: OrbitGraph) -> Tuple[List[int], int]:
    """
    Cusp widths and level.

    Widths are the cycle lengths of the T-permutation on the orbit; the
    level is their lcm.
    """
    widths = sorted(g.coset_permutation("T").cycle_lengths())
    return widths, math.lcm(*widths)


def veech_generators(g: OrbitGraph) -> VeechGroup:
    """
    Schreier generators of the stabiliser of node 0.

    For every node i and generator a in {S, T} with i -> j, the word
    transversal[i]·a·transversal[j]⁻¹ fixes the base. Trivial words and
    repeated matrices are dropped.
    """
    generators: List[Sl2Word] = []
    seen = set()
    for i in range(len(g)):
        for letter in "ST":
            j = g.edges[letter][i]
            word = g.transversal[i] * letter * g.transversal[j].inverse()
            if len(word) == 0:
                continue
            matrix = word_to_matrix(word)
            if matrix in seen:
                continue
            seen.add(matrix)
            generators.append(word)

    widths, level = cusp_data(g)
    coset_perms = {letter: g.coset_permutation(letter) for letter in "ST"}
    logger.info(f"Veech group has index {len(g)} with {len(generators)} Schreier generators")
    return VeechGroup(
        base=g.base,
        graph=g,
        generators=generators,
        coset_perms=coset_perms,
        cusp_widths=widths,
        level=level,
    )


def veech_group(
    O: RegularOrigami,
    use_cache: bool = True,
    max_size: Optional[int] = None
) -> VeechGroup:
    """
    Veech group of O, reusing a cached orbit when available.

    Args:
        O: the origami.
        use_cache: read and write the on-disk orbit cache.
        max_size: orbit bound passed to orbit().
    """
    cache = OrbitCache() if use_cache else None
    key = origami_content_hash(O)
    graph = None
    if cache is not None:
        payload = cache.get(key)
        if payload is not None:
            try:
                graph = OrbitGraph.from_dict(O, payload)
                logger.info(f"Loaded orbit of {len(graph)} origamis from cache")
            except (AttributeError, KeyError, TypeError, ValueError) as e:
                logger.warning(f"Ignoring malformed cache entry {key}: {e}")
                graph = None
    if graph is None:
        graph = orbit(O, max_size=max_size)
        if cache is not None:
            cache.put(key, graph.to_dict())
    return veech_generators(graph)


def contains(O: RegularOrigami, M: Sl2Matrix) -> bool:
    """True iff acting with M returns an origami equivalent to O."""
    image = act_matrix(O, M)
    return pairs_equivalent(O.group, O.pair, image.pair)
