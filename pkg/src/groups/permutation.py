"""
Permutation Module for origami-veech.
Exact permutation arithmetic on numpy index arrays.

Convention: compose(p, q) is p after q, so compose(p, q)(i) == p(q(i)) and
the right factor acts first. A product written "xy" is compose(x, y).
Points are 0-based internally; cycles are 1-based on input and output.
"""

import math
from typing import Iterable, List, Sequence

import numpy as np

from src.errors import DegreeMismatchError


class Permutation:
    """
    Immutable permutation of {0, ..., degree - 1}.

    Stores images[i] = image of point i as a read-only numpy array.
    """

    __slots__ = ("_images", "_key")

    def __init__(self, images: Iterable[int]):
        arr = np.asarray(list(images) if not isinstance(images, np.ndarray) else images,
                         dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("Permutation needs a non-empty one-dimensional image list")
        if not np.array_equal(np.sort(arr), np.arange(arr.size)):
            raise ValueError(f"Images {arr.tolist()} are not a bijection on 0..{arr.size - 1}")
        arr = arr.copy()
        arr.setflags(write=False)
        self._images = arr
        self._key = arr.tobytes()

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Permutation":
        """Wrap an array already known to be a bijection."""
        perm = cls.__new__(cls)
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        perm._images = arr
        perm._key = arr.tobytes()
        return perm

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        """Identity permutation on the given number of points."""
        if degree < 1:
            raise ValueError("degree must be positive")
        return cls._trusted(np.arange(degree, dtype=np.int64))

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], degree: int) -> "Permutation":
        """
        Build a permutation from 1-based disjoint cycles.

        Args:
            cycles: e.g. [[1, 2, 3], [4, 5]]; an empty list is the identity.
            degree: number of points.

        Returns:
            The permutation.
        """
        images = np.arange(degree, dtype=np.int64)
        seen = set()
        for cycle in cycles:
            points = [int(c) - 1 for c in cycle]
            for point in points:
                if point < 0 or point >= degree:
                    raise ValueError(f"Point {point + 1} outside 1..{degree}")
                if point in seen:
                    raise ValueError(f"Point {point + 1} appears in more than one cycle")
                seen.add(point)
            for i, point in enumerate(points):
                images[point] = points[(i + 1) % len(points)]
        return cls._trusted(images)

    @property
    def degree(self) -> int:
        return int(self._images.size)

    @property
    def images(self) -> np.ndarray:
        return self._images

    @property
    def key(self) -> bytes:
        """Hashable byte key, unique per permutation of a fixed degree."""
        return self._key

    def __call__(self, point: int) -> int:
        return int(self._images[point])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._key == other._key and self.degree == other.degree

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()}, degree={self.degree})"

    def is_identity(self) -> bool:
        return bool(np.array_equal(self._images, np.arange(self.degree)))

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._images)
        inv[self._images] = np.arange(self.degree, dtype=np.int64)
        return Permutation._trusted(inv)

    def cycles(self, include_fixed: bool = False) -> List[List[int]]:
        """
        Disjoint cycles as 0-based point lists, each starting at its smallest point.

        Args:
            include_fixed: also report fixed points as 1-cycles.
        """
        visited = np.zeros(self.degree, dtype=bool)
        result = []
        for start in range(self.degree):
            if visited[start]:
                continue
            cycle = []
            point = start
            while not visited[point]:
                visited[point] = True
                cycle.append(point)
                point = int(self._images[point])
            if len(cycle) > 1 or include_fixed:
                result.append(cycle)
        return result

    def cycle_lengths(self) -> List[int]:
        """Lengths of all cycles, fixed points included."""
        return [len(c) for c in self.cycles(include_fixed=True)]

    def to_cycles(self) -> List[List[int]]:
        """1-based non-trivial cycles, the JSON form."""
        return [[p + 1 for p in cycle] for cycle in self.cycles()]

    def cycle_string(self) -> str:
        """Cycle notation such as (1,2,3)(4,5); "()" for the identity."""
        cycles = self.to_cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(str(p) for p in c) + ")" for c in cycles)

    def fixed_points(self) -> List[int]:
        """1-based fixed points."""
        return [int(i) + 1 for i in np.flatnonzero(self._images == np.arange(self.degree))]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Compose two permutations, right factor first.

    Args:
        p: applied second.
        q: applied first.

    Returns:
        p∘q, i.e. the map i -> p(q(i)).

    Raises:
        DegreeMismatchError: if the degrees differ.
    """
    if p.degree != q.degree:
        raise DegreeMismatchError(f"Cannot compose degree {p.degree} with degree {q.degree}")
    return Permutation._trusted(p.images[q.images])


def compose_all(*perms: Permutation) -> Permutation:
    """Left-to-right product: compose_all(a, b, c) == compose(compose(a, b), c)."""
    if not perms:
        raise ValueError("compose_all needs at least one permutation")
    result = perms[0]
    for perm in perms[1:]:
        result = compose(result, perm)
    return result


def perm_order(p: Permutation) -> int:
    """Order of p as the lcm of its cycle lengths."""
    return math.lcm(*p.cycle_lengths())


def perm_power(p: Permutation, k: int) -> Permutation:
    """
    Integer power of a permutation; negative k uses the inverse.

    Uses repeated squaring on the image array.
    """
    if k < 0:
        p, k = p.inverse(), -k
    k %= perm_order(p)
    result = np.arange(p.degree, dtype=np.int64)
    base = p.images
    while k:
        if k & 1:
            result = base[result]
        base = base[base]
        k >>= 1
    return Permutation._trusted(result)


def commutator(p: Permutation, q: Permutation) -> Permutation:
    """The commutator p q p⁻¹ q⁻¹."""
    return compose_all(p, q, p.inverse(), q.inverse())
