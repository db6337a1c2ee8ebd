"""
Surjectivity Module for origami-veech.
Decides whether a finitely generated subgroup of SL(2,Z) maps onto
SL(2,Z/nZ) by closing its reduced generators and counting.
"""

import logging
from collections import deque
from typing import List, Optional, Sequence, Tuple

import pandas as pd
from joblib import Parallel, delayed
from sympy import primefactors

from config import Config
from src.errors import ResourceLimitError
from src.modular.sl2 import Sl2Matrix

logger = logging.getLogger(__name__)

Residue = Tuple[int, int, int, int]


def sl2_mod_n_order(n: int) -> int:
    """|SL(2,Z/nZ)| = n³ · Π_{p | n} (1 - p⁻²)."""
    if n < 1:
        raise ValueError("n must be positive")
    result = n ** 3
    for p in primefactors(n):
        result = result // (p * p) * (p * p - 1)
    return result


def _generator_matrices(V) -> List[Sl2Matrix]:
    """Accept a VeechGroup (anything with .matrices) or a list of matrices."""
    matrices = getattr(V, "matrices", V)
    return list(matrices)


def _multiply_mod(m1: Residue, m2: Residue, n: int) -> Residue:
    a, b, c, d = m1
    e, f, g, h = m2
    return (
        (a * e + b * g) % n,
        (a * f + b * h) % n,
        (c * e + d * g) % n,
        (c * f + d * h) % n,
    )


def image_order_mod_n(matrices: Sequence[Sl2Matrix], n: int) -> int:
    """Order of the image of <matrices> in SL(2,Z/nZ), by breadth-first closure."""
    identity = (1 % n, 0, 0, 1 % n)
    generators = sorted({M.mod(n) for M in matrices} - {identity})
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in generators:
            product = _multiply_mod(current, gen, n)
            if product not in seen:
                seen.add(product)
                queue.append(product)
    return len(seen)


def _check_modulus(n: int, max_modulus: Optional[int]) -> None:
    limit = Config.MAX_MODULUS if max_modulus is None else max_modulus
    if n > limit:
        raise ResourceLimitError(f"Modulus {n} exceeds the bound {limit}")


def surjects_mod_n(V, n: int, max_modulus: Optional[int] = None) -> bool:
    """
    True iff V maps onto SL(2,Z/nZ).

    Args:
        V: a VeechGroup or a list of generating matrices.
        n: modulus, n >= 1.
        max_modulus: bound on n (defaults to Config.MAX_MODULUS).

    Raises:
        ResourceLimitError: if n exceeds the bound.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return True
    _check_modulus(n, max_modulus)
    return image_order_mod_n(_generator_matrices(V), n) == sl2_mod_n_order(n)


def surjectivity_table(
    V,
    max_n: int,
    n_jobs: Optional[int] = None,
    max_modulus: Optional[int] = None
) -> pd.DataFrame:
    """
    Surjectivity sweep for 2 <= n <= max_n.

    Args:
        V: a VeechGroup or a list of generating matrices.
        max_n: largest modulus.
        n_jobs: joblib workers (defaults to Config.N_JOBS).
        max_modulus: bound on max_n.

    Returns:
        DataFrame with columns n, sl2_order, image_order, surjects.
    """
    columns = ["n", "sl2_order", "image_order", "surjects"]
    moduli = list(range(2, max_n + 1))
    if not moduli:
        return pd.DataFrame(columns=columns)
    _check_modulus(max_n, max_modulus)

    matrices = _generator_matrices(V)
    workers = Config.N_JOBS if n_jobs is None else n_jobs
    logger.info(f"Surjectivity sweep for n = 2..{max_n} with {len(matrices)} generators")
    orders = Parallel(n_jobs=workers)(
        delayed(image_order_mod_n)(matrices, n) for n in moduli
    )
    table = pd.DataFrame({
        "n": moduli,
        "sl2_order": [sl2_mod_n_order(n) for n in moduli],
        "image_order": orders,
    })
    table["surjects"] = table["image_order"] == table["sl2_order"]
    failures = table.loc[~table["surjects"], "n"].tolist()
    if failures:
        logger.info(f"Not surjective for n in {failures}")
    return table
