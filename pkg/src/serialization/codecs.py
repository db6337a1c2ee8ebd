"""
JSON codecs for groups, origamis and matrices.

Permutations are lists of 1-based cycles, groups are
{"degree": n, "generators": [...]}, origamis are
{"group": ..., "x": cycles, "y": cycles}.
"""

import hashlib
import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Union

from src.groups import FiniteGroup, Permutation, closure
from src.surfaces.origami import (
    PermOrigami,
    RegularOrigami,
    make_regular_origami,
)
from .validators import GroupInput, OrigamiInput, PermOrigamiInput

logger = logging.getLogger(__name__)


def permutation_from_cycles(cycles: List[List[int]], degree: int) -> Permutation:
    return Permutation.from_cycles(cycles, degree)


def group_to_dict(G: FiniteGroup) -> dict:
    return {
        "degree": G.degree,
        "generators": [g.to_cycles() for g in G.generators],
    }


def group_from_dict(data: dict, max_order: Optional[int] = None) -> FiniteGroup:
    """Validate and enumerate a group."""
    payload = GroupInput.model_validate(data)
    generators = [permutation_from_cycles(c, payload.degree) for c in payload.generators]
    return closure(payload.degree, generators, max_order=max_order)


def origami_to_dict(O: RegularOrigami) -> dict:
    return {
        "group": group_to_dict(O.group),
        "x": O.x.to_cycles(),
        "y": O.y.to_cycles(),
    }


def origami_from_dict(data: dict, max_order: Optional[int] = None) -> RegularOrigami:
    """
    Validate and build a regular origami.

    Raises:
        pydantic.ValidationError: on malformed JSON structure.
        NotGeneratingError: if x and y do not generate the group.
    """
    payload = OrigamiInput.model_validate(data)
    G = group_from_dict(payload.group.model_dump(), max_order=max_order)
    x = permutation_from_cycles(payload.x, G.degree)
    y = permutation_from_cycles(payload.y, G.degree)
    return make_regular_origami(G, x, y)


def perm_origami_to_dict(P: PermOrigami) -> dict:
    return {
        "n": P.squares,
        "sigma_r": P.sigma_r.to_cycles(),
        "sigma_u": P.sigma_u.to_cycles(),
    }


def perm_origami_from_dict(data: dict) -> PermOrigami:
    payload = PermOrigamiInput.model_validate(data)
    return PermOrigami(
        squares=payload.n,
        sigma_r=permutation_from_cycles(payload.sigma_r, payload.n),
        sigma_u=permutation_from_cycles(payload.sigma_u, payload.n),
    )


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def origami_content_hash(O: RegularOrigami) -> str:
    """SHA-256 of the canonical origami JSON."""
    return hashlib.sha256(canonical_json(origami_to_dict(O)).encode("utf-8")).hexdigest()


def load_json(path: Union[str, Path]) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return json.load(f)


def save_json(data: Any, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
    logger.info(f"Wrote {path}")
    return path


def load_origami(path: Union[str, Path], max_order: Optional[int] = None) -> RegularOrigami:
    """Read and validate an origami JSON file."""
    logger.info(f"Loading origami from {path}")
    return origami_from_dict(load_json(path), max_order=max_order)
