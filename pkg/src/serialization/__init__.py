"""JSON input validation and codecs."""

from .validators import GroupInput, OrigamiInput, PermOrigamiInput, AbcInput
from .codecs import (
    group_to_dict,
    group_from_dict,
    origami_to_dict,
    origami_from_dict,
    perm_origami_to_dict,
    perm_origami_from_dict,
    origami_content_hash,
    load_json,
    save_json,
    load_origami,
)

__all__ = [
    "GroupInput",
    "OrigamiInput",
    "PermOrigamiInput",
    "AbcInput",
    "group_to_dict",
    "group_from_dict",
    "origami_to_dict",
    "origami_from_dict",
    "perm_origami_to_dict",
    "perm_origami_from_dict",
    "origami_content_hash",
    "load_json",
    "save_json",
    "load_origami",
]
