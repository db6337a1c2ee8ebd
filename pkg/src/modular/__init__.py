"""SL(2,Z) words and matrices, its action on origamis, and Veech groups."""

from .sl2 import (
    Sl2Word,
    Sl2Matrix,
    S,
    T,
    free_reduce,
    word_to_matrix,
    matrix_to_word,
    matrix_with_first_column,
    shear,
)
from .action import act_generator, act_word, act_matrix
from .veech import (
    OrbitGraph,
    VeechGroup,
    orbit,
    veech_generators,
    veech_group,
    contains,
    cusp_data,
)

__all__ = [
    "Sl2Word",
    "Sl2Matrix",
    "S",
    "T",
    "free_reduce",
    "word_to_matrix",
    "matrix_to_word",
    "matrix_with_first_column",
    "shear",
    "act_generator",
    "act_word",
    "act_matrix",
    "OrbitGraph",
    "VeechGroup",
    "orbit",
    "veech_generators",
    "veech_group",
    "contains",
    "cusp_data",
]
