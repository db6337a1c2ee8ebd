"""
SL(2,Z) action on regular origamis.

Generator rules, with products evaluated by compose (right factor first):

    S   : (G, x, y) -> (G, y⁻¹, x)
    T   : (G, x, y) -> (G, x, yx⁻¹)
    S⁻¹ : (G, x, y) -> (G, y, x⁻¹)
    T⁻¹ : (G, x, y) -> (G, x, yx)

Words act letter by letter in reading order, so act_word(O, w1 + w2) equals
act_word(act_word(O, w1), w2). Under this order the stabiliser of O is
exactly the set of matrices whose words fix O up to automorphisms of G.
"""

from src.groups import compose
from src.surfaces.origami import RegularOrigami
from .sl2 import Sl2Matrix, WordLike, as_word, matrix_to_word


def act_generator(O: RegularOrigami, letter: str) -> RegularOrigami:
    """
    Apply one generator.

    Args:
        O: the origami.
        letter: "S", "T", "s" (S⁻¹) or "t" (T⁻¹).

    Returns:
        The image origami over the same group.
    """
    x, y = O.x, O.y
    if letter == "S":
        return O.with_pair(y.inverse(), x)
    if letter == "T":
        return O.with_pair(x, compose(y, x.inverse()))
    if letter == "s":
        return O.with_pair(y, x.inverse())
    if letter == "t":
        return O.with_pair(x, compose(y, x))
    raise ValueError(f"Unknown generator {letter!r}")


def act_word(O: RegularOrigami, w: WordLike) -> RegularOrigami:
    """Fold act_generator over the letters of w, first letter first."""
    for letter in as_word(w):
        O = act_generator(O, letter)
    return O


def act_matrix(O: RegularOrigami, M: Sl2Matrix) -> RegularOrigami:
    """Act with a matrix through its word from matrix_to_word."""
    return act_word(O, matrix_to_word(M))
