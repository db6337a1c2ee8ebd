"""
SL(2,Z) Module for origami-veech.
Elements of SL(2,Z) as freely reduced words over S, T and their inverses,
and as exact integer matrices.

Words are strings over "STst" where lowercase letters are inverses, so
"TSt" is T·S·T⁻¹. Matrix entries are Python integers and never overflow.
"""

from dataclasses import dataclass
from typing import List, Tuple, Union

ALPHABET = "STst"
INVERSE_LETTER = {"S": "s", "s": "S", "T": "t", "t": "T"}


def free_reduce(letters: str) -> str:
    """Cancel adjacent letter/inverse pairs until none remain."""
    stack: List[str] = []
    for letter in letters:
        if letter not in INVERSE_LETTER:
            raise ValueError(f"Invalid letter {letter!r}; words use only {ALPHABET}")
        if stack and stack[-1] == INVERSE_LETTER[letter]:
            stack.pop()
        else:
            stack.append(letter)
    return "".join(stack)


def power_letters(letter: str, k: int) -> str:
    """Letters of letter^k; negative k uses the inverse letter."""
    if k < 0:
        return INVERSE_LETTER[letter] * (-k)
    return letter * k


@dataclass(frozen=True)
class Sl2Word:
    """Freely reduced word over {S, T, S⁻¹, T⁻¹}."""

    letters: str = ""

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "WordLike") -> "Sl2Word":
        return Sl2Word(self.letters + as_word(other).letters)

    def __pow__(self, k: int) -> "Sl2Word":
        if k < 0:
            return self.inverse() ** (-k)
        return Sl2Word(self.letters * k)

    def inverse(self) -> "Sl2Word":
        return Sl2Word("".join(INVERSE_LETTER[c] for c in reversed(self.letters)))

    def pretty(self) -> str:
        """Human form with exponents, e.g. "STST⁻³S⁻¹"."""
        if not self.letters:
            return "I"
        parts = []
        run_letter, run = self.letters[0], 0
        for c in self.letters + " ":
            if c == run_letter:
                run += 1
                continue
            base = run_letter.upper()
            exponent = run if run_letter.isupper() else -run
            if exponent == 1:
                parts.append(base)
            else:
                parts.append(base + _superscript(exponent))
            run_letter, run = c, 1
        return "".join(parts)


_SUPERSCRIPTS = str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹")


def _superscript(k: int) -> str:
    return str(k).translate(_SUPERSCRIPTS)


@dataclass(frozen=True)
class Sl2Matrix:
    """Integer matrix (a b; c d) with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, int(getattr(self, name)))
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"Determinant of {self.as_list()} is not 1")

    @classmethod
    def identity(cls) -> "Sl2Matrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def from_list(cls, rows) -> "Sl2Matrix":
        """Parse [[a, b], [c, d]]."""
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def as_list(self) -> List[List[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __matmul__(self, other: "Sl2Matrix") -> "Sl2Matrix":
        return Sl2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, k: int) -> "Sl2Matrix":
        base = self if k >= 0 else self.inverse()
        result = Sl2Matrix.identity()
        k = abs(k)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"

    def inverse(self) -> "Sl2Matrix":
        return Sl2Matrix(self.d, -self.b, -self.c, self.a)

    def first_column(self) -> Tuple[int, int]:
        """A·e₁."""
        return self.a, self.c

    def mod(self, n: int) -> Tuple[int, int, int, int]:
        """Entries reduced mod n as a flat tuple."""
        return self.a % n, self.b % n, self.c % n, self.d % n

    def is_identity(self) -> bool:
        return (self.a, self.b, self.c, self.d) == (1, 0, 0, 1)


WordLike = Union[Sl2Word, str]

S = Sl2Matrix(0, -1, 1, 0)
T = Sl2Matrix(1, 1, 0, 1)
LETTER_MATRICES = {"S": S, "T": T, "s": S.inverse(), "t": T.inverse()}


def as_word(w: WordLike) -> Sl2Word:
    return w if isinstance(w, Sl2Word) else Sl2Word(w)


def word_to_matrix(w: WordLike) -> Sl2Matrix:
    """Product of the letter matrices in word order; empty word is I."""
    result = Sl2Matrix.identity()
    for letter in as_word(w):
        result = result @ LETTER_MATRICES[letter]
    return result


def matrix_to_word(M: Sl2Matrix) -> Sl2Word:
    """
    Write M as a word in S and T by Euclidean reduction on the first column.

    Each step peels M = T^q · S · M' with q = a // c, which shrinks |c|;
    once c = 0 the rest is ±T^b. The result evaluates back to M.
    """
    a, b, c, d = M.a, M.b, M.c, M.d
    prefix: List[str] = []
    while c != 0:
        q = a // c
        a, b = a - q * c, b - q * d
        prefix.append(power_letters("T", q))
        prefix.append("S")
        a, b, c, d = c, d, -a, -b
    if a == 1:
        tail = power_letters("T", b)
    else:
        # (-1 b; 0 -1) = S² · T^(-b)
        tail = "SS" + power_letters("T", -b)
    return Sl2Word("".join(prefix) + tail)


def matrix_with_first_column(p: int, q: int) -> Sl2Matrix:
    """
    Some A in SL(2,Z) with A·e₁ = (p, q).

    Uses the extended Euclidean algorithm to solve p·r + q·s = 1 and
    returns (p -s; q r).

    Raises:
        ValueError: if (p, q) is not primitive.
    """
    g, r, s = _extended_gcd(p, q)
    if g != 1:
        raise ValueError(f"Direction ({p}, {q}) is not a primitive vector")
    return Sl2Matrix(p, -s, q, r)


def _extended_gcd(p: int, q: int) -> Tuple[int, int, int]:
    """(g, r, s) with p·r + q·s = g = gcd(p, q) >= 0."""
    old_r, r = p, q
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_u, u = u, old_u - quotient * u
        old_v, v = v, old_v - quotient * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def shear(m: int) -> Sl2Matrix:
    """The lower-triangular matrix (1 0; m 1)."""
    return Sl2Matrix(1, 0, m, 1)
