"""
Certificate Module for origami-veech.
Per-prime witnesses that a Veech group surjects onto SL(2,Z/nZ) for every
n, checked against the two-parabolic criterion:

For a prime p, matrices A₁, A₂ and exponents m₁, m₂ certify p when
  (i)   A₁e₁ is not congruent to j·A₂e₁ mod p for any j in 1..p-1,
  (ii)  p divides neither m₁ nor m₂,
  (iii) A₁T^m₁A₁⁻¹ and A₂T^m₂A₂⁻¹ lie in the Veech group.
A witness for every prime makes the group totally non-congruence.

Failing to find witnesses is not evidence of congruence; the criterion
is only sufficient.
"""

import logging
import math
from dataclasses import dataclass
from itertools import chain
from typing import Callable, Iterator, List, Optional, Union

from sympy import isprime, primefactors

from src.errors import NotPairwiseCoprimeError, OrderMismatchError
from src.groups import FiniteGroup, Permutation, compose, perm_order, perm_power
from src.modular.sl2 import Sl2Matrix, T, shear, word_to_matrix
from src.modular.veech import VeechGroup, contains
from src.serialization.codecs import origami_from_dict, origami_to_dict
from src.surfaces.origami import RegularOrigami, make_regular_origami

logger = logging.getLogger(__name__)

RESIDUAL_PRIMES = "proposition-1-uniform"

IDENTITY = Sl2Matrix.identity()
# T⁻¹S⁻¹ = (1 1; -1 0) carries (G, x, y) to (G, yx, x⁻¹)
T_INV_S_INV = word_to_matrix("ts")
# S⁻¹T = (0 1; -1 -1) carries (G, x, y) to (G, y, x⁻¹y⁻¹)
S_INV_T = word_to_matrix("sT")
# S⁻¹ = (0 1; -1 0) carries (G, x, y) to (G, y, x⁻¹)
S_INV = word_to_matrix("s")

Membership = Union[RegularOrigami, VeechGroup, Callable[[Sl2Matrix], bool]]


@dataclass(frozen=True)
class TncgWitness:
    """Matrices and exponents certifying one prime."""

    p: int
    case: str
    A1: Sl2Matrix
    A2: Sl2Matrix
    m1: int
    m2: int

    def parabolics(self):
        """The two conjugated parabolic elements."""
        return (
            self.A1 @ (T ** self.m1) @ self.A1.inverse(),
            self.A2 @ (T ** self.m2) @ self.A2.inverse(),
        )

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "case": self.case,
            "A1": self.A1.as_list(),
            "A2": self.A2.as_list(),
            "m1": self.m1,
            "m2": self.m2,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TncgWitness":
        return cls(
            p=int(data["p"]),
            case=data["case"],
            A1=Sl2Matrix.from_list(data["A1"]),
            A2=Sl2Matrix.from_list(data["A2"]),
            m1=int(data["m1"]),
            m2=int(data["m2"]),
        )


@dataclass
class TncgCertificate:
    """
    Witnesses for every prime dividing |G|.

    Primes not dividing |G| are covered by uniform_witness, recorded as the
    single clause in residual_primes.
    """

    origami: RegularOrigami
    witnesses: List[TncgWitness]
    method: str
    residual_primes: str = RESIDUAL_PRIMES

    @property
    def primes(self) -> List[int]:
        return [w.p for w in self.witnesses]

    def verify(self, membership: Optional[Membership] = None) -> bool:
        """Re-check every witness against the certified origami."""
        oracle = self.origami if membership is None else membership
        return all(
            verify_theorem1(oracle, w.p, w.A1, w.A2, w.m1, w.m2)
            for w in self.witnesses
        )

    def to_dict(self) -> dict:
        return {
            "origami": origami_to_dict(self.origami),
            "method": self.method,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "residual_primes": self.residual_primes,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TncgCertificate":
        return cls(
            origami=origami_from_dict(data["origami"]),
            witnesses=[TncgWitness.from_dict(w) for w in data["witnesses"]],
            method=data.get("method", "proposition"),
            residual_primes=data.get("residual_primes", RESIDUAL_PRIMES),
        )


def _membership_oracle(membership: Membership) -> Callable[[Sl2Matrix], bool]:
    if isinstance(membership, RegularOrigami):
        return lambda M: contains(membership, M)
    if isinstance(membership, VeechGroup):
        return membership.contains
    if callable(membership):
        return membership
    raise TypeError(f"Cannot test membership with {type(membership).__name__}")


def columns_independent_mod_p(A1: Sl2Matrix, A2: Sl2Matrix, p: int) -> bool:
    """
    True iff A₁e₁ is congruent to no multiple j·A₂e₁ with j in 1..p-1.

    j = 0 needs no check since A·e₁ is primitive and never vanishes mod p.
    """
    u1, u2 = A1.first_column()
    v1, v2 = A2.first_column()
    for j in range(1, p):
        if (u1 - j * v1) % p == 0 and (u2 - j * v2) % p == 0:
            return False
    return True


def verify_theorem1(
    membership: Membership,
    p: int,
    A1: Sl2Matrix,
    A2: Sl2Matrix,
    m1: int,
    m2: int
) -> bool:
    """
    Check the three witness conditions for the prime p.

    Args:
        membership: the origami, its VeechGroup, or any callable deciding
            membership of a matrix.
        p: a prime.
        A1, A2: matrices in SL(2,Z).
        m1, m2: positive exponents.

    Returns:
        True iff all three conditions hold.
    """
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if not columns_independent_mod_p(A1, A2, p):
        logger.debug(f"p={p}: columns {A1.first_column()} and {A2.first_column()} are proportional")
        return False
    if m1 <= 0 or m2 <= 0 or m1 % p == 0 or m2 % p == 0:
        logger.debug(f"p={p}: exponents ({m1}, {m2}) rejected")
        return False
    member = _membership_oracle(membership)
    for A, m in ((A1, m1), (A2, m2)):
        parabolic = A @ (T ** m) @ A.inverse()
        if not member(parabolic):
            logger.debug(f"p={p}: {parabolic} is not in the Veech group")
            return False
    return True


def uniform_witness(O: RegularOrigami, p: int) -> TncgWitness:
    """
    Witness for a prime p coprime to ord(y)·ord(yx).

    Uses A₁ = T⁻¹S⁻¹ with m₁ = ord(yx) and A₂ = S⁻¹T with m₂ = ord(y).
    Every prime not dividing |G| qualifies.

    Raises:
        ValueError: if p divides ord(y)·ord(yx).
    """
    ord_y = perm_order(O.y)
    ord_yx = perm_order(compose(O.y, O.x))
    if math.gcd(p, ord_y * ord_yx) != 1:
        raise ValueError(f"p={p} divides ord(y)·ord(yx) = {ord_y * ord_yx}")
    return TncgWitness(p=p, case="proposition-1", A1=T_INV_S_INV, A2=S_INV_T, m1=ord_yx, m2=ord_y)


def _shear_candidates(O: RegularOrigami, p: int) -> Iterator[TncgWitness]:
    """
    Pairs (1 0; m₁ 1), (1 0; m₂ 1) with m₁ ≢ m₂ mod p and p coprime to
    ord(xy^-m₁)·ord(xy^-m₂), scanned with m₁ ascending and 0 <= m₂ < m₁.

    m below p·ord(y) covers every class of (m mod p, m mod ord(y)).
    """
    ord_y = perm_order(O.y)
    orders = [
        perm_order(compose(O.x, perm_power(O.y, -r)))
        for r in range(ord_y)
    ]
    bound = p * ord_y
    for m1 in range(1, bound):
        k1 = orders[m1 % ord_y]
        if math.gcd(p, k1) != 1:
            continue
        for m2 in range(m1):
            if (m1 - m2) % p == 0:
                continue
            k2 = orders[m2 % ord_y]
            if math.gcd(p, k2) != 1:
                continue
            yield TncgWitness(p=p, case="proposition-2", A1=shear(m1), A2=shear(m2), m1=k1, m2=k2)


def certify_by_proposition(O: RegularOrigami, membership: Optional[Membership] = None) -> Optional[TncgCertificate]:
    """
    Look for a witness for every prime dividing |G|.

    Condition (1), p coprime to ord(y)·ord(yx), is tried first; otherwise
    shear pairs are searched. Every witness is verified before use.

    Args:
        O: the origami (G, x, y).
        membership: optional faster membership test (e.g. a VeechGroup).

    Returns:
        The certificate, or None if some prime admits no witness.
    """
    oracle = O if membership is None else membership
    ord_y = perm_order(O.y)
    ord_yx = perm_order(compose(O.y, O.x))
    witnesses = []

    for p in primefactors(O.group.order):
        candidates: List[TncgWitness] = []
        if math.gcd(p, ord_y * ord_yx) == 1:
            candidates.append(uniform_witness(O, p))
        found = None
        for witness in chain(candidates, _shear_candidates(O, p)):
            if verify_theorem1(oracle, witness.p, witness.A1, witness.A2, witness.m1, witness.m2):
                found = witness
                break
            logger.warning(f"Rejected witness {witness.to_dict()}")
        if found is None:
            logger.info(f"No witness for p={p}; criterion not satisfied")
            return None
        logger.info(f"p={p}: {found.case} witness with exponents ({found.m1}, {found.m2})")
        witnesses.append(found)

    return TncgCertificate(origami=O, witnesses=witnesses, method="proposition")


def abc_witness(p: int, a: int, b: int, c: int) -> TncgWitness:
    """
    Witness for the origami (G, y, x) built from (a,b,c)-generators x, y.

    Takes the first case that applies: p coprime to b·c, to a·c, to a·b.
    """
    if math.gcd(p, b * c) == 1:
        return TncgWitness(p=p, case="abc-bc", A1=IDENTITY, A2=T_INV_S_INV, m1=b, m2=c)
    if math.gcd(p, a * c) == 1:
        return TncgWitness(p=p, case="abc-ac", A1=T_INV_S_INV, A2=S_INV_T, m1=c, m2=a)
    if math.gcd(p, a * b) == 1:
        return TncgWitness(p=p, case="abc-ab", A1=IDENTITY, A2=S_INV, m1=b, m2=a)
    raise NotPairwiseCoprimeError(f"p={p} divides two of ({a}, {b}, {c})")


def certify_by_abc(
    G: FiniteGroup,
    x: Permutation,
    y: Permutation,
    a: int,
    b: int,
    c: int,
    membership: Optional[Membership] = None
) -> Optional[TncgCertificate]:
    """
    Certify the origami (G, y, x) for (a,b,c)-generators x, y.

    Args:
        G: the group.
        x, y: generators with ord(x)=a, ord(y)=b, ord(xy)=c.
        a, b, c: pairwise coprime orders.
        membership: optional membership test for (G, y, x).

    Returns:
        The certificate over the primes dividing |G|, or None if a
        witness fails verification.

    Raises:
        NotPairwiseCoprimeError: if a, b, c are not pairwise coprime.
        OrderMismatchError: if the generator orders differ from (a, b, c).
        NotGeneratingError: if x and y do not generate G.
    """
    if math.gcd(a, b) != 1 or math.gcd(b, c) != 1 or math.gcd(a, c) != 1:
        raise NotPairwiseCoprimeError(f"({a}, {b}, {c}) are not pairwise coprime")
    actual = (perm_order(x), perm_order(y), perm_order(compose(x, y)))
    if actual != (a, b, c):
        raise OrderMismatchError(f"Generators have orders {actual}, expected ({a}, {b}, {c})")

    O = make_regular_origami(G, y, x)
    oracle = O if membership is None else membership
    witnesses = []
    for p in primefactors(G.order):
        witness = abc_witness(p, a, b, c)
        if not verify_theorem1(oracle, witness.p, witness.A1, witness.A2, witness.m1, witness.m2):
            logger.error(f"Witness {witness.to_dict()} failed verification")
            return None
        logger.info(f"p={p}: {witness.case} witness")
        witnesses.append(witness)

    return TncgCertificate(origami=O, witnesses=witnesses, method="abc")
