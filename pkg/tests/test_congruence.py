"""
Surjectivity and Non-Congruence Certificate Tests for origami-veech
"""

import itertools
import math
import sys
from pathlib import Path

import pytest
from sympy import primerange

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.congruence import (
    TncgCertificate,
    abc_witness,
    certify_by_abc,
    certify_by_proposition,
    columns_independent_mod_p,
    image_order_mod_n,
    sl2_mod_n_order,
    surjectivity_table,
    surjects_mod_n,
    uniform_witness,
    verify_theorem1,
)
from src.errors import NotPairwiseCoprimeError, OrderMismatchError, ResourceLimitError
from src.families import (
    abc_search,
    alternating_origami,
    catalog,
    dihedral_origami,
    psl2_group,
    trivial_origami,
)
from src.groups import compose, perm_power
from src.modular import S, Sl2Matrix, T, shear, veech_group, word_to_matrix

# Generators of the principal congruence subgroup of level 2
GAMMA_2 = [T ** 2, Sl2Matrix(1, 0, 2, 1), Sl2Matrix(-1, 0, 0, -1)]

# Coprime factorizations n = a·b with 2 <= a < b and n <= 24
COPRIME_FACTORS = [
    (a, b) for a in range(2, 25) for b in range(a + 1, 25)
    if a * b <= 24 and math.gcd(a, b) == 1
]

CATALOG_NAMES = ["torus", "d8", "d10", "a5", "psl2_7"]


def brute_force_sl2_order(n):
    return sum(
        1 for a, b, c, d in itertools.product(range(n), repeat=4)
        if (a * d - b * c) % n == 1 % n
    )


@pytest.fixture(scope="module")
def catalog_origamis():
    return catalog()


@pytest.fixture(scope="module")
def a5_origami():
    return alternating_origami(5)


@pytest.fixture(scope="module")
def a5_veech(a5_origami):
    return veech_group(a5_origami, use_cache=False)


@pytest.fixture(scope="module")
def psl2_7_pair():
    G = psl2_group(7)
    x, y = abc_search(G, 2, 3, 7)
    return G, x, y


class TestSl2Orders:
    """Test |SL(2,Z/nZ)|."""

    def test_small_values(self):
        """Known orders for n = 2..7."""
        assert [sl2_mod_n_order(n) for n in range(2, 8)] == [6, 24, 48, 120, 144, 336]

    @pytest.mark.parametrize("n", range(2, 13))
    def test_matches_brute_force(self, n):
        """Formula agrees with counting determinant-one matrices."""
        assert sl2_mod_n_order(n) == brute_force_sl2_order(n)

    def test_generators_close_to_everything(self):
        """S and T generate SL(2,Z/nZ)."""
        for n in range(2, 13):
            assert image_order_mod_n([S, T], n) == sl2_mod_n_order(n)


class TestSurjectivity:
    """Test surjectivity onto SL(2,Z/nZ)."""

    def test_torus(self):
        """SL(2,Z) surjects for every n."""
        V = veech_group(trivial_origami(), use_cache=False)
        assert all(surjects_mod_n(V, n) for n in range(1, 13))

    def test_a5(self, a5_veech):
        """The A5 Veech group surjects for n = 2..24."""
        table = surjectivity_table(a5_veech, 24)
        assert table["n"].tolist() == list(range(2, 25))
        assert table["surjects"].all()

    def test_level_two_subgroup(self):
        """Γ(2) misses every even modulus and hits every odd one."""
        table = surjectivity_table(GAMMA_2, 12)
        for row in table.itertuples(index=False):
            assert row.surjects == (row.n % 2 == 1)

    @pytest.mark.parametrize("a,b", COPRIME_FACTORS)
    def test_chinese_remainder(self, a, b, a5_veech):
        """Surjectivity mod ab is surjectivity mod a and mod b."""
        for generators in (GAMMA_2, [S, T], [T ** 3, S], a5_veech):
            assert surjects_mod_n(generators, a * b) == (
                surjects_mod_n(generators, a) and surjects_mod_n(generators, b)
            )

    def test_chinese_remainder_detects_failures(self):
        """The level-2 and level-3 groups fail exactly where a factor fails."""
        assert not surjects_mod_n(GAMMA_2, 6)
        assert not surjects_mod_n([T ** 3, S], 15)
        assert surjects_mod_n([T ** 3, S], 20)

    def test_table_columns(self, a5_veech):
        """Columns n, sl2_order, image_order, surjects."""
        table = surjectivity_table(a5_veech, 4)
        assert list(table.columns) == ["n", "sl2_order", "image_order", "surjects"]
        assert table["sl2_order"].tolist() == [6, 24, 48]

    def test_empty_table(self):
        """max_n < 2 gives no rows."""
        assert surjectivity_table([S, T], 1).empty

    def test_modulus_bound(self):
        """Moduli above the bound are refused."""
        with pytest.raises(ResourceLimitError):
            surjects_mod_n([S, T], 100, max_modulus=60)
        with pytest.raises(ResourceLimitError):
            surjectivity_table([S, T], 100, max_modulus=60)


class TestWitnessConditions:
    """Test the three per-prime witness conditions."""

    def test_columns(self):
        """(1,0) and (1,p) are proportional mod p only."""
        assert not columns_independent_mod_p(Sl2Matrix.identity(), shear(5), 5)
        assert columns_independent_mod_p(Sl2Matrix.identity(), shear(5), 7)

    def test_accepting_oracle(self):
        """With every matrix a member, only conditions (i) and (ii) decide."""
        member = lambda M: True
        st = word_to_matrix("st")
        assert st == Sl2Matrix(0, 1, -1, 1)
        assert verify_theorem1(member, 5, Sl2Matrix.identity(), st, 2, 3)
        assert not verify_theorem1(member, 5, st, st, 2, 3)
        assert not verify_theorem1(member, 5, Sl2Matrix.identity(), st, 5, 3)
        assert not verify_theorem1(member, 5, Sl2Matrix.identity(), st, 2, 0)

    def test_rejecting_oracle(self):
        """Condition (iii) fails when the parabolics are not members."""
        assert not verify_theorem1(lambda M: False, 5, Sl2Matrix.identity(), word_to_matrix("st"), 2, 3)

    def test_not_prime(self, a5_origami):
        """p must be prime."""
        with pytest.raises(ValueError):
            verify_theorem1(a5_origami, 6, Sl2Matrix.identity(), word_to_matrix("st"), 1, 1)

    def test_uniform_witness_for_other_primes(self, a5_origami, a5_veech):
        """The uniform witness works for the first primes not dividing 60."""
        for p in list(primerange(7, 20))[:3]:
            w = uniform_witness(a5_origami, p)
            assert (w.m1, w.m2) == (5, 5)
            assert verify_theorem1(a5_origami, p, w.A1, w.A2, w.m1, w.m2)
            assert verify_theorem1(a5_veech, p, w.A1, w.A2, w.m1, w.m2)

    @pytest.mark.parametrize("name", CATALOG_NAMES)
    def test_uniform_witness_on_catalog(self, name, catalog_origamis):
        """The first three primes not dividing |G| get a verified uniform witness."""
        O = catalog_origamis[name]
        primes = [p for p in primerange(2, 100) if O.squares % p != 0][:3]
        assert len(primes) == 3
        for p in primes:
            w = uniform_witness(O, p)
            assert w.case == "proposition-1"
            assert verify_theorem1(O, p, w.A1, w.A2, w.m1, w.m2)

    def test_uniform_witness_refuses_dividing_prime(self, a5_origami):
        """p = 5 divides ord(y)."""
        with pytest.raises(ValueError):
            uniform_witness(a5_origami, 5)


class TestCertifyByProposition:
    """Test the per-prime certificate search."""

    def test_a5(self, a5_origami):
        """A5: uniform witnesses for 2 and 3, a shear pair for 5."""
        certificate = certify_by_proposition(a5_origami)
        assert certificate is not None
        assert certificate.primes == [2, 3, 5]
        assert [w.case for w in certificate.witnesses] == ["proposition-1", "proposition-1", "proposition-2"]
        w5 = certificate.witnesses[2]
        assert (w5.A1, w5.A2, w5.m1, w5.m2) == (shear(1), Sl2Matrix.identity(), 3, 3)
        assert certificate.verify()

    @pytest.mark.parametrize("n", [5, 7])
    def test_alternating_fixed_point(self, n):
        """x·y^(n-1) fixes the point 2, and the last prime uses shears (1, 0)."""
        O = alternating_origami(n)
        assert 2 in compose(O.x, perm_power(O.y, n - 1)).fixed_points()
        certificate = certify_by_proposition(O)
        assert certificate is not None
        last = certificate.witnesses[-1]
        assert last.p == n
        assert (last.A1, last.A2) == (shear(1), Sl2Matrix.identity())

    def test_with_veech_membership(self, a5_origami, a5_veech):
        """A VeechGroup can serve as the membership test."""
        certificate = certify_by_proposition(a5_origami, membership=a5_veech)
        assert certificate is not None
        assert certificate.verify(a5_veech)

    def test_torus_vacuous(self):
        """The trivial group has no primes to certify."""
        certificate = certify_by_proposition(trivial_origami())
        assert certificate is not None
        assert certificate.witnesses == []

    def test_d8_not_satisfied(self):
        """Every relevant order in D8 is even, so p = 2 has no witness."""
        assert certify_by_proposition(dihedral_origami(4)) is None

    def test_round_trip(self, a5_origami):
        """Certificates survive to_dict/from_dict and still verify."""
        certificate = certify_by_proposition(a5_origami)
        rebuilt = TncgCertificate.from_dict(certificate.to_dict())
        assert rebuilt.witnesses == certificate.witnesses
        assert rebuilt.origami.pair == a5_origami.pair
        assert rebuilt.residual_primes == certificate.residual_primes
        assert rebuilt.verify()


class TestCertifyByAbc:
    """Test certificates for (a,b,c)-generated groups."""

    def test_witness_cases(self):
        """(2,3,7): p=2 uses b,c; p=3 uses a,c; p=7 uses a,b."""
        assert abc_witness(2, 2, 3, 7).case == "abc-bc"
        assert abc_witness(3, 2, 3, 7).case == "abc-ac"
        assert abc_witness(7, 2, 3, 7).case == "abc-ab"

    def test_psl2_7(self, psl2_7_pair):
        """PSL(2,7) with (2,3,7)-generators is certified."""
        G, x, y = psl2_7_pair
        certificate = certify_by_abc(G, x, y, 2, 3, 7)
        assert certificate is not None
        assert certificate.primes == [2, 3, 7]
        assert certificate.method == "abc"
        assert certificate.origami.pair == (y, x)
        assert certificate.verify()

    def test_a5(self):
        """A5 with (2,3,5)-generators is certified."""
        O = alternating_origami(5)
        x, y = abc_search(O.group, 2, 3, 5)
        certificate = certify_by_abc(O.group, x, y, 2, 3, 5)
        assert certificate is not None
        assert certificate.primes == [2, 3, 5]

    @pytest.mark.parametrize("orders", [(2, 4, 5), (5, 5, 3)])
    def test_not_pairwise_coprime(self, psl2_7_pair, orders):
        """Orders sharing a factor are rejected."""
        G, x, y = psl2_7_pair
        with pytest.raises(NotPairwiseCoprimeError):
            certify_by_abc(G, x, y, *orders)

    def test_order_mismatch(self, psl2_7_pair):
        """(2,3,5) does not describe the PSL(2,7) generators."""
        G, x, y = psl2_7_pair
        with pytest.raises(OrderMismatchError):
            certify_by_abc(G, x, y, 2, 3, 5)
