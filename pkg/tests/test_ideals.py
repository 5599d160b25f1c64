"""Ideal calculus: canonical forms, v-operations, differential oracles."""

import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from condense.ideals import (
    ExplicitGenerators,
    FractionalIdeal,
    MonomialIdeal,
    comaximal,
    ideal_colon,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    is_principal,
    membership,
    v_closure,
    v_coprime,
)
from condense.lattice import det_echelon, hnf, lattice_contains
from condense.rings import ZZ, QuadraticOrder, SemigroupRing
from condense.verdicts import (
    DomainMismatchError,
    PreconditionError,
    UnsupportedOperationError,
)

Z5 = QuadraticOrder(-5)
SGR = SemigroupRing(24)


def zi(*gens):
    return FractionalIdeal.from_elements(ZZ, list(gens))


def qi(*pairs):
    return FractionalIdeal.from_elements(Z5, [Z5.element(a, b) for a, b in pairs])


def mi(*exps):
    return MonomialIdeal(SGR, exps)


P = qi((2, 0), (1, 1))  # the ramified prime above 2


class TestProduct:
    def test_integers(self):
        assert zi(2) * zi(3) == zi(6)

    def test_ramified_prime_squares_to_two(self):
        # oracle: the four generator products 4, 2(1+w), 2(1+w), (1+w)^2 = -4+2w
        # span the same lattice as (2): rows (2,0),(0,2)
        gen_products = [
            Z5.element(4),
            Z5.element(2, 2),
            Z5.element(-4, 2),
        ]
        oracle = FractionalIdeal.from_elements(Z5, gen_products)
        assert oracle == qi((2, 0))
        assert P * P == qi((2, 0))

    def test_monomial_sumset(self):
        prod = mi(2, 3) * mi(2, 3)
        # equal, as an ideal, to (t^4, t^5, t^6); the canonical minimal
        # generator list drops t^6 because t^6 = t^2 * t^4
        assert prod == mi(4, 5, 6)
        assert prod.gens == (4, 5)

    def test_domain_mismatch(self):
        with pytest.raises(DomainMismatchError):
            ideal_product(zi(2), qi((3, 0)))


class TestIntersect:
    def test_integers_lcm(self):
        assert zi(4).intersect(zi(6)) == zi(12)

    def test_monomial_examples(self):
        assert mi(2).intersect(mi(3)) == mi(5, 6)
        assert mi(4).intersect(mi(5)).intersect(mi(6)) == mi(8, 9)

    def test_explicit_generators_unsupported(self):
        with pytest.raises(UnsupportedOperationError):
            ideal_intersect(ExplicitGenerators(ZZ, (2,)), ExplicitGenerators(ZZ, (3,)))


class TestColon:
    def test_unit_colon_two(self):
        out = FractionalIdeal.unit(ZZ).colon(zi(2))
        assert out == FractionalIdeal(ZZ, [(1,)], 2)

    def test_inverse_of_ramified_prime(self):
        inv = P.inverse()
        # verified by I * I^-1 <= D and exact equality with P/2
        assert inv == FractionalIdeal(Z5, P.rows, 2)
        assert FractionalIdeal.unit(Z5).contains_ideal(P * inv)

    def test_monomial_principal_shift(self):
        out = MonomialIdeal.unit(SGR).colon(mi(2))
        assert out.gens == (-2,)


class TestVClosure:
    def test_principal_is_fixed(self):
        assert v_closure(zi(7)) == zi(7)
        assert v_closure(mi(5)) == mi(5)

    def test_gcd_in_pid(self):
        assert v_closure(zi(4, 6)) == zi(2)

    def test_ramified_prime_is_divisorial(self):
        assert v_closure(P) == P

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(-9, 9), min_size=2, max_size=2),
           st.lists(st.integers(-9, 9), min_size=2, max_size=2))
    def test_v_closure_properties(self, a, b):
        if a == [0, 0] or b == [0, 0]:
            return
        i = FractionalIdeal.from_elements(Z5, [Z5.element(*a)])
        j = FractionalIdeal.from_elements(Z5, [Z5.element(*a), Z5.element(*b)])
        for ideal in (i, j):
            vc = v_closure(ideal)
            assert vc.contains_ideal(ideal)
            assert v_closure(vc) == vc
        assert v_closure(i * j) == v_closure(v_closure(i) * v_closure(j))


class TestVCoprime:
    def test_integers(self):
        assert v_coprime(2, 3, ZZ) is True
        assert v_coprime(4, 6, ZZ) is False

    def test_quadratic(self):
        assert v_coprime(Z5.element(2), Z5.element(1, 1), Z5) is False
        assert v_coprime(Z5.element(2), Z5.element(3), Z5) is True

    def test_semigroup_monomials(self):
        assert v_coprime(SGR.monomial(2), SGR.monomial(3), SGR) is False

    def test_zero_rejected(self):
        with pytest.raises(PreconditionError):
            v_coprime(0, 3, ZZ)


class TestComaximal:
    def test_examples(self):
        assert comaximal(zi(2), zi(3)) is True
        assert comaximal(mi(2), mi(3)) is False

    def test_quadratic(self):
        assert comaximal(qi((2, 0)), qi((3, 0))) is True
        assert comaximal(P, qi((2, 0))) is False


class TestIsPrincipal:
    def test_integers(self):
        v = is_principal(zi(4, 6))
        assert v.is_holds and v.witness[0] == 2

    def test_ramified_prime_fails(self):
        assert is_principal(P).is_fails

    def test_principal_quadratic(self):
        v = is_principal(qi((1, 1)))
        assert v.is_holds
        g, den = v.witness
        assert den == 1
        assert FractionalIdeal.from_elements(Z5, [g]) == qi((1, 1))

    def test_monomial(self):
        assert is_principal(mi(5, 6)).is_fails
        assert is_principal(mi(4)).is_holds


class TestMembership:
    def test_examples(self):
        assert membership(12, zi(4, 6)) is True
        assert membership(SGR.monomial(7), mi(5, 6)) is True
        assert membership(Z5.element(1, 1), qi((2, 0))) is False

    def test_fractional(self):
        half = FractionalIdeal(ZZ, [(1,)], 2)
        assert half.contains([Fraction(3, 2)])
        assert not half.contains([Fraction(1, 3)])


class TestExplicitGenerators:
    def test_membership_bounded(self):
        e = ExplicitGenerators(ZZ, (4, 6))
        assert e.membership(2, bound=2).is_holds  # 2 = -4 + 6
        assert e.membership(1, bound=5).is_unknown

    def test_product(self):
        e = ExplicitGenerators(ZZ, (2, 3)).product(ExplicitGenerators(ZZ, (5,)))
        assert e.gens == (10, 15)

    def test_canonicalize(self):
        assert ExplicitGenerators(ZZ, (4, 6)).canonicalize() == zi(2)


class TestStarInclusion:
    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.integers(1, 12), min_size=1, max_size=3),
           st.lists(st.integers(1, 12), min_size=1, max_size=3))
    def test_easy_inclusion_in_z(self, a_list, b_list):
        lhs_a = None
        for a in a_list:
            cur = zi(a)
            lhs_a = cur if lhs_a is None else lhs_a.intersect(cur)
        lhs_b = None
        for b in b_list:
            cur = zi(b)
            lhs_b = cur if lhs_b is None else lhs_b.intersect(cur)
        lhs = lhs_a * lhs_b
        rhs = None
        for a in a_list:
            for b in b_list:
                cur = zi(a * b)
                rhs = cur if rhs is None else rhs.intersect(cur)
        assert rhs.contains_ideal(lhs)


# ---------------------------------------------------------------------------
# Differential suite (small here; the heavyweight version is in acceptance)


def test_integer_ideals_against_gcd_oracle():
    rng = random.Random(3)
    for _ in range(150):
        a = [rng.randint(-12, 12) for _ in range(rng.randint(1, 3))]
        b = [rng.randint(-12, 12) for _ in range(rng.randint(1, 3))]
        if not any(a) or not any(b):
            continue
        ga = gcd(*(abs(x) for x in a)) if len(a) > 1 else abs(a[0])
        gb = gcd(*(abs(x) for x in b)) if len(b) > 1 else abs(b[0])
        ia = zi(*[x for x in a if x])
        ib = zi(*[x for x in b if x])
        assert ia == zi(ga)
        assert ia * ib == zi(ga * gb)
        assert ia.intersect(ib) == zi(ga * gb // gcd(ga, gb))
        # the colon is taken inside the quotient field: (a : b) = (a/b) Z
        g = gcd(ga, gb)
        assert ia.colon(ib) == FractionalIdeal(ZZ, [(ga // g,)], gb // g)


def test_quadratic_ideals_against_coset_oracles():
    rng = random.Random(11)
    done = 0
    while done < 25:
        gens_i = [Z5.element(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(2)]
        gens_j = [Z5.element(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(2)]
        gens_i = [g for g in gens_i if not g.is_zero()]
        gens_j = [g for g in gens_j if not g.is_zero()]
        if not gens_i or not gens_j:
            continue
        i = FractionalIdeal.from_elements(Z5, gens_i)
        j = FractionalIdeal.from_elements(Z5, gens_j)
        if det_echelon(j.rows) > 40:
            continue
        assert i.intersect(j) == helpers.brute_quadratic_intersect(Z5, i, j)
        assert i.colon(j) == helpers.brute_quadratic_colon(Z5, i, j)
        done += 1


def test_product_oracle_via_generator_membership():
    # every pairwise generator product must land in the canonical product,
    # and the product must be spanned by them
    rng = random.Random(13)
    for _ in range(25):
        gens_i = [Z5.element(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(2)]
        gens_j = [Z5.element(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(2)]
        gens_i = [g for g in gens_i if not g.is_zero()]
        gens_j = [g for g in gens_j if not g.is_zero()]
        if not gens_i or not gens_j:
            continue
        i = FractionalIdeal.from_elements(Z5, gens_i)
        j = FractionalIdeal.from_elements(Z5, gens_j)
        prod = i * j
        raw = []
        for x in gens_i:
            for y in gens_j:
                raw.append(x * y)
                raw.append(Z5.omega() * x * y)
        assert all(prod.contains(p) for p in raw)
        assert FractionalIdeal.from_elements(Z5, raw) == prod
