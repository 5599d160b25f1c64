"""Ring families: divisibility, units, atoms, enumeration, the registry."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from condense.rings import (
    ZZ,
    FieldDomain,
    QuadraticOrder,
    SemigroupRing,
    condensed_status,
    divides,
    element_divisors,
    enumerate_elements,
    is_atom,
    is_unit,
    quad_elements_of_norm,
)
from condense.verdicts import PreconditionError

Z5 = QuadraticOrder(-5)
Z2 = QuadraticOrder(2)
SGR = SemigroupRing(24)


class TestDivides:
    def test_integers(self):
        assert divides(3, 12, ZZ) == (True, 4)
        assert divides(5, 12, ZZ) == (False, None)

    def test_semigroup_monomials(self):
        ok, q = divides(SGR.monomial(2), SGR.monomial(5), SGR)
        assert ok and q == SGR.monomial(3)

    def test_quadratic_failure(self):
        # oracle: (1 + w)/2 has coordinates (1/2, 1/2), not integral
        ok, q = divides(Z5.element(2), Z5.element(1, 1), Z5)
        assert not ok and q is None

    def test_quadratic_success(self):
        # (1+w)(1-w) = 1 - w^2 = 6
        ok, q = divides(Z5.element(1, 1), Z5.element(6), Z5)
        assert ok and q == Z5.element(1, -1)

    def test_zero_divisor_rejected(self):
        with pytest.raises(PreconditionError):
            divides(0, 4, ZZ)

    def test_semigroup_forbidden_exponent_in_quotient(self):
        # t^5 / t^4 would be t, which is not in the ring
        ok, q = divides(SGR.monomial(4), SGR.monomial(5), SGR)
        assert not ok

    @settings(max_examples=60, deadline=None)
    @given(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
    def test_quadratic_remultiplication(self, a, b, c, d):
        x = Z5.element(a, b)
        y = Z5.element(c, d)
        if x.is_zero():
            return
        ok, q = divides(x, y, Z5)
        if ok:
            assert x * q == y

    def test_semigroup_division_validated_by_remultiplication(self):
        rng = random.Random(5)
        for _ in range(60):
            d = SGR.element(
                {e: rng.randint(-3, 3) for e in rng.sample([0, 2, 3, 4, 5], 3)}
            )
            x = SGR.element(
                {e: rng.randint(-3, 3) for e in rng.sample([2, 3, 4, 5, 6, 7], 3)}
            )
            if d.is_zero():
                continue
            ok, q = divides(d, x, SGR)
            if ok:
                assert d * q == x


class TestIsUnit:
    def test_integers(self):
        assert is_unit(1, ZZ) and is_unit(-1, ZZ)
        assert not is_unit(2, ZZ)

    def test_semigroup(self):
        assert not is_unit(SGR.monomial(2), SGR)
        assert is_unit(SGR.element({0: 1, 2: 5}), SGR)

    def test_quadratic_norm(self):
        assert not is_unit(Z5.element(2, 1), Z5)  # norm 9
        assert is_unit(Z5.element(-1), Z5)
        assert is_unit(Z2.element(1, 1), Z2)  # norm -1

    def test_zero_rejected(self):
        with pytest.raises(PreconditionError):
            is_unit(0, ZZ)


class TestIsAtom:
    def test_two_is_an_atom_in_zsqrt_minus5(self):
        # oracle first: elements of norm 2 would need a^2 + 5 b^2 = 2
        assert quad_elements_of_norm(Z5, 2) == []
        assert is_atom(Z5.element(2), Z5).is_holds

    def test_t_squared_is_an_atom(self):
        assert is_atom(SGR.monomial(2), SGR).is_holds
        assert is_atom(SGR.monomial(3), SGR).is_holds

    def test_six_factors(self):
        v = is_atom(6, ZZ)
        assert v.is_fails
        r, s = v.counterexample
        assert r * s == 6 and not is_unit(r, ZZ) and not is_unit(s, ZZ)

    def test_order_four_semigroup_element_factors(self):
        x = SGR.element({4: 1, 5: 1})
        v = is_atom(x, SGR)
        assert v.is_fails
        r, s = v.counterexample
        assert r * s == x

    def test_unit_rejected(self):
        with pytest.raises(PreconditionError):
            is_atom(1, ZZ)

    def test_real_quadratic_factors_or_unknown(self):
        v = is_atom(Z2.element(2), Z2, bound=4)
        # 2 = w * w in Z[sqrt(2)]
        assert v.is_fails
        r, s = v.counterexample
        assert r * s == Z2.element(2)

    def test_fails_witness_always_reverifies(self):
        for a in [4, 6, 9, 10, -8, 15]:
            v = is_atom(a, ZZ)
            assert v.is_fails
            r, s = v.counterexample
            assert r * s == a and not is_unit(r, ZZ) and not is_unit(s, ZZ)


class TestElementDivisors:
    def test_divisors_of_six_in_zsqrt_minus5(self):
        divs = element_divisors(Z5.element(6), Z5)
        # every listed divisor divides; the interesting norms all appear
        for r in divs:
            ok, _ = divides(r, Z5.element(6), Z5)
            assert ok
        norms = {abs(r.norm()) for r in divs}
        assert norms == {1, 4, 6, 9, 36}

    def test_complete_for_integers(self):
        assert element_divisors(12, ZZ) == [1, -1, 2, -2, 3, -3, 4, -4, 6, -6, 12, -12]


class TestEnumerate:
    def test_integers(self):
        assert enumerate_elements(ZZ, 2) == [1, -1, 2, -2]

    def test_quadratic_height_one(self):
        elems = enumerate_elements(Z5, 1)
        assert len(elems) == 8
        assert elems[0] == Z5.element(0, 1)  # w comes first
        assert Z5.element(1, 1) in elems

    def test_semigroup_monomials(self):
        ms = enumerate_elements(SemigroupRing(12), 1)
        assert ms[:5] == [SemigroupRing(12).monomial(e) for e in (2, 3, 4, 5, 6)]
        assert all(m.is_monomial() for m in ms)

    @pytest.mark.parametrize("domain", [ZZ, Z5, SGR])
    def test_prefix_property(self, domain):
        small = enumerate_elements(domain, 2)
        large = enumerate_elements(domain, 4)
        assert large[: len(small)] == small
        assert len(set(map(str, large))) == len(large)

    def test_bad_height(self):
        with pytest.raises(PreconditionError):
            enumerate_elements(ZZ, 0)


class TestSemigroupElements:
    def test_exponent_one_rejected(self):
        with pytest.raises(ValueError):
            SGR.element({1: 1})

    def test_exponent_above_truncation_rejected(self):
        with pytest.raises(ValueError):
            SGR.element({25: 1})

    def test_multiplication_truncates(self):
        x = SGR.monomial(20)
        y = SGR.monomial(5)
        assert (x * y).is_zero()

    def test_canonical_form_drops_zeros(self):
        x = SGR.element({2: 1, 3: 0})
        assert x.coeffs == ((2, Fraction(1)),)


class TestRegistry:
    def test_structural_families(self):
        assert condensed_status(ZZ).kind == "condensed"
        assert condensed_status(FieldDomain(None)).kind == "condensed"
        st_sgr = condensed_status(SGR)
        assert st_sgr.kind == "condensed"
        assert "24" in st_sgr.reason  # verdicts are tagged with the truncation

    def test_quadratic_orders_start_unknown(self):
        assert condensed_status(Z5).kind == "unknown"

    def test_squarefree_validation(self):
        with pytest.raises(ValueError):
            QuadraticOrder(4)
        with pytest.raises(ValueError):
            QuadraticOrder(1)
        with pytest.raises(ValueError):
            QuadraticOrder(12)
