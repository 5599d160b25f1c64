"""Exact scalar arithmetic: number fields, rational roots, linear algebra."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from condense.exactnum import (
    FieldMismatchError,
    NumberField,
    QPoly,
    linearly_independent,
    nf_inverse,
    nf_mul,
    rational_roots,
)
from condense.verdicts import ParseError

F2 = NumberField([-2, 0, 1])  # x^2 - 2
F3 = NumberField([-2, 0, 0, 1])  # x^3 - 2
F4 = NumberField([-2, 0, 0, 0, 1])  # x^4 - 2


def naive_reduce(minpoly, coeffs):
    """Independent reduction oracle: long division by the minimal polynomial."""
    cs = [Fraction(c) for c in coeffs]
    n = len(minpoly) - 1
    while len(cs) > n:
        lead = cs.pop()
        # x^k = x^(k-n) * (x^n - minpoly_tail)
        for i, m in enumerate(minpoly[:-1]):
            cs[len(cs) - n + i] -= lead * m
    cs += [Fraction(0)] * (n - len(cs))
    return tuple(cs)


def naive_mul(field, a, b):
    """Independent multiplication oracle (plain convolution + long division)."""
    conv = [Fraction(0)] * (2 * field.degree - 1)
    for i, x in enumerate(a.coords):
        for j, y in enumerate(b.coords):
            conv[i + j] += x * y
    return field.element(naive_reduce(field.minpoly, conv))


def rand_elements(field, count, seed):
    import random

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        coords = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(field.degree)]
        out.append(field.element(coords))
    return out


class TestNfMul:
    def test_square_root_of_two(self):
        th = F2.gen()
        assert th * th == F2.from_rational(2)

    def test_difference_of_squares(self):
        th = F2.gen()
        assert (F2.one() + th) * (F2.one() - th) == F2.from_rational(-1)

    def test_quartic_power_product(self):
        # oracle first: th^2 * th^3 reduced mod th^4 - 2 by long division
        th = F4.gen()
        expected = naive_mul(F4, th * th, th * th * th)
        assert expected == F4.element([0, 2, 0, 0])  # frozen: 2*th
        assert nf_mul(th * th, th * th * th) == expected

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            nf_mul(F2.gen(), F3.gen())

    def test_matches_naive_oracle_on_random_elements(self):
        for fld, seed in ((F2, 1), (F3, 2), (F4, 3)):
            xs = rand_elements(fld, 8, seed)
            for a in xs:
                for b in xs:
                    assert a * b == naive_mul(fld, a, b)


class TestNfInverse:
    def test_rational(self):
        assert nf_inverse(F2.from_rational(2)) == F2.from_rational(Fraction(1, 2))

    def test_one_plus_root_two(self):
        # oracle: (1 + th)(u + v*th) = (u + 2v) + (u + v)th = 1
        # => u = -v and v = 1, i.e. the inverse is th - 1
        th = F2.gen()
        a = F2.one() + th
        inv = nf_inverse(a)
        assert inv == F2.element([-1, 1])
        assert a * inv == F2.one()

    def test_cube_root(self):
        th = F3.gen()
        # th * th^2 = 2, so 1/th = th^2 / 2
        assert nf_inverse(th) == F3.element([0, 0, Fraction(1, 2)])

    def test_zero_input(self):
        with pytest.raises(ZeroDivisionError):
            nf_inverse(F2.zero())

    def test_inverse_property_random(self):
        for fld, seed in ((F3, 11), (F4, 12)):
            for a in rand_elements(fld, 10, seed):
                if a.is_zero():
                    continue
                assert a * nf_inverse(a) == fld.one()


small_rats = st.fractions(
    min_value=-4, max_value=4, max_denominator=4
)


@st.composite
def f3_elements(draw):
    return F3.element([draw(small_rats) for _ in range(3)])


class TestFieldAxioms:
    @settings(max_examples=60, deadline=None)
    @given(f3_elements(), f3_elements(), f3_elements())
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a

    @settings(max_examples=40, deadline=None)
    @given(f3_elements())
    def test_inverse_round_trip(self, a):
        if not a.is_zero():
            assert a * a.inverse() == F3.one()


class TestLinearlyIndependent:
    def test_power_basis(self):
        th = F2.gen()
        assert linearly_independent([F2.one(), th])
        th4 = F4.gen()
        assert linearly_independent([F4.one(), th4, th4 ** 2, th4 ** 3])

    def test_dependent_triple(self):
        th = F2.gen()
        assert not linearly_independent([F2.one(), th, F2.one() + th])

    def test_empty_list(self):
        with pytest.raises(ValueError):
            linearly_independent([])

    @settings(max_examples=30, deadline=None)
    @given(st.permutations([0, 1, 2]), st.sampled_from([1, -1, 2, Fraction(1, 3)]))
    def test_invariance_under_permutation_and_scaling(self, perm, scale):
        th = F3.gen()
        vs = [F3.one(), th, th * th]
        shuffled = [vs[i] * (scale if i == perm[0] else 1) for i in perm]
        assert linearly_independent(shuffled)


class TestRationalRoots:
    def test_examples(self):
        assert rational_roots(QPoly([-1, 0, 1])) == [Fraction(-1), Fraction(1)]
        assert rational_roots(QPoly([-3, 2])) == [Fraction(3, 2)]
        assert rational_roots(QPoly([-2, 0, 1])) == []

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            rational_roots(QPoly([]))

    def test_root_at_zero(self):
        assert Fraction(0) in rational_roots(QPoly([0, 0, 1]))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(small_rats, min_size=1, max_size=3))
    def test_planted_roots_are_recovered(self, roots):
        p = QPoly([1, 0, 1])  # irrational quadratic factor
        for r in roots:
            p = p * QPoly([-r.numerator, r.denominator])
        found = rational_roots(p)
        assert set(found) == set(roots)
        for r in found:
            assert p(r) == 0


class TestNumberFieldValidation:
    def test_reducible_quadratic_rejected(self):
        with pytest.raises(ParseError):
            NumberField([-4, 0, 1])  # (x-2)(x+2)

    def test_reducible_quartic_with_quadratic_factors_rejected(self):
        with pytest.raises(ParseError):
            NumberField([4, 0, 0, 0, 1])  # x^4+4 = (x^2-2x+2)(x^2+2x+2)

    def test_irreducible_quartics_accepted(self):
        for coeffs in ([1, 0, 0, 0, 1], [-1, -1, 0, 0, 1], [-3, 0, 0, 0, 1]):
            assert NumberField(coeffs).degree == 4

    def test_degree_cap(self):
        with pytest.raises(ParseError):
            NumberField([-2, 0, 0, 0, 0, 1])

    def test_non_monic_rejected(self):
        with pytest.raises(ParseError):
            NumberField([-2, 0, 2])

    def test_root_zero_rejected(self):
        with pytest.raises(ParseError):
            NumberField([0, 0, 1])


class TestQPoly:
    def test_divmod_round_trip(self):
        a = QPoly([1, 2, 0, 1])
        b = QPoly([1, 1])
        q, r = a.divmod(b)
        assert q * b + r == a
        assert r.degree < b.degree

    def test_exact_division(self):
        prod = QPoly([1, 1]) * QPoly([2, 1])
        assert prod.exact_div(QPoly([1, 1])) == QPoly([2, 1])
        assert prod.exact_div(QPoly([3, 1])) is None

    def test_eval_is_exact(self):
        p = QPoly([Fraction(1, 3), 0, 1])
        v = p(Fraction(1, 2))
        assert v == Fraction(1, 3) + Fraction(1, 4)
