"""Exact finitely generated (fractional) ideal calculus.

Two canonical representations:

* ``FractionalIdeal`` - ideals of Z and of quadratic orders as integer
  lattices (row HNF basis plus a positive denominator coprime to the
  basis content), so ideal equality is syntactic equality.
* ``MonomialIdeal`` - monomial D-submodules of the quotient field for
  the 2-3 semigroup ring, canonicalized as the minimal generator
  exponent list.  Exponent-set computations are exact for the
  truncated, polynomial and power-series readings of the ring alike.

``ExplicitGenerators`` carries raw generator lists and supports only
membership (bounded), products and sums; checkers that need
intersections must canonicalize first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product

from . import lattice as lat
from .exactnum import fmt_rational, to_fraction
from .rings import (
    Domain,
    FieldDomain,
    IntegerRing,
    QuadInt,
    QuadraticOrder,
    SemigroupRing,
    SgElement,
    coerce,
    element_is_zero,
    fmt_element,
    in_semigroup,
    quad_elements_of_norm,
)
from .verdicts import (
    DomainMismatchError,
    InternalConsistencyError,
    PreconditionError,
    UnsupportedOperationError,
    Verdict,
)


def _elem_coords(x, D: Domain) -> tuple[int, ...]:
    if isinstance(D, IntegerRing):
        if not isinstance(x, int):
            raise TypeError(f"not an integer: {x!r}")
        return (x,)
    if isinstance(D, QuadraticOrder):
        if isinstance(x, int):
            return (x, 0)
        if not isinstance(x, QuadInt) or x.domain != D:
            raise TypeError(f"not an element of {D.spec_string()}: {x!r}")
        return x.coords()
    raise DomainMismatchError(f"no lattice coordinates for {D.spec_string()}")


def _coords_elem(row, D: Domain):
    if isinstance(D, IntegerRing):
        return row[0]
    return QuadInt(D, row[0], row[1])


def _elem_conj_coords(row, D: Domain):
    if isinstance(D, IntegerRing):
        return row
    return (row[0], -row[1])


def _coords_norm(row, D: Domain) -> int:
    if isinstance(D, IntegerRing):
        return row[0] * row[0]
    return row[0] * row[0] - D.d * row[1] * row[1]


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _lcm(a: int, b: int) -> int:
    return abs(a * b) // _gcd(a, b)


class FractionalIdeal:
    """Nonzero fractional ideal of Z or a quadratic order, canonical form."""

    __slots__ = ("domain", "rows", "den")

    def __init__(self, domain: Domain, rows, den: int = 1):
        if not isinstance(domain, (IntegerRing, QuadraticOrder)):
            raise DomainMismatchError("lattice ideals exist only over Z and quadratic orders")
        if den == 0:
            raise ValueError("zero denominator")
        if den < 0:
            den = -den
        h = lat.hnf(rows)
        dim = 1 if isinstance(domain, IntegerRing) else 2
        if len(h) != dim:
            raise ValueError("lattice does not span a nonzero ideal")
        content = 0
        for row in h:
            for v in row:
                content = _gcd(content, v)
        g = _gcd(content, den)
        if g > 1:
            h = tuple(tuple(v // g for v in row) for row in h)
            den //= g
        if isinstance(domain, QuadraticOrder):
            for row in h:
                w = (domain.d * row[1], row[0])  # w * (a + b*w)
                if not lat.lattice_contains(h, w):
                    raise ValueError("lattice is not closed under multiplication by w")
        self.domain = domain
        self.rows = h
        self.den = den

    @classmethod
    def from_elements(cls, domain: Domain, elements, den: int = 1) -> "FractionalIdeal":
        elems = [e for e in elements if not element_is_zero(e)]
        if not elems:
            raise ValueError("ideal needs a nonzero generator")
        rows = []
        for e in elems:
            rows.append(_elem_coords(e, domain))
            if isinstance(domain, QuadraticOrder):
                rows.append(_elem_coords(domain.omega() * e, domain))
        return cls(domain, rows, den)

    @classmethod
    def principal(cls, x, domain: Domain) -> "FractionalIdeal":
        return cls.from_elements(domain, [x])

    @classmethod
    def unit(cls, domain: Domain) -> "FractionalIdeal":
        if isinstance(domain, IntegerRing):
            return cls(domain, [(1,)])
        return cls(domain, [(1, 0), (0, 1)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_integral(self) -> bool:
        return self.den == 1

    def is_unit_ideal(self) -> bool:
        return self == FractionalIdeal.unit(self.domain)

    def _check(self, other):
        if not isinstance(other, FractionalIdeal) or self.domain != other.domain:
            raise DomainMismatchError("ideals of different domains")

    def __eq__(self, other):
        return (
            isinstance(other, FractionalIdeal)
            and self.domain == other.domain
            and self.rows == other.rows
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.domain, self.rows, self.den))

    def basis_elements(self) -> list:
        """Basis rows as ring elements (numerators over the denominator)."""
        return [_coords_elem(r, self.domain) for r in self.rows]

    def __mul__(self, other) -> "FractionalIdeal":
        self._check(other)
        gens = []
        for x in self.basis_elements():
            for y in other.basis_elements():
                gens.append(_elem_coords(x * y, self.domain))
        return FractionalIdeal(self.domain, gens, self.den * other.den)

    def __add__(self, other) -> "FractionalIdeal":
        self._check(other)
        q = _lcm(self.den, other.den)
        rows = [tuple(v * (q // self.den) for v in r) for r in self.rows]
        rows += [tuple(v * (q // other.den) for v in r) for r in other.rows]
        return FractionalIdeal(self.domain, rows, q)

    def intersect(self, other) -> "FractionalIdeal":
        self._check(other)
        q = _lcm(self.den, other.den)
        rows_a = [tuple(v * (q // self.den) for v in r) for r in self.rows]
        rows_b = [tuple(v * (q // other.den) for v in r) for r in other.rows]
        inter = lat.lattice_intersect(rows_a, rows_b)
        return FractionalIdeal(self.domain, inter, q)

    def colon(self, other) -> "FractionalIdeal":
        """(self : other) = {x in K : x*other <= self}."""
        self._check(other)
        result = None
        for row in other.rows:
            conj = _elem_conj_coords(row, self.domain)
            n = _coords_norm(row, self.domain)
            celem = _coords_elem(conj, self.domain)
            rows = []
            for r in self.rows:
                prod = _coords_elem(r, self.domain) * celem
                rows.append(tuple(v * other.den for v in _elem_coords(prod, self.domain)))
            part = FractionalIdeal(self.domain, rows, self.den * abs(n))
            result = part if result is None else result.intersect(part)
        return result

    def inverse(self) -> "FractionalIdeal":
        return FractionalIdeal.unit(self.domain).colon(self)

    def v_closure(self) -> "FractionalIdeal":
        return self.inverse().inverse()

    def contains(self, x) -> bool:
        """Membership of a ring element or of an exact rational coordinate vector."""
        if isinstance(x, (int, QuadInt)) and not isinstance(x, bool):
            coords = [to_fraction(v) for v in _elem_coords(x, self.domain)]
        else:
            coords = [to_fraction(v) for v in x]
        scaled = [v * self.den for v in coords]
        if any(v.denominator != 1 for v in scaled):
            return False
        return lat.lattice_contains(self.rows, [int(v) for v in scaled])

    def contains_ideal(self, other) -> bool:
        self._check(other)
        for row in other.rows:
            if not self.contains([Fraction(v, other.den) for v in row]):
                return False
        return True

    def norm(self) -> Fraction:
        return Fraction(lat.det_echelon(self.rows), self.den ** self.dim)

    def is_principal(self, bound: int = 24) -> Verdict:
        """Complete for Z and imaginary quadratic orders; bounded otherwise."""
        if isinstance(self.domain, IntegerRing):
            return Verdict.holds(self.rows[0][0], self.den, reason="rank-1 lattice")
        n = lat.det_echelon(self.rows)
        if self.domain.imaginary:
            for g in quad_elements_of_norm(self.domain, n):
                if lat.lattice_contains(self.rows, g.coords()):
                    return Verdict.holds(g, self.den, reason="generator of full ideal norm")
            return Verdict.fails(
                reason=f"no lattice element of norm {n} (complete norm-form enumeration)"
            )
        for c1 in range(-bound, bound + 1):
            for c2 in range(-bound, bound + 1):
                if c1 == 0 and c2 == 0:
                    continue
                g = QuadInt(
                    self.domain,
                    c1 * self.rows[0][0] + c2 * self.rows[1][0],
                    c1 * self.rows[0][1] + c2 * self.rows[1][1],
                )
                if abs(g.norm()) == n:
                    return Verdict.holds(g, self.den, reason="generator of full ideal norm")
        return Verdict.unknown(bound=bound, reason="no short generator found")

    def elements_up_to(self, height: int) -> list:
        """Deterministic sample of nonzero elements (integral ideals only)."""
        if self.den != 1:
            raise PreconditionError("element sampling needs an integral ideal")
        out = []
        ranges = [range(-height, height + 1)] * len(self.rows)
        for combo in iter_product(*ranges):
            if all(c == 0 for c in combo):
                continue
            vec = [0] * len(self.rows[0])
            for c, row in zip(combo, self.rows):
                for i, v in enumerate(row):
                    vec[i] += c * v
            out.append(_coords_elem(tuple(vec), self.domain))
        return out

    def __str__(self):
        gens = ", ".join(fmt_element(e) for e in self.basis_elements())
        if self.den == 1:
            return f"ideal({gens})"
        return f"frac(ideal({gens}), {self.den})"

    def __repr__(self):
        return f"FractionalIdeal({self}, domain={self.domain.spec_string()})"


# ---------------------------------------------------------------------------
# Monomial modules over the semigroup ring


def _minimalize(exps) -> tuple[int, ...]:
    exps = sorted(set(int(e) for e in exps))
    if not exps:
        raise ValueError("monomial module needs a generator")

    def in_e(e):
        return any(in_semigroup(e - g) for g in exps)

    return tuple(e for e in exps if not in_e(e - 2) and not in_e(e - 3))


class MonomialIdeal:
    """Monomial D-submodule of the quotient field, D the 2-3 semigroup ring.

    Negative generator exponents give fractional modules (t^-2 * D and
    friends); the module is an integral ideal iff every generator
    exponent lies in the semigroup.
    """

    __slots__ = ("domain", "gens")

    def __init__(self, domain: SemigroupRing, exponents):
        if not isinstance(domain, SemigroupRing):
            raise DomainMismatchError("monomial ideals exist only over the semigroup ring")
        self.domain = domain
        self.gens = _minimalize(exponents)

    @classmethod
    def from_elements(cls, domain: SemigroupRing, elements) -> "MonomialIdeal":
        exps = []
        for x in elements:
            if element_is_zero(x):
                continue
            mono = x.is_monomial()
            if mono is None:
                raise UnsupportedOperationError(
                    "only monomial generators canonicalize to a monomial ideal"
                )
            exps.append(mono[0])
        return cls(domain, exps)

    @classmethod
    def unit(cls, domain: SemigroupRing) -> "MonomialIdeal":
        return cls(domain, (0,))

    def _check(self, other):
        if not isinstance(other, MonomialIdeal) or self.domain != other.domain:
            raise DomainMismatchError("monomial ideals of different rings")

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and self.domain == other.domain
            and self.gens == other.gens
        )

    def __hash__(self):
        return hash((self.domain, self.gens))

    def contains_exp(self, e: int) -> bool:
        return any(in_semigroup(e - g) for g in self.gens)

    @property
    def min_exp(self) -> int:
        return self.gens[0]

    @property
    def threshold(self) -> int:
        """Every exponent >= threshold belongs to the module."""
        return self.gens[0] + 2

    def is_integral(self) -> bool:
        return all(in_semigroup(g) for g in self.gens)

    def is_unit_ideal(self) -> bool:
        return self.gens == (0,)

    def __mul__(self, other) -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(
            self.domain, [g + h for g in self.gens for h in other.gens]
        )

    def __add__(self, other) -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.domain, self.gens + other.gens)

    def intersect(self, other) -> "MonomialIdeal":
        self._check(other)
        low = max(self.min_exp, other.min_exp)
        thr = max(self.threshold, other.threshold)

        def pred(e):
            return self.contains_exp(e) and other.contains_exp(e)

        cands = [e for e in range(low, thr + 2) if pred(e) and not pred(e - 2) and not pred(e - 3)]
        return MonomialIdeal(self.domain, cands)

    def colon(self, other) -> "MonomialIdeal":
        """(self : other) = {monomial exponents e : e + other <= self}."""
        self._check(other)
        thr_m = self.threshold
        min_n = other.min_exp
        low = self.min_exp - min_n
        thr = thr_m - min_n

        def pred(e):
            if e < low:
                return False
            f = min_n
            while e + f < thr_m:
                if other.contains_exp(f) and not self.contains_exp(e + f):
                    return False
                f += 1
            return True

        cands = [e for e in range(low, thr + 2) if pred(e) and not pred(e - 2) and not pred(e - 3)]
        return MonomialIdeal(self.domain, cands)

    def inverse(self) -> "MonomialIdeal":
        return MonomialIdeal.unit(self.domain).colon(self)

    def v_closure(self) -> "MonomialIdeal":
        return self.inverse().inverse()

    def contains(self, x) -> bool:
        """Membership of a semigroup-ring element (support test)."""
        if isinstance(x, SgElement):
            if x.is_zero():
                return True
            return all(self.contains_exp(e) for e in x.support())
        return self.contains_exp(int(x))

    def contains_ideal(self, other) -> bool:
        self._check(other)
        return all(self.contains_exp(g) for g in other.gens)

    def is_principal(self, bound: int = 0) -> Verdict:
        if len(self.gens) == 1:
            return Verdict.holds(self.gens[0], reason="single minimal generator")
        return Verdict.fails(
            *self.gens, reason="several incomparable minimal generator exponents"
        )

    def exponents_upto(self, hi: int) -> list[int]:
        return [e for e in range(self.min_exp, hi + 1) if self.contains_exp(e)]

    def __str__(self):
        gens = ", ".join(("1" if g == 0 else ("t" if g == 1 else f"t^{g}")) for g in self.gens)
        return f"ideal({gens})"

    def __repr__(self):
        return f"MonomialIdeal({self}, {self.domain.spec_string()})"


# ---------------------------------------------------------------------------
# Raw generator lists


@dataclass(frozen=True)
class ExplicitGenerators:
    """Uncanonicalized generator list; only bounded semi-decisions run on it."""

    domain: Domain
    gens: tuple

    def __post_init__(self):
        if not self.gens or any(element_is_zero(g) for g in self.gens):
            raise ValueError("generators must be nonzero and nonempty")

    def product(self, other) -> "ExplicitGenerators":
        if self.domain != other.domain:
            raise DomainMismatchError("ideals of different domains")
        return ExplicitGenerators(
            self.domain, tuple(x * y for x in self.gens for y in other.gens)
        )

    def membership(self, x, bound: int = 5) -> Verdict:
        """Bounded search for x as an integer combination of the generators."""
        k = len(self.gens)
        for combo in iter_product(range(-bound, bound + 1), repeat=k):
            acc = None
            for c, g in zip(combo, self.gens):
                term = g * c
                acc = term if acc is None else acc + term
            if acc == x:
                return Verdict.holds(combo, reason="integer combination found")
        return Verdict.unknown(bound=bound, reason="no combination within coefficient bound")

    def intersect(self, other):
        raise UnsupportedOperationError("canonicalize first: no intersection on raw generators")

    def canonicalize(self):
        if isinstance(self.domain, (IntegerRing, QuadraticOrder)):
            return FractionalIdeal.from_elements(self.domain, self.gens)
        if isinstance(self.domain, SemigroupRing):
            return MonomialIdeal.from_elements(self.domain, self.gens)
        raise UnsupportedOperationError(f"no canonical form over {self.domain.spec_string()}")


# ---------------------------------------------------------------------------
# Dispatching operation surface

IdealHandle = (FractionalIdeal, MonomialIdeal, ExplicitGenerators)


def ideal_from_elements(domain: Domain, elements):
    if isinstance(domain, (IntegerRing, QuadraticOrder)):
        return FractionalIdeal.from_elements(domain, elements)
    if isinstance(domain, SemigroupRing):
        return MonomialIdeal.from_elements(domain, elements)
    raise DomainMismatchError(f"no canonical ideals over {domain.spec_string()}")


def unit_ideal(domain: Domain):
    if isinstance(domain, (IntegerRing, QuadraticOrder)):
        return FractionalIdeal.unit(domain)
    if isinstance(domain, SemigroupRing):
        return MonomialIdeal.unit(domain)
    raise DomainMismatchError(f"no canonical ideals over {domain.spec_string()}")


def ideal_product(i, j):
    if isinstance(i, ExplicitGenerators) and isinstance(j, ExplicitGenerators):
        return i.product(j)
    _same_kind(i, j)
    return i * j


def ideal_sum(i, j):
    _same_kind(i, j)
    return i + j


def ideal_intersect(i, j):
    if isinstance(i, ExplicitGenerators) or isinstance(j, ExplicitGenerators):
        raise UnsupportedOperationError("canonicalize first: no intersection on raw generators")
    _same_kind(i, j)
    return i.intersect(j)


def ideal_colon(i, j):
    _same_kind(i, j)
    return i.colon(j)


def v_closure(i):
    return i.v_closure()


def membership(x, i) -> bool:
    return i.contains(x)


def is_principal(i, bound: int = 24) -> Verdict:
    return i.is_principal(bound)


def comaximal(i, j) -> bool:
    _same_kind(i, j)
    return (i + j).is_unit_ideal()


def _same_kind(i, j):
    if type(i) is not type(j):
        raise DomainMismatchError("mixed ideal representations")
    if i.domain != j.domain:
        raise DomainMismatchError("ideals of different domains")


def v_coprime(a, b, D: Domain) -> bool:
    """(a,b)_v = D, cross-checked against aD & bD == abD on every call.

    The two computations are independent routes to the same fact; any
    disagreement is an internal bug, never a mathematical outcome.
    """
    a, b = coerce(a, D), coerce(b, D)
    if element_is_zero(a) or element_is_zero(b):
        raise PreconditionError("v-coprimality needs nonzero elements")
    ab = a * b
    if element_is_zero(ab):
        raise PreconditionError(
            "the product truncates to zero; raise the truncation degree"
        )
    ia = ideal_from_elements(D, [a])
    ib = ideal_from_elements(D, [b])
    iab = ideal_from_elements(D, [a, b])
    by_closure = iab.v_closure().is_unit_ideal()
    by_intersection = ia.intersect(ib) == ideal_from_elements(D, [ab])
    if by_closure != by_intersection:
        raise InternalConsistencyError(
            f"v-coprimality routes disagree for a={fmt_element(a)}, b={fmt_element(b)}"
        )
    return by_closure
