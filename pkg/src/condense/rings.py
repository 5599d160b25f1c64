"""Supported integral-domain families and element-level arithmetic.

Families:
  * ``IntegerRing`` - the rational integers Z,
  * ``QuadraticOrder(d)`` - Z[w] with w = sqrt(d), d squarefree, d != 0, 1,
  * ``SemigroupRing(trunc)`` - Q[[t^2, t^3]] truncated at degree ``trunc``
    (exponent support inside the numerical semigroup <2,3> = {0,2,3,4,...}),
  * ``FieldDomain`` - Q or a number field.

Elements are immutable; all operations are exact.  Searches that cannot
be completed within a bound report ``unknown``; they never guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exactnum import NumberField, divisors, fmt_rational, to_fraction
from .verdicts import DomainMismatchError, PreconditionError, Verdict

SEMIGROUP_GENS = (2, 3)
MIN_TRUNC = 12


def in_semigroup(e: int) -> bool:
    """Membership in the numerical semigroup <2,3> = {0, 2, 3, 4, ...}."""
    return e >= 0 and e != 1


class Domain:
    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.spec_string()


class IntegerRing(Domain):
    def spec_string(self) -> str:
        return "Z"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("IntegerRing")


ZZ = IntegerRing()


def _squarefree(d: int) -> bool:
    n = abs(d)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


class QuadraticOrder(Domain):
    """Z[w] with w = sqrt(d).  Not the maximal order when d = 1 mod 4."""

    def __init__(self, d: int):
        if d in (0, 1) or not _squarefree(d):
            raise ValueError("d must be a squarefree integer other than 0 and 1")
        self.d = d

    def spec_string(self) -> str:
        return f"Zsqrt({self.d})"

    def __eq__(self, other):
        return isinstance(other, QuadraticOrder) and self.d == other.d

    def __hash__(self):
        return hash(("QuadraticOrder", self.d))

    def element(self, a: int, b: int = 0) -> "QuadInt":
        return QuadInt(self, a, b)

    def omega(self) -> "QuadInt":
        return QuadInt(self, 0, 1)

    @property
    def imaginary(self) -> bool:
        return self.d < 0


class SemigroupRing(Domain):
    """Q[[t^2, t^3]] truncated at degree ``trunc`` (exact below the cutoff)."""

    def __init__(self, trunc: int = 24):
        if trunc < MIN_TRUNC:
            raise ValueError(f"trunc must be at least {MIN_TRUNC}")
        self.trunc = trunc

    def spec_string(self) -> str:
        return f"SGR(2,3;trunc={self.trunc})"

    def __eq__(self, other):
        return isinstance(other, SemigroupRing) and self.trunc == other.trunc

    def __hash__(self):
        return hash(("SemigroupRing", self.trunc))

    def element(self, items, truncate: bool = False) -> "SgElement":
        return SgElement(self, items, truncate=truncate)

    def monomial(self, exp: int, coeff=1) -> "SgElement":
        return SgElement(self, {exp: coeff})

    def one(self) -> "SgElement":
        return SgElement(self, {0: 1})


class FieldDomain(Domain):
    """Q (field=None) or a number field."""

    def __init__(self, field: NumberField | None = None):
        self.field = field

    def spec_string(self) -> str:
        if self.field is None:
            return "Q"
        return f"NumField({self.field.minpoly_str()})"

    def __eq__(self, other):
        return isinstance(other, FieldDomain) and self.field == other.field

    def __hash__(self):
        return hash(("FieldDomain", self.field))


QQ = FieldDomain(None)


# ---------------------------------------------------------------------------
# Elements


class QuadInt:
    """a + b*w in a quadratic order, w^2 = d."""

    __slots__ = ("domain", "a", "b")

    def __init__(self, domain: QuadraticOrder, a: int, b: int = 0):
        self.domain = domain
        self.a = int(a)
        self.b = int(b)

    def _check(self, other):
        if self.domain != other.domain:
            raise DomainMismatchError("elements of different quadratic orders")

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def norm(self) -> int:
        return self.a * self.a - self.domain.d * self.b * self.b

    def conj(self) -> "QuadInt":
        return QuadInt(self.domain, self.a, -self.b)

    def coords(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.a == other and self.b == 0
        return (
            isinstance(other, QuadInt)
            and self.domain == other.domain
            and (self.a, self.b) == (other.a, other.b)
        )

    def __hash__(self):
        return hash(("QuadInt", self.domain.d, self.a, self.b))

    def __add__(self, other):
        if isinstance(other, int):
            return QuadInt(self.domain, self.a + other, self.b)
        self._check(other)
        return QuadInt(self.domain, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadInt(self.domain, -self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.domain, self.a * other, self.b * other)
        self._check(other)
        d = self.domain.d
        return QuadInt(
            self.domain,
            self.a * other.a + d * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        ws = "w" if self.b == 1 else ("-w" if self.b == -1 else f"{self.b}*w")
        if self.a == 0:
            return ws
        sign = " - " if ws.startswith("-") else " + "
        return f"{self.a}{sign}{ws.lstrip('-')}"

    def __repr__(self):
        return f"QuadInt({self}, d={self.domain.d})"


class SgElement:
    """Element of the truncated semigroup ring: exponent -> Q coefficient.

    Canonical: no zero coefficients, no exponent 1, no exponent above the
    truncation degree.
    """

    __slots__ = ("domain", "coeffs")

    def __init__(self, domain: SemigroupRing, items, truncate: bool = False):
        if isinstance(items, dict):
            items = items.items()
        acc: dict[int, Fraction] = {}
        for e, c in items:
            c = to_fraction(c)
            if c == 0:
                continue
            e = int(e)
            if e > domain.trunc:
                if truncate:
                    continue
                raise ValueError(f"exponent {e} above truncation degree {domain.trunc}")
            if not in_semigroup(e):
                raise ValueError(f"exponent {e} outside the semigroup <2,3>")
            acc[e] = acc.get(e, Fraction(0)) + c
        self.domain = domain
        self.coeffs = tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    def _check(self, other):
        if self.domain != other.domain:
            raise DomainMismatchError("elements of different semigroup rings")

    def is_zero(self) -> bool:
        return not self.coeffs

    def order(self) -> int | None:
        return self.coeffs[0][0] if self.coeffs else None

    def coeff(self, e: int) -> Fraction:
        for ee, c in self.coeffs:
            if ee == e:
                return c
        return Fraction(0)

    def constant_term(self) -> Fraction:
        return self.coeff(0)

    def is_monomial(self):
        """(exponent, coefficient) when the support is a single exponent, else None."""
        return self.coeffs[0] if len(self.coeffs) == 1 else None

    def support(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, SgElement)
            and self.domain == other.domain
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(("SgElement", self.domain.trunc, self.coeffs))

    def __add__(self, other):
        self._check(other)
        return SgElement(self.domain, list(self.coeffs) + list(other.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SgElement(self.domain, [(e, -c) for e, c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SgElement(self.domain, [(e, c * other) for e, c in self.coeffs])
        self._check(other)
        acc: dict[int, Fraction] = {}
        N = self.domain.trunc
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                if e <= N:
                    acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return SgElement(self.domain, acc)

    __rmul__ = __mul__

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.coeffs:
            if e == 0:
                parts.append(fmt_rational(c))
            else:
                ts = f"t^{e}"
                parts.append(ts if c == 1 else (f"-{ts}" if c == -1 else f"{fmt_rational(c)}*{ts}"))
        s = parts[0]
        for term in parts[1:]:
            s += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return s

    def __repr__(self):
        return f"SgElement({self})"


def fmt_element(x) -> str:
    if isinstance(x, Fraction):
        return fmt_rational(x)
    return str(x)


# ---------------------------------------------------------------------------
# Divisibility, units, atoms


def element_is_zero(x) -> bool:
    if isinstance(x, int):
        return x == 0
    if isinstance(x, Fraction):
        return x == 0
    return x.is_zero()


def coerce(x, D: Domain):
    """Lift plain integers (and rationals, over fields) into the domain."""
    if isinstance(D, QuadraticOrder) and isinstance(x, int):
        return QuadInt(D, x, 0)
    if isinstance(D, SemigroupRing) and isinstance(x, (int, Fraction)):
        return SgElement(D, {0: x})
    if isinstance(D, FieldDomain) and isinstance(x, int):
        return Fraction(x) if D.field is None else D.field.from_rational(x)
    return x


def divides(d, x, D: Domain):
    """(True, q) with d*q == x, or (False, None).  d must be nonzero.

    For the semigroup ring the division is carried out in the truncated
    algebra and validated by re-multiplication up to the cutoff.
    """
    d, x = coerce(d, D), coerce(x, D)
    if element_is_zero(d):
        raise PreconditionError("division by the zero element")
    if isinstance(D, IntegerRing):
        if x % d == 0:
            return True, x // d
        return False, None
    if isinstance(D, QuadraticOrder):
        if x.is_zero():
            return True, QuadInt(D, 0, 0)
        n = d.norm()
        num = x * d.conj()
        if num.a % n == 0 and num.b % n == 0:
            return True, QuadInt(D, num.a // n, num.b // n)
        return False, None
    if isinstance(D, SemigroupRing):
        return _semigroup_divide(d, x, D)
    if isinstance(D, FieldDomain):
        if element_is_zero(x):
            return True, x * 0
        if isinstance(x, Fraction):
            return True, x / d
        return True, x * d.inverse()
    raise DomainMismatchError(f"unsupported domain {D!r}")


def _semigroup_divide(d: SgElement, x: SgElement, D: SemigroupRing):
    N = D.trunc
    if x.is_zero():
        return True, SgElement(D, {})
    m = d.order()
    if x.order() < m:
        return False, None
    dcs = {e: c for e, c in d.coeffs}
    xcs = {e: c for e, c in x.coeffs}
    lead = dcs[m]
    # power-series division: q_j for j <= N - m is forced
    q: dict[int, Fraction] = {}
    for j in range(0, N - m + 1):
        acc = xcs.get(m + j, Fraction(0))
        for e, c in dcs.items():
            if e == m:
                continue
            k = m + j - e
            if k in q:
                acc -= c * q[k]
        cj = acc / lead
        if cj != 0:
            if j == 1:  # quotient would need the forbidden exponent t^1
                return False, None
            q[j] = cj
    quot = SgElement(D, q)
    if (d * quot).coeffs == x.coeffs:
        return True, quot
    return False, None


def is_unit(x, D: Domain) -> bool:
    x = coerce(x, D)
    if element_is_zero(x):
        raise PreconditionError("zero is not a unit candidate")
    if isinstance(D, IntegerRing):
        return x in (1, -1)
    if isinstance(D, QuadraticOrder):
        return x.norm() in (1, -1)
    if isinstance(D, SemigroupRing):
        return x.constant_term() != 0
    if isinstance(D, FieldDomain):
        return True
    raise DomainMismatchError(f"unsupported domain {D!r}")


def quad_elements_of_norm(D: QuadraticOrder, n: int) -> list[QuadInt]:
    """All elements of norm n in an imaginary quadratic order (complete)."""
    if not D.imaginary:
        raise PreconditionError("complete norm enumeration needs an imaginary order")
    if n < 0:
        return []
    out = []
    ad = -D.d
    b = 0
    while ad * b * b <= n:
        rem = n - ad * b * b
        a = isqrt(rem)
        if a * a == rem:
            for aa in sorted({a, -a}):
                for bb in sorted({b, -b}):
                    out.append(QuadInt(D, aa, bb))
        b += 1
    return sorted(out, key=lambda g: (g.a, g.b))


def element_divisors(x, D: Domain) -> list:
    """Complete divisor list of x (up to nothing: every divisor, unit multiples
    included).  Supported for Z and imaginary quadratic orders."""
    x = coerce(x, D)
    if element_is_zero(x):
        raise PreconditionError("zero has no divisor list")
    if isinstance(D, IntegerRing):
        out = []
        for e in divisors(x):
            out.extend((e, -e))
        return out
    if isinstance(D, QuadraticOrder) and D.imaginary:
        n = x.norm()
        out = []
        for m in divisors(n):
            for g in quad_elements_of_norm(D, m):
                ok, _ = divides(g, x, D)
                if ok:
                    out.append(g)
        return out
    raise PreconditionError(f"no complete divisor enumeration for {D.spec_string()}")


def is_atom(a, D: Domain, bound: int = 10) -> Verdict:
    """Irreducibility of a nonzero nonunit.

    Complete for Z (trial division), imaginary quadratic orders (norm
    divisor enumeration) and the semigroup ring (order arithmetic: the
    atoms are exactly the elements of order 2 or 3).  Real quadratic
    orders get a bounded search; exhausting it yields ``unknown``.
    """
    a = coerce(a, D)
    if element_is_zero(a) or is_unit(a, D):
        raise PreconditionError("atom test needs a nonzero nonunit")
    if isinstance(D, IntegerRing):
        n = abs(a)
        p = 2
        while p * p <= n:
            if n % p == 0:
                return Verdict.fails(p, a // p, reason="proper factorization found")
            p += 1
        return Verdict.holds(reason="prime integer (trial division exhausted)")
    if isinstance(D, QuadraticOrder):
        n = abs(a.norm())
        if D.imaginary:
            for m in divisors(n):
                if m == 1 or m == n:
                    continue
                for r in quad_elements_of_norm(D, m):
                    ok, q = divides(r, a, D)
                    if ok:
                        return Verdict.fails(r, q, reason="proper factorization found")
            return Verdict.holds(
                reason=f"no element norm properly divides {n} with a matching cofactor"
            )
        for r in _quad_box(D, bound):
            nr = abs(r.norm())
            if nr <= 1 or nr >= n or n % nr != 0:
                continue
            ok, q = divides(r, a, D)
            if ok and not is_unit(q, D):
                return Verdict.fails(r, q, reason="proper factorization found")
        return Verdict.unknown(bound=bound, reason="no factor of coefficient height within bound")
    if isinstance(D, SemigroupRing):
        m = a.order()
        if m in (2, 3):
            return Verdict.holds(
                reason=f"order {m} admits no split into two semigroup orders >= 2"
            )
        # order >= 4: dividing by t^2 always succeeds (the t^3-coefficient
        # obstruction vanishes because the order exceeds 3)
        ok, q = divides(D.monomial(2), a, D)
        if not ok:
            raise PreconditionError("truncated division unexpectedly failed")
        return Verdict.fails(D.monomial(2), q, reason="order >= 4 splits off t^2")
    raise DomainMismatchError(f"no atom test for {D.spec_string()}")


def _quad_box(D: QuadraticOrder, height: int):
    for s in range(1, height + 1):
        for aa in range(0, s + 1):
            for bb in range(0, s + 1):
                if max(aa, bb) != s:
                    continue
                for a in ((aa, -aa) if aa else (0,)):
                    for b in ((bb, -bb) if bb else (0,)):
                        yield QuadInt(D, a, b)


def enumerate_elements(D: Domain, height: int) -> list:
    """Deterministic, duplicate-free list of nonzero elements.

    The list for height h1 is a prefix of the list for h2 >= h1.  For the
    semigroup ring only monomials are enumerated (coefficient 1..height,
    exponents 2..trunc): that is the documented desk-scale search space.
    """
    if height < 1:
        raise PreconditionError("height must be >= 1")
    if isinstance(D, IntegerRing):
        out = []
        for m in range(1, height + 1):
            out.extend((m, -m))
        return out
    if isinstance(D, QuadraticOrder):
        return list(_quad_box(D, height))
    if isinstance(D, SemigroupRing):
        out = []
        for c in range(1, height + 1):
            for e in range(2, D.trunc + 1):
                out.append(D.monomial(e, c))
        return out
    raise DomainMismatchError(f"no element enumeration for {D.spec_string()}")


# ---------------------------------------------------------------------------
# Condensedness registry


@dataclass(frozen=True)
class CondensedStatus:
    kind: str  # "condensed" | "not_condensed" | "unknown"
    reason: str = ""
    certificate: object = None

    @classmethod
    def condensed(cls, reason: str) -> "CondensedStatus":
        return cls("condensed", reason=reason)

    @classmethod
    def not_condensed(cls, certificate, reason: str = "") -> "CondensedStatus":
        return cls("not_condensed", reason=reason, certificate=certificate)

    @classmethod
    def unknown_status(cls, reason: str) -> "CondensedStatus":
        return cls("unknown", reason=reason)


def condensed_status(D: Domain) -> CondensedStatus:
    """Registry of structural verdicts.  Only three families are marked
    condensed outright: fields, Z, and the 2-3 semigroup ring (a known
    condensed family); everything else starts as unknown and can only be
    refuted by a re-verifiable certificate."""
    if isinstance(D, FieldDomain):
        return CondensedStatus.condensed("field: the only nonzero ideal is the whole ring")
    if isinstance(D, IntegerRing):
        return CondensedStatus.condensed("principal ideal domain: ideal products are element products")
    if isinstance(D, SemigroupRing):
        return CondensedStatus.condensed(
            "power-series ring of the 2-3 semigroup over a field is a known condensed"
            f" domain (computations truncated at degree {D.trunc})"
        )
    return CondensedStatus.unknown_status("no structural rule applies; search for certificates")
