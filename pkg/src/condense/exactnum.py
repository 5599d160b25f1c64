"""Exact scalars: rationals, polynomials over Q, and number fields Q(th).

Rationals are ``fractions.Fraction`` (already canonical: positive
denominator, reduced, zero is 0/1).  Number fields are given by a monic
integer minimal polynomial of degree 1..4, validated for irreducibility
at construction.  Everything in this module, and in the package, is
exact big-integer and rational arithmetic; no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .verdicts import ParseError

Rational = Fraction

MAX_FIELD_DEGREE = 4


class FieldMismatchError(ValueError):
    """Operands live in different number fields."""


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def divisors(n: int) -> list[int]:
    """Positive divisors of |n| in ascending order; n must be nonzero."""
    if n == 0:
        raise ValueError("zero has no divisor list")
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# Exact linear algebra over Q (tiny: matrices never exceed a handful of rows)


def rref(rows):
    """Reduced row echelon form over Q.  Returns (rows, pivot columns)."""
    m = [[to_fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m], pivots


def matrix_rank(rows) -> int:
    return len(rref(rows)[1])


def solve_columns(cols, target):
    """Solve sum_j x_j * cols[j] = target over Q.

    ``cols`` is a list of coordinate vectors.  Returns a tuple of
    Fractions (free variables set to 0) or None when inconsistent.
    """
    k = len(cols)
    n = len(target)
    aug = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    m, pivots = rref(aug)
    if k in pivots:
        return None
    x = [Fraction(0)] * k
    for row_idx, c in enumerate(pivots):
        x[c] = m[row_idx][k]
    return tuple(x)


def in_span(vectors, target) -> bool:
    return solve_columns(vectors, target) is not None


# ---------------------------------------------------------------------------
# Polynomials over Q


class QPoly:
    """Univariate polynomial over Q; coefficients ascending, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls((c,))

    @classmethod
    def x(cls) -> "QPoly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other) -> "QPoly":
        other = other if isinstance(other, QPoly) else QPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other) -> "QPoly":
        other = other if isinstance(other, QPoly) else QPoly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return QPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __call__(self, v):
        acc = Fraction(0) if isinstance(v, (int, Fraction)) else v * 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def divmod(self, other) -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        d = other.coeffs
        while len(rem) >= len(d):
            f = rem[-1] / d[-1]
            k = len(rem) - len(d)
            q[k] = f
            for i, c in enumerate(d):
                rem[k + i] -= f * c
            while rem and rem[-1] == 0:
                rem.pop()
            if not rem:
                break
        return QPoly(q), QPoly(rem)

    def exact_div(self, other) -> "QPoly | None":
        q, r = self.divmod(other)
        return q if r.is_zero() else None

    def shift(self, k: int) -> "QPoly":
        if self.is_zero():
            return QPoly()
        return QPoly([Fraction(0)] * k + list(self.coeffs))

    def monic(self) -> "QPoly":
        if self.is_zero():
            return QPoly()
        lead = self.coeffs[-1]
        return QPoly([c / lead for c in self.coeffs])

    def to_str(self, var: str = "t") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                term = fmt_rational(c)
            else:
                xs = var if e == 1 else f"{var}^{e}"
                term = xs if c == 1 else (f"-{xs}" if c == -1 else f"{fmt_rational(c)}*{xs}")
            parts.append(term)
        s = parts[0]
        for term in parts[1:]:
            s += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return s

    def __repr__(self):
        return f"QPoly({self.to_str()})"


def qpoly_gcd(a: QPoly, b: QPoly) -> QPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def rational_roots(p) -> list[Fraction]:
    """Complete sorted list of rational roots of p (p not identically zero)."""
    if not isinstance(p, QPoly):
        p = QPoly(p)
    if p.is_zero():
        raise ValueError("zero polynomial")
    roots = set()
    cs = list(p.coeffs)
    while cs[0] == 0:
        cs.pop(0)
        roots.add(Fraction(0))
    if len(cs) > 1:
        den = 1
        for c in cs:
            den = den * c.denominator // _gcd_int(den, c.denominator)
        ints = [int(c * den) for c in cs]
        g = 0
        for v in ints:
            g = _gcd_int(g, v)
        ints = [v // g for v in ints]
        a0, lead = ints[0], ints[-1]
        for pn in divisors(a0):
            for qd in divisors(lead):
                for cand in (Fraction(pn, qd), Fraction(-pn, qd)):
                    if p(cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _gcd_int(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Number fields


def _divisor_pairs(d: int):
    """All integer pairs (q, s) with q*s == d (d nonzero)."""
    for e in divisors(d):
        for q in (e, -e):
            if d % q == 0:
                yield q, d // q


def is_irreducible_monic(coeffs: list[int]) -> bool:
    """Irreducibility over Q of a monic integer polynomial of degree 1..4.

    Degrees 2 and 3 reduce to the rational-root test; degree 4 adds an
    exact check for a split into two monic integer quadratics (Gauss).
    """
    n = len(coeffs) - 1
    if n == 1:
        return True
    if coeffs[0] == 0:
        return False
    for e in divisors(coeffs[0]):
        for r in (e, -e):
            acc = 0
            for c in reversed(coeffs):
                acc = acc * r + c
            if acc == 0:
                return False
    if n < 4:
        return True
    a, b, c, d = coeffs[3], coeffs[2], coeffs[1], coeffs[0]
    # (x^2 + p x + q)(x^2 + r x + s): p + r = a, q + s + p r = b,
    # p s + q r = c, q s = d.  Enumerate divisor pairs (q, s) of d.
    for q, s in _divisor_pairs(d):
        disc = a * a - 4 * (b - q - s)
        if disc < 0:
            continue
        rt = isqrt(disc)
        if rt * rt != disc:
            continue
        for p2 in (a + rt, a - rt):
            if p2 % 2:
                continue
            p = p2 // 2
            r = a - p
            if p * s + q * r == c:
                return False
    return True


class NumberField:
    """Q(th) where th is a root of a monic irreducible integer polynomial.

    Degrees above 4 are rejected: the toolkit never needs them (the
    relevant degree bound is 3, plus degree-4 refutation witnesses).
    """

    __slots__ = ("minpoly", "degree", "_powers")

    def __init__(self, minpoly):
        coeffs = list(minpoly)
        if not all(isinstance(c, int) for c in coeffs):
            raise ParseError("minimal polynomial needs integer coefficients")
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ParseError("minimal polynomial must be monic of degree >= 1")
        n = len(coeffs) - 1
        if n > MAX_FIELD_DEGREE:
            raise ParseError(f"field degree {n} exceeds the supported cap {MAX_FIELD_DEGREE}")
        if not is_irreducible_monic(coeffs):
            raise ParseError("minimal polynomial is reducible over Q")
        self.minpoly = tuple(coeffs)
        self.degree = n
        # power table: coordinates of th^k for k = n .. 2n-2
        powers = []
        cur = [Fraction(-c) for c in coeffs[:-1]]  # th^n
        powers.append(tuple(cur))
        for _ in range(n - 2 if n >= 2 else 0):
            nxt = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            if top != 0:
                nxt = [nxt[i] + top * powers[0][i] for i in range(n)]
            powers.append(tuple(nxt))
            cur = nxt
        self._powers = tuple(powers)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def minpoly_str(self) -> str:
        return QPoly(self.minpoly).to_str("x")

    def __repr__(self):
        return f"NumberField({self.minpoly_str()})"

    def element(self, coords) -> "NFElement":
        return NFElement(self, coords)

    def zero(self) -> "NFElement":
        return NFElement(self, ())

    def one(self) -> "NFElement":
        return NFElement(self, (1,))

    def gen(self) -> "NFElement":
        if self.degree == 1:
            return NFElement(self, (-self.minpoly[0],))
        return NFElement(self, (0, 1))

    def from_rational(self, q) -> "NFElement":
        return NFElement(self, (to_fraction(q),))

    def _reduce(self, conv) -> tuple[Fraction, ...]:
        """Reduce a raw coefficient list (length <= 2n-1) mod the minimal polynomial."""
        n = self.degree
        out = list(conv[:n]) + [Fraction(0)] * max(0, n - len(conv))
        for k in range(n, len(conv)):
            c = conv[k]
            if c == 0:
                continue
            pw = self._powers[k - n]
            for i in range(n):
                out[i] += c * pw[i]
        return tuple(out)


class NFElement:
    """Element of a NumberField in power-basis coordinates (1, th, .., th^(n-1))."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        cs = [to_fraction(c) for c in coords]
        if len(cs) > field.degree:
            raise ValueError("too many coordinates")
        cs += [Fraction(0)] * (field.degree - len(cs))
        self.field = field
        self.coords = tuple(cs)

    def _check(self, other: "NFElement"):
        if self.field != other.field:
            raise FieldMismatchError("elements of different number fields")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return (
            isinstance(other, NFElement)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field.minpoly, self.coords))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return NFElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        self._check(other)
        return NFElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return NFElement(self.field, [-c for c in self.coords])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [c * other for c in self.coords])
        self._check(other)
        n = self.field.degree
        conv = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                conv[i + j] += a * b
        return NFElement(self.field, self.field._reduce(conv))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.field.degree
        basis = [NFElement(self.field, [0] * j + [1]) for j in range(n)]
        cols = [(self * b).coords for b in basis]
        target = tuple([Fraction(1)] + [Fraction(0)] * (n - 1))
        sol = solve_columns(cols, target)
        if sol is None:  # impossible in a field
            raise ZeroDivisionError("inverse of zero")
        return NFElement(self.field, sol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [c / other for c in self.coords])
        self._check(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.field.one()
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __str__(self):
        parts = []
        for e, c in enumerate(self.coords):
            if c == 0:
                continue
            if e == 0:
                parts.append(fmt_rational(c))
            else:
                xs = "th" if e == 1 else f"th^{e}"
                parts.append(xs if c == 1 else (f"-{xs}" if c == -1 else f"{fmt_rational(c)}*{xs}"))
        if not parts:
            return "0"
        s = parts[0]
        for term in parts[1:]:
            s += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return s

    def __repr__(self):
        return f"NFElement({self})"


def nf_mul(a: NFElement, b: NFElement) -> NFElement:
    if a.field != b.field:
        raise FieldMismatchError("elements of different number fields")
    return a * b


def nf_inverse(a: NFElement) -> NFElement:
    return a.inverse()


def linearly_independent(vs) -> bool:
    """True iff the given field elements are linearly independent over Q."""
    vs = list(vs)
    if not vs:
        raise ValueError("empty list")
    fld = vs[0].field
    for v in vs[1:]:
        if v.field != fld:
            raise FieldMismatchError("elements of different number fields")
    return matrix_rank([v.coords for v in vs]) == len(vs)
