"""Literal grammars for the command line.

Rings:     Z | Q | Zsqrt(-5) | SGR(2,3;trunc=24) | NumField(x^2-2)
           DXL(D=Z;L=Q) | DXL(D=Q;L=NumField(x^2-2))
Elements:  integers, rationals p/q, a+b*w (quadratic orders),
           polynomials in t (semigroup ring), a + b*th + c*th^2 (fields),
           6 + (1/2)*X + (1+th)*X^2 (elements of D + X*L[X])
Ideals:    ideal(2, 1+w) | ideal(t^2, t^3) | frac(ideal(...), den)
R-ideals:  ideal0(2, 3) | xideal(r; g1, g2) | xfull(r)
"""

from __future__ import annotations

import re
from fractions import Fraction

from .dplusxl import DXL, FULL_L, CanonicalRIdeal
from .exactnum import NumberField
from .ideals import FractionalIdeal, MonomialIdeal
from .rings import (
    ZZ,
    Domain,
    FieldDomain,
    IntegerRing,
    QuadraticOrder,
    SemigroupRing,
)
from .verdicts import ParseError

_RAT = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    s = s.replace(" ", "")
    if not _RAT.match(s):
        raise ParseError(f"not a rational literal: {text!r}")
    return Fraction(s)


def parse_int_poly(text: str) -> list[int]:
    """Ascending integer coefficients of a polynomial in x, e.g. 'x^2-2'."""
    coeffs: dict[int, int] = {}
    for term in _split_signed_terms(text):
        m = re.match(r"^([+-]?\d*)\*?x(\^(\d+))?$", term.replace(" ", ""))
        if m:
            c = m.group(1)
            coeff = int(c) if c not in ("", "+", "-") else (-1 if c == "-" else 1)
            exp = int(m.group(3)) if m.group(3) else 1
        else:
            s = term.replace(" ", "")
            if not re.match(r"^[+-]?\d+$", s):
                raise ParseError(f"bad polynomial term: {term!r}")
            coeff, exp = int(s), 0
        coeffs[exp] = coeffs.get(exp, 0) + coeff
    deg = max(coeffs)
    return [coeffs.get(k, 0) for k in range(deg + 1)]


def parse_domain(text: str) -> Domain:
    s = text.strip()
    if s == "Z":
        return ZZ
    if s == "Q":
        return FieldDomain(None)
    m = re.match(r"^Zsqrt\((-?\d+)\)$", s)
    if m:
        try:
            return QuadraticOrder(int(m.group(1)))
        except ValueError as e:
            raise ParseError(str(e)) from None
    m = re.match(r"^SGR\(2,3(;trunc=(\d+))?\)$", s)
    if m:
        trunc = int(m.group(2)) if m.group(2) else 24
        try:
            return SemigroupRing(trunc)
        except ValueError as e:
            raise ParseError(str(e)) from None
    m = re.match(r"^NumField\((.+)\)$", s)
    if m:
        return FieldDomain(NumberField(parse_int_poly(m.group(1))))
    raise ParseError(f"unknown ring literal: {text!r}")


def parse_dxl(text: str) -> DXL:
    m = re.match(r"^DXL\(D=([^;]+);L=(.+)\)$", text.strip())
    if not m:
        raise ParseError(f"not a DXL ring literal: {text!r}")
    d = parse_domain(m.group(1).strip())
    l_text = m.group(2).strip()
    if l_text == "Q":
        nf = None
    else:
        mm = re.match(r"^NumField\((.+)\)$", l_text)
        if not mm:
            raise ParseError(f"unknown extension field literal: {l_text!r}")
        nf = NumberField(parse_int_poly(mm.group(1)))
    return DXL(d, nf)


def _split_signed_terms(text: str) -> list[str]:
    """Split a sum at top-level +/- signs, keeping the signs."""
    s = text.strip()
    if not s:
        raise ParseError("empty expression")
    terms = []
    depth = 0
    cur = ""
    prev = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur.strip() and prev not in "^*+-(":
            terms.append(cur.strip())
            cur = "-" if ch == "-" else ""
            prev = ch
            continue
        cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        terms.append(cur.strip())
    return terms


def _parse_var_term(term: str, var: str):
    """(exponent, coefficient text) for a term like '(1/2)*v^3' or '-v' or '5'."""
    s = term.strip()
    pattern = re.compile(rf"(?<![A-Za-z]){re.escape(var)}(\^(\d+))?(?![A-Za-z0-9^])")
    depth = 0
    for m in pattern.finditer(s):
        before = s[: m.start()]
        if before.count("(") != before.count(")"):
            continue  # inside parentheses: part of the coefficient
        exp = int(m.group(2)) if m.group(2) else 1
        coef = (before + s[m.end() :]).strip()
        coef = coef.strip("*").strip()
        if coef in ("", "+"):
            coef = "1"
        elif coef == "-":
            coef = "-1"
        return exp, coef
    return 0, s


def parse_nf_scalar(text: str, nf: NumberField | None):
    """A rational, or a sum of th-power terms in the given number field."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1].strip()
    if nf is None:
        return parse_rational(s)
    coords = [Fraction(0)] * nf.degree
    for term in _split_signed_terms(s):
        exp, coef = _parse_var_term(term, "th")
        if exp >= nf.degree:
            raise ParseError(f"th^{exp} is out of range for degree {nf.degree}")
        neg = coef.startswith("-") and coef[1:].strip().startswith("(")
        if neg:
            coords[exp] += -parse_rational(coef[1:])
        else:
            coords[exp] += parse_rational(coef)
    return nf.element(coords)


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth < 0:
            return False
    return depth == 0


def parse_element(text: str, domain: Domain):
    s = text.strip()
    if isinstance(domain, IntegerRing):
        try:
            return int(s)
        except ValueError:
            raise ParseError(f"not an integer literal: {text!r}") from None
    if isinstance(domain, FieldDomain):
        return parse_nf_scalar(s, domain.field)
    if isinstance(domain, QuadraticOrder):
        a, b = Fraction(0), Fraction(0)
        for term in _split_signed_terms(s):
            exp, coef = _parse_var_term(term, "w")
            if exp > 1:
                raise ParseError("quadratic-order literals use w to the first power")
            if exp == 1:
                b += parse_rational(coef)
            else:
                a += parse_rational(coef)
        if a.denominator != 1 or b.denominator != 1:
            raise ParseError("quadratic-order elements need integer coordinates")
        return domain.element(int(a), int(b))
    if isinstance(domain, SemigroupRing):
        items = []
        for term in _split_signed_terms(s):
            exp, coef = _parse_var_term(term, "t")
            items.append((exp, parse_rational(coef)))
        try:
            return domain.element(items)
        except ValueError as e:
            raise ParseError(str(e)) from None
    raise ParseError(f"no element grammar for {domain.spec_string()}")


def parse_elements(text: str, domain: Domain) -> list:
    return [parse_element(part, domain) for part in _split_commas(text)]


def _split_commas(text: str) -> list[str]:
    parts = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur.strip())
            cur = ""
            continue
        cur += ch
    if cur.strip():
        parts.append(cur.strip())
    if not parts:
        raise ParseError("empty list")
    return parts


def parse_ideal(text: str, domain: Domain):
    s = text.strip()
    m = re.match(r"^frac\((.+),\s*(\d+)\)$", s)
    if m:
        inner = parse_ideal(m.group(1), domain)
        if not isinstance(inner, FractionalIdeal):
            raise ParseError("frac(...) applies to lattice ideals")
        return FractionalIdeal(domain, inner.rows, inner.den * int(m.group(2)))
    m = re.match(r"^ideal\((.+)\)$", s)
    if not m:
        raise ParseError(f"not an ideal literal: {text!r}")
    gens = parse_elements(m.group(1), domain)
    if isinstance(domain, SemigroupRing):
        return MonomialIdeal.from_elements(domain, gens)
    return FractionalIdeal.from_elements(domain, gens)


def parse_rideal(text: str, ring: DXL) -> CanonicalRIdeal:
    s = text.strip()
    m = re.match(r"^xfull\((\d+)\)$", s)
    if m:
        return CanonicalRIdeal(ring, int(m.group(1)), FULL_L)
    m = re.match(r"^ideal0\((.+)\)$", s)
    if m:
        gens = [parse_nf_scalar(p, ring.nf) for p in _split_commas(m.group(1))]
        return CanonicalRIdeal(ring, 0, ring.ideal_of_d(gens))
    m = re.match(r"^xideal\((\d+)\s*;(.+)\)$", s)
    if m:
        gens = [parse_nf_scalar(p, ring.nf) for p in _split_commas(m.group(2))]
        return CanonicalRIdeal(ring, int(m.group(1)), ring.submodule(gens))
    raise ParseError(f"not a canonical R-ideal literal: {text!r}")


def parse_relement(text: str, ring: DXL):
    coeffs: dict[int, object] = {}
    for term in _split_signed_terms(text):
        exp, coef = _parse_var_term(term, "X")
        neg = coef.startswith("-")
        scal = parse_nf_scalar(coef[1:] if neg else coef, ring.nf)
        scal = -scal if neg else scal
        cur = coeffs.get(exp)
        coeffs[exp] = scal if cur is None else cur + scal
    top = max(coeffs) if coeffs else 0
    vals = [coeffs.get(k, ring.sc_zero()) for k in range(top + 1)]
    try:
        return ring.element(vals)
    except ValueError as e:
        raise ParseError(str(e)) from None
