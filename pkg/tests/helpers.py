"""Shared deterministic generators and brute-force oracles."""

import random
from fractions import Fraction

from condense.dplusxl import FULL_L, DXL, CanonicalRIdeal, RElement
from condense.ideals import FractionalIdeal
from condense.lattice import det_echelon, hnf, lattice_contains
from condense.rings import ZZ


def random_canonical_pair(rng: random.Random, height: int = 20):
    """A random pair of canonical ideals of Z + X*Q[X] with generator
    heights bounded by ``height``."""
    ring = DXL(ZZ, None)

    def one_ideal():
        shape = rng.randrange(3)
        if shape == 0:
            r = rng.randrange(0, 3)
            gens = [rng.randint(1, height) for _ in range(rng.randint(1, 2))]
            return CanonicalRIdeal(ring, r, ring.ideal_of_d(gens))
        if shape == 1:
            r = rng.randrange(1, 3)
            gens = [
                Fraction(rng.randint(1, height), rng.randint(1, height))
                for _ in range(rng.randint(1, 2))
            ]
            return CanonicalRIdeal(ring, r, ring.submodule(gens))
        return CanonicalRIdeal(ring, rng.randrange(1, 3), FULL_L)

    return ring, one_ideal(), one_ideal()


def random_product_element(rng: random.Random, ring: DXL, prod: CanonicalRIdeal,
                           height: int = 20, tail_degree: int = 5) -> RElement:
    """A random nonzero element of the given canonical product ideal."""
    if prod.j is FULL_L:
        lead = Fraction(rng.randint(1, height), rng.randint(1, height))
    else:
        gens = prod.j.gen_scalars()
        lead = ring.sc_zero()
        while ring.sc_is_zero(lead):
            lead = sum((g * rng.randint(-3, 3) for g in gens), ring.sc_zero())
    tail = [
        Fraction(rng.randint(-height, height), rng.randint(1, height))
        for _ in range(rng.randint(0, tail_degree))
    ]
    return RElement(ring, [ring.sc_zero()] * prod.r + [lead] + tail)


def brute_quadratic_intersect(domain, i, j):
    """Oracle: enumerate I modulo det(J)*I and keep the members of J."""
    dj = det_echelon(j.rows)
    cands = [tuple(dj * v for v in row) for row in i.rows]
    for c1 in range(dj):
        for c2 in range(dj):
            vec = tuple(c1 * i.rows[0][k] + c2 * i.rows[1][k] for k in range(2))
            if lattice_contains(j.rows, vec):
                cands.append(vec)
    return FractionalIdeal(domain, hnf(cands))


def brute_quadratic_colon(domain, i, j):
    """Oracle for (I : J): x * det(J) lies in I for any x in (I : J), so
    enumerate y in I over representatives modulo det(J)*I and keep those
    with (y/det(J)) * J <= I; the kept y span det(J) * (I : J)."""
    dj = det_echelon(j.rows)
    scaled_i = [tuple(dj * v for v in row) for row in i.rows]
    cands = list(scaled_i)
    j_elems = [domain.element(*row) for row in j.rows]
    for c1 in range(dj):
        for c2 in range(dj):
            y = domain.element(
                c1 * i.rows[0][0] + c2 * i.rows[1][0],
                c1 * i.rows[0][1] + c2 * i.rows[1][1],
            )
            if all(lattice_contains(scaled_i, (y * g).coords()) for g in j_elems):
                cands.append(y.coords())
    return FractionalIdeal(domain, hnf(cands), dj)


def brute_quadratic_product(domain, gens_i, gens_j):
    """Oracle: span of the pairwise generator products and their w-multiples."""
    raw = []
    for x in gens_i:
        for y in gens_j:
            raw.append(x * y)
            raw.append(domain.omega() * x * y)
    return FractionalIdeal.from_elements(domain, raw)
