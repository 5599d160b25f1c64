"""Integer lattice helpers: HNF canonicality, kernels, intersections."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from condense.lattice import (
    det_echelon,
    express_in_rows,
    hnf,
    kernel,
    lattice_contains,
    lattice_intersect,
    solve_in_lattice,
    xgcd,
)

small_ints = st.integers(min_value=-9, max_value=9)
rows_2d = st.lists(st.tuples(small_ints, small_ints), min_size=1, max_size=4)


def test_xgcd():
    for a, b in [(12, 18), (-4, 6), (0, 5), (7, 0), (0, 0), (-3, -9)]:
        g, s, t = xgcd(a, b)
        assert s * a + t * b == g
        assert g >= 0


@settings(max_examples=80, deadline=None)
@given(rows_2d)
def test_hnf_invariant_under_row_permutation(rows):
    shuffled = list(rows)
    random.Random(0).shuffle(shuffled)
    assert hnf(rows) == hnf(shuffled)


@settings(max_examples=80, deadline=None)
@given(rows_2d, st.integers(min_value=-3, max_value=3))
def test_hnf_invariant_under_unimodular_row_op(rows, k):
    if len(rows) < 2:
        return
    modified = [list(r) for r in rows]
    modified[0] = [x + k * y for x, y in zip(modified[0], modified[1])]
    assert hnf(rows) == hnf(modified)


@settings(max_examples=80, deadline=None)
@given(rows_2d)
def test_hnf_shape(rows):
    h = hnf(rows)
    pivots = []
    for row in h:
        nz = [j for j, v in enumerate(row) if v]
        assert nz, "no zero rows in the HNF"
        pivots.append(nz[0])
        assert row[nz[0]] > 0
    assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
    # entries above a pivot are reduced into [0, pivot)
    for k, row in enumerate(h):
        p = row[pivots[k]]
        for j in range(k):
            assert 0 <= h[j][pivots[k]] < p


@settings(max_examples=60, deadline=None)
@given(rows_2d)
def test_kernel_annihilates(rows):
    for v in kernel(rows):
        combo = [0, 0]
        for c, row in zip(v, rows):
            combo[0] += c * row[0]
            combo[1] += c * row[1]
        assert combo == [0, 0]


@settings(max_examples=60, deadline=None)
@given(rows_2d, st.tuples(small_ints, small_ints))
def test_solve_in_lattice_round_trip(rows, coeffs_seed):
    h = hnf(rows)
    if not h:
        return
    # build a target from known coefficients, then solve it back
    target = [0] * len(h[0])
    for c, row in zip(coeffs_seed, h):
        for i, v in enumerate(row):
            target[i] += c * v
    y = solve_in_lattice(h, target)
    assert y is not None
    rebuilt = [0] * len(h[0])
    for c, row in zip(y, h):
        for i, v in enumerate(row):
            rebuilt[i] += c * v
    assert rebuilt == target


def brute_intersect(rows_a, rows_b):
    """Oracle: enumerate A modulo det(B)*A and keep the members of B."""
    ha, hb = hnf(rows_a), hnf(rows_b)
    if len(ha) < 2 or len(hb) < 2:
        return None  # oracle requires full-rank 2x2 lattices
    db = abs(det_echelon(hb))
    cands = [tuple(db * v for v in row) for row in ha]
    for c1 in range(db):
        for c2 in range(db):
            vec = tuple(c1 * ha[0][i] + c2 * ha[1][i] for i in range(2))
            if lattice_contains(hb, vec):
                cands.append(vec)
    return hnf(cands)


def test_intersect_against_brute_oracle():
    rng = random.Random(7)
    done = 0
    while done < 40:
        rows_a = [(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(2)]
        rows_b = [(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(2)]
        expected = brute_intersect(rows_a, rows_b)
        if expected is None:
            continue
        assert lattice_intersect(hnf(rows_a), hnf(rows_b)) == expected
        done += 1


def test_express_in_rows():
    gens = [(2, 0), (3, 3), (0, 7)]
    target = (1, 17)
    combo = express_in_rows(gens, target)
    assert combo is not None
    rebuilt = [0, 0]
    for c, row in zip(combo, gens):
        rebuilt[0] += c * row[0]
        rebuilt[1] += c * row[1]
    assert tuple(rebuilt) == target
    assert express_in_rows([(2, 0), (0, 2)], (1, 0)) is None
