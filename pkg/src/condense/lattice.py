"""Exact integer-lattice helpers: HNF, kernels, membership, intersections.

Lattices are given by integer row vectors.  The canonical form used
throughout the package is the row Hermite normal form: echelon shape,
positive pivots, entries above a pivot reduced into [0, pivot).  Two
generating sets span the same lattice iff their HNFs are identical.
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _eliminate(work, i0: int, i: int, col: int):
    """Row-combine work[i0], work[i] so work[i][col] becomes 0 (unimodular)."""
    a, b = work[i0][col], work[i][col]
    if b == 0:
        return
    if a == 0:
        work[i0], work[i] = work[i], work[i0]
        return
    g, p, q = xgcd(a, b)
    r0 = [p * x + q * y for x, y in zip(work[i0], work[i])]
    r1 = [(-b // g) * x + (a // g) * y for x, y in zip(work[i0], work[i])]
    work[i0], work[i] = r0, r1


def hnf(rows) -> tuple[tuple[int, ...], ...]:
    """Canonical row HNF of the lattice spanned by the given rows."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return ()
    ncols = len(work[0])
    pivots = []
    r = 0
    for col in range(ncols):
        # _eliminate swaps a nonzero entry up into row r when needed, so after
        # this loop work[r][col] is +-gcd of column col over rows r..end
        for i in range(r + 1, len(work)):
            _eliminate(work, r, i, col)
        if work[r][col] != 0:
            if work[r][col] < 0:
                work[r] = [-x for x in work[r]]
            pivots.append((r, col))
            r += 1
        if r == len(work):
            break
    work = work[:r]
    # reduce entries above each pivot into [0, pivot)
    for k in range(len(pivots) - 1, -1, -1):
        pr, pc = pivots[k]
        p = work[pr][pc]
        for j in range(pr):
            f = work[j][pc] // p
            if f:
                work[j] = [x - f * y for x, y in zip(work[j], work[pr])]
    return tuple(tuple(row) for row in work)


def hnf_with_transform(rows):
    """(H, U) with U unimodular, U @ rows == H; H keeps its zero rows."""
    m = len(rows)
    if m == 0:
        return (), ()
    ncols = len(rows[0])
    work = [list(r) + [1 if i == j else 0 for j in range(m)] for i, r in enumerate(rows)]
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, m) if work[i][col] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        for i in range(r + 1, m):
            _eliminate(work, r, i, col)
        if work[r][col] < 0:
            work[r] = [-x for x in work[r]]
        r += 1
        if r == m:
            break
    H = tuple(tuple(row[:ncols]) for row in work)
    U = tuple(tuple(row[ncols:]) for row in work)
    return H, U


def kernel(rows):
    """HNF basis of the left kernel {v : v @ rows == 0}."""
    H, U = hnf_with_transform(rows)
    ker = [U[i] for i in range(len(H)) if not any(H[i])]
    return hnf(ker)


def solve_in_lattice(hnf_rows, target):
    """Integer y with y @ hnf_rows == target, or None.  Rows must be in echelon form."""
    t = list(target)
    coeffs = []
    for row in hnf_rows:
        c = next((j for j, x in enumerate(row) if x != 0), None)
        if c is None:
            coeffs.append(0)
            continue
        if t[c] % row[c] != 0:
            return None
        q = t[c] // row[c]
        coeffs.append(q)
        if q:
            t = [x - q * y for x, y in zip(t, row)]
    if any(t):
        return None
    return tuple(coeffs)


def lattice_contains(hnf_rows, target) -> bool:
    return solve_in_lattice(hnf_rows, target) is not None


def lattice_intersect(rows_a, rows_b):
    """HNF of the intersection of the lattices spanned by rows_a and rows_b."""
    ka, kb = len(rows_a), len(rows_b)
    if ka == 0 or kb == 0:
        return ()
    stacked = [list(r) for r in rows_a] + [list(r) for r in rows_b]
    out = []
    for v in kernel(stacked):
        vec = None
        for c, row in zip(v[:ka], rows_a):
            add = [c * x for x in row]
            vec = add if vec is None else [x + y for x, y in zip(vec, add)]
        if vec and any(vec):
            out.append(vec)
    return hnf(out)


def express_in_rows(gen_rows, target):
    """Integer combination of the original gen_rows equal to target, or None."""
    H, U = hnf_with_transform(gen_rows)
    nz = [i for i in range(len(H)) if any(H[i])]
    y = solve_in_lattice([H[i] for i in nz], target)
    if y is None:
        return None
    m = len(gen_rows)
    combo = [0] * m
    for yk, i in zip(y, nz):
        if yk:
            combo = [c + yk * u for c, u in zip(combo, U[i])]
    return tuple(combo)


def det_echelon(hnf_rows) -> int:
    """Product of pivots of a full-rank square echelon basis (the lattice index)."""
    d = 1
    for i, row in enumerate(hnf_rows):
        d *= row[i] if i < len(row) else 0
    return d
