"""Exact dense linear algebra over Q and Q[t1..tm], and integer row lattices.

Matrices are sequences of rows.  Rational routines use Fractions; polynomial
routines use fraction-free (Bareiss) elimination so intermediate entries stay
polynomial.  Lattice routines return canonical row-style Hermite normal forms
(pivots positive, entries above a pivot reduced into [0, pivot), zero rows
dropped), so lattice equality is plain tuple equality.  Everything is pure and
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .polys import Poly


# ---------------------------------------------------------------------------
# rational matrices


def rat_rref(rows, ncols):
    """Reduced row echelon form over Q.  Returns (rref rows, pivot columns)."""
    work = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[:r]], tuple(pivots)


def rat_rank(rows, ncols) -> int:
    return len(rat_rref(rows, ncols)[0])


def nullspace(rows, ncols):
    """Canonical basis of the right kernel {v : M v = 0}, one row per free
    column: entry 1 at the free column, pivot entries read off the RREF."""
    rref, pivots = rat_rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rref[i][free]
        basis.append(tuple(vec))
    return basis


def rank(rows) -> int:
    """Rank over the fraction field of the entry ring (Q or Q[t1..tm])."""
    rows = list(rows)
    if not rows:
        return 0
    ncols = len(rows[0])
    if any(isinstance(e, Poly) for row in rows for e in row):
        return poly_rank(rows)
    return rat_rank(rows, ncols)


# ---------------------------------------------------------------------------
# polynomial matrices (fraction-free Bareiss elimination)


def _poly_entry(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x, 0) if not isinstance(x, Poly) else x


def _bareiss(rows):
    """Fraction-free elimination.  Returns (echelon rows, pivot (row,col) list).

    Pivot choice is the first row with a nonzero entry in the current column,
    which makes the result deterministic.
    """
    work = [[_poly_entry(e) for e in row] for row in rows]
    m = len(work)
    ncols = len(work[0]) if m else 0
    pivots = []
    prev = Poly.const(1, 0)
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, m):
            if not work[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        piv = work[r][c]
        for i in range(r + 1, m):
            for j in range(c + 1, ncols):
                num = piv * work[i][j] - work[i][c] * work[r][j]
                work[i][j] = num.exact_div(prev)
            work[i][c] = Poly()
        pivots.append((r, c))
        prev = piv
        r += 1
    return work, pivots


def poly_rank(rows) -> int:
    return len(_bareiss(rows)[1])


def _det_expand(rows) -> Poly:
    n = len(rows)
    if n == 0:
        return Poly.const(1, 0)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Poly()
    sign = 1
    for j in range(n):
        entry = rows[0][j]
        if not entry.is_zero():
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            term = entry * _det_expand(minor)
            total = total + term if sign > 0 else total - term
        sign = -sign
    return total


def poly_nullspace(rows):
    """Basis of the right kernel of a polynomial matrix, via Cramer minors.

    Vectors are polynomial (a common multiplier det(pivot block) clears the
    fraction field); each is checked to annihilate every row.
    """
    rows = [[_poly_entry(e) for e in row] for row in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    _, pivots = _bareiss(rows)
    pivot_rows = [r for r, _ in pivots]
    pivot_cols = [c for _, c in pivots]
    pivot_col_set = set(pivot_cols)
    block = [[rows[r][c] for c in pivot_cols] for r in pivot_rows]
    d = _det_expand(block)
    basis = []
    for free in range(ncols):
        if free in pivot_col_set:
            continue
        vec = [Poly() for _ in range(ncols)]
        vec[free] = d
        for i in range(len(pivot_cols)):
            col = [[-rows[r][free]] for r in pivot_rows]
            replaced = [
                [block[a][b] if b != i else col[a][0] for b in range(len(pivot_cols))]
                for a in range(len(pivot_rows))
            ]
            vec[pivot_cols[i]] = _det_expand(replaced)
        for row in rows:
            acc = Poly()
            for e, v in zip(row, vec):
                acc = acc + e * v
            if not acc.is_zero():
                raise AssertionError("poly_nullspace produced a non-kernel vector")
        basis.append(tuple(vec))
    return basis


# ---------------------------------------------------------------------------
# integer row lattices


def _ident(k):
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def hnf_transform(rows, ncols):
    """(H, U) with U unimodular, U*A = H, H in row echelon with positive
    pivots and reduced entries above them.  Zero rows of H sit at the bottom;
    the matching rows of U span the left kernel of A."""
    work = [list(map(int, row)) for row in rows]
    m = len(work)
    unimod = _ident(m)
    r = 0
    for c in range(ncols):
        while True:
            nonzero = [i for i in range(r, m) if work[i][c]]
            if not nonzero:
                break
            i0 = min(nonzero, key=lambda i: (abs(work[i][c]), i))
            if i0 != r:
                work[r], work[i0] = work[i0], work[r]
                unimod[r], unimod[i0] = unimod[i0], unimod[r]
            done = True
            for i in range(r + 1, m):
                if work[i][c]:
                    q = work[i][c] // work[r][c]
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                    unimod[i] = [a - q * b for a, b in zip(unimod[i], unimod[r])]
                    if work[i][c]:
                        done = False
            if done:
                break
        if r < m and work[r][c]:
            if work[r][c] < 0:
                work[r] = [-x for x in work[r]]
                unimod[r] = [-x for x in unimod[r]]
            for i in range(r):
                q = work[i][c] // work[r][c]
                if q:
                    work[i] = [a - q * b for a, b in zip(work[i], work[r])]
                    unimod[i] = [a - q * b for a, b in zip(unimod[i], unimod[r])]
            r += 1
    return [tuple(row) for row in work], [tuple(row) for row in unimod]


def hnf(rows, ncols):
    """Canonical row-style Hermite normal form; zero rows dropped."""
    h, _ = hnf_transform(rows, ncols)
    return tuple(row for row in h if any(row))


def left_kernel(rows, ncols):
    """HNF basis of {v in Z^m : v A = 0} for an integer matrix A (m rows)."""
    m = len(rows)
    h, u = hnf_transform(rows, ncols)
    kernel_rows = [u[i] for i in range(m) if not any(h[i])]
    return hnf(kernel_rows, m)


def left_kernel_rational(rows, ncols):
    """Integer left kernel of a rational matrix (clear denominators per column)."""
    if not rows:
        return ()
    cleared = []
    mults = []
    for c in range(ncols):
        mult = lcm(*(Fraction(row[c]).denominator for row in rows)) if rows else 1
        mults.append(mult)
    for row in rows:
        cleared.append([int(Fraction(x) * mult) for x, mult in zip(row, mults)])
    return left_kernel(cleared, ncols)


def right_kernel_rational(rows, ncols):
    """HNF basis of {v in Z^ncols : A v = 0} for a rational matrix A."""
    if not rows:
        return tuple(tuple(r) for r in _ident(ncols))
    transposed = [[rows[i][c] for i in range(len(rows))] for c in range(ncols)]
    return left_kernel_rational(transposed, len(rows))


def saturate(rows, ncols):
    """HNF basis of (row-span over Q) intersect Z^ncols."""
    rows = [list(row) for row in rows]
    if not rows:
        return ()
    kernel = nullspace(rows, ncols)     # right kernel over Q
    if not kernel:
        return tuple(tuple(r) for r in _ident(ncols))
    # v lies in the rational row span iff v is orthogonal to the right kernel.
    cols = [[vec[i] for vec in kernel] for i in range(ncols)]
    return left_kernel_rational(cols, len(kernel))


def lattice_intersect(rows_a, rows_b, ncols):
    """HNF basis of the intersection of two integer row lattices."""
    rows_a = [tuple(r) for r in rows_a]
    rows_b = [tuple(r) for r in rows_b]
    if not rows_a or not rows_b:
        return ()
    stacked = rows_a + rows_b
    combos = left_kernel(stacked, ncols)
    gens = []
    for combo in combos:
        vec = [0] * ncols
        for coeff, row in zip(combo[: len(rows_a)], rows_a):
            if coeff:
                for j in range(ncols):
                    vec[j] += coeff * row[j]
        gens.append(vec)
    return hnf(gens, ncols)


def lattice_contains(hnf_rows, vector) -> bool:
    """Membership test against an HNF basis."""
    return not any(lattice_reduce(hnf_rows, vector))


def lattice_reduce(hnf_rows, vector):
    """Canonical coset representative of `vector` modulo the HNF lattice."""
    vec = list(map(int, vector))
    for row in hnf_rows:
        c = next(j for j, x in enumerate(row) if x)
        q = vec[c] // row[c]
        if q:
            for j in range(c, len(vec)):
                vec[j] -= q * row[j]
    return tuple(vec)


def prefix_sublattice(hnf_rows, ncols, j):
    """HNF basis of {v in L : v[j:] = 0}, i.e. L intersected with Z^j x 0.

    Same value as lattice_intersect(L, prefix identity) but computed from the
    tail coordinates directly.
    """
    rows = [tuple(r) for r in hnf_rows]
    if not rows:
        return ()
    if j >= ncols:
        return hnf(rows, ncols)
    tails = [row[j:] for row in rows]
    combos = left_kernel(tails, ncols - j)
    gens = []
    for combo in combos:
        vec = [0] * ncols
        for coeff, row in zip(combo, rows):
            if coeff:
                for k in range(ncols):
                    vec[k] += coeff * row[k]
        gens.append(vec)
    return hnf(gens, ncols)


def primitive(vector):
    """Divide out the content; first nonzero entry made positive."""
    g = 0
    for x in vector:
        g = gcd(g, abs(int(x)))
    if g == 0:
        return tuple(0 for _ in vector)
    vec = [int(x) // g for x in vector]
    for x in vec:
        if x:
            if x < 0:
                vec = [-y for y in vec]
            break
    return tuple(vec)
