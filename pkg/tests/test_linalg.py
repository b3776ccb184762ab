import random
from fractions import Fraction as F

from slopechain import linalg
from slopechain.polys import Poly


def P(c):
    return Poly.const(c, 1)


T = Poly.symbol(1, 1)


class TestRank:
    def test_identity(self):
        assert linalg.rank([[1, 0], [0, 1]]) == 2

    def test_proportional_rows_over_symbol_field(self):
        # rows (1, t) and (2, 2t)
        m = [[P(1), T], [P(2), T * 2]]
        assert linalg.rank(m) == 1

    def test_symbolic_full_rank(self):
        # oracle: the 2x2 determinant 1 - t^2 is a nonzero polynomial
        a, b, c, d = P(1), T, T, P(1)
        det = a * d - b * c
        assert not det.is_zero()
        assert linalg.rank([[a, b], [c, d]]) == 2

    def test_rank_equals_transpose_rank(self):
        rng = random.Random(11)
        for _ in range(25):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            m = [[F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
                 for _ in range(rows)]
            mt = [[m[i][j] for i in range(rows)] for j in range(cols)]
            assert linalg.rank(m) == linalg.rank(mt)

    def test_rank_plus_nullity(self):
        rng = random.Random(12)
        for _ in range(25):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            m = [[F(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)]
            kernel = linalg.nullspace(m, cols)
            assert linalg.rank(m) + len(kernel) == cols


class TestNullspace:
    def test_single_row(self):
        basis = linalg.nullspace([[1, 1]], 2)
        assert basis == [(F(-1), F(1))]

    def test_identity_empty(self):
        assert linalg.nullspace([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3) == []

    def test_multiply_back(self):
        m = [[1, 2, 3], [2, 4, 6]]
        basis = linalg.nullspace(m, 3)
        assert len(basis) == 2
        for vec in basis:
            for row in m:
                assert sum(a * b for a, b in zip(row, vec)) == 0

    def test_deterministic(self):
        m = [[F(1), F(2), F(3), F(5)], [F(0), F(1), F(1), F(1)]]
        assert linalg.nullspace(m, 4) == linalg.nullspace(m, 4)


class TestPolyNullspace:
    def test_annihilates(self):
        m = [[P(1), T, P(0)], [T, T * T, P(0)]]
        basis = linalg.poly_nullspace(m)
        assert len(basis) == 2
        for vec in basis:
            for row in m:
                acc = Poly()
                for e, v in zip(row, vec):
                    acc = acc + e * v
                assert acc.is_zero()

    def test_rank_matches_random_substitution(self):
        # probabilistic cross-check: substitute the symbol by 20 random
        # rationals; the max rational rank must equal the symbolic rank
        rng = random.Random(13)
        for _ in range(12):
            rows = rng.randint(1, 4)
            cols = rng.randint(1, 4)
            m = [
                [P(rng.randint(-2, 2)) + T * rng.randint(-2, 2) for _ in range(cols)]
                for _ in range(rows)
            ]
            symbolic = linalg.poly_rank(m)
            best = 0
            for _ in range(20):
                val = F(rng.randint(-100, 100), rng.randint(1, 40))
                sub = [[e.evaluate((val,)) for e in row] for row in m]
                best = max(best, linalg.rat_rank(sub, cols))
            assert symbolic == best


class TestHNF:
    def test_already_hnf(self):
        assert linalg.hnf([[2, 0], [0, 3]], 2) == ((2, 0), (0, 3))

    def test_row_reduction(self):
        # by hand: (1,1), (1,-1) -> (1,1), (0,2); the index-2 sublattice
        assert linalg.hnf([[1, 1], [1, -1]], 2) == ((1, 1), (0, 2))

    def test_zero_rows_dropped(self):
        assert linalg.hnf([[0, 0]], 2) == ()

    def test_idempotent_and_lattice_preserving(self):
        rng = random.Random(14)
        for _ in range(30):
            cols = rng.randint(1, 4)
            rows = [
                [rng.randint(-5, 5) for _ in range(cols)]
                for _ in range(rng.randint(1, 4))
            ]
            h = linalg.hnf(rows, cols)
            assert linalg.hnf(h, cols) == h
            for row in rows:
                assert linalg.lattice_contains(h, row)
            for row in h:
                assert _in_integer_span(rows, row, cols)

    def test_index_preserved(self):
        # lattice index oracle: |det| of a full-rank basis
        h = linalg.hnf([[1, 1], [1, -1]], 2)
        det = h[0][0] * h[1][1] - h[0][1] * h[1][0]
        assert abs(det) == abs(1 * (-1) - 1 * 1)


def _in_integer_span(rows, target, cols):
    """Brute-force membership of target in the row lattice (HNF oracle-free:
    solve with the transform)."""
    h, u = linalg.hnf_transform(rows, cols)
    vec = list(target)
    for i, row in enumerate(h):
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            continue
        if vec[piv] % row[piv] == 0:
            q = vec[piv] // row[piv]
            vec = [a - q * b for a, b in zip(vec, row)]
    return not any(vec)


class TestSaturate:
    def test_examples(self):
        assert linalg.saturate([[2, 0]], 2) == ((1, 0),)
        assert linalg.saturate([[2, 2]], 2) == ((1, 1),)
        assert linalg.saturate([[1, 1], [1, -1]], 2) == ((1, 0), (0, 1))

    def test_idempotent_rank_preserving(self):
        rng = random.Random(15)
        for _ in range(30):
            cols = rng.randint(1, 4)
            rows = [
                [rng.randint(-4, 4) for _ in range(cols)]
                for _ in range(rng.randint(1, 3))
            ]
            sat = linalg.saturate(rows, cols)
            assert linalg.saturate(sat, cols) == sat
            assert len(sat) == linalg.rank([[F(x) for x in r] for r in rows] or [[F(0)] * cols])


class TestLatticeIntersect:
    def test_full_lattice(self):
        ident = [[1, 0], [0, 1]]
        other = [[1, 0], [0, 2]]
        assert linalg.lattice_intersect(ident, other, 2) == ((1, 0), (0, 2))

    def test_transverse_lines(self):
        assert linalg.lattice_intersect([[1, 0]], [[0, 1]], 2) == ()

    def test_skew_lines(self):
        # a(1,1) = b(1,-1) forces a = b = 0
        assert linalg.lattice_intersect([[1, 1]], [[1, -1]], 2) == ()

    def test_contained_in_both(self):
        rng = random.Random(16)
        for _ in range(20):
            cols = rng.randint(1, 4)
            a = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(2)]
            b = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(2)]
            inter = linalg.lattice_intersect(a, b, cols)
            ha, hb = linalg.hnf(a, cols), linalg.hnf(b, cols)
            for row in inter:
                assert linalg.lattice_contains(ha, row)
                assert linalg.lattice_contains(hb, row)


class TestLeftKernel:
    def test_annihilates_and_counts(self):
        rng = random.Random(17)
        for _ in range(25):
            rows = rng.randint(1, 4)
            cols = rng.randint(1, 4)
            m = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
            kernel = linalg.left_kernel(m, cols)
            for vec in kernel:
                combo = [
                    sum(vec[i] * m[i][j] for i in range(rows)) for j in range(cols)
                ]
                assert not any(combo)
            assert len(kernel) == rows - linalg.rank([[F(x) for x in r] for r in m])


class TestPrefixSublattice:
    def test_matches_intersection_with_prefix(self):
        rng = random.Random(18)
        for _ in range(25):
            cols = rng.randint(1, 4)
            rows = linalg.hnf(
                [[rng.randint(-4, 4) for _ in range(cols)]
                 for _ in range(rng.randint(1, 3))],
                cols,
            )
            for j in range(cols + 1):
                prefix = [
                    [1 if k == i else 0 for k in range(cols)] for i in range(j)
                ]
                assert linalg.prefix_sublattice(rows, cols, j) == \
                    linalg.lattice_intersect(rows, prefix, cols)


class TestDeterminism:
    def test_bit_identical_reruns(self):
        rows = [[3, -1, 4], [1, 5, -9], [2, 6, 5]]
        assert linalg.hnf(rows, 3) == linalg.hnf([r[:] for r in rows], 3)
        assert linalg.saturate(rows, 3) == linalg.saturate([r[:] for r in rows], 3)
