import math
from fractions import Fraction as F

import pytest

from slopechain import (
    MatrixTooLarge,
    ModelConfig,
    SymbolicModelNotSpecialized,
    build_chain,
    build_model,
    enumerate_gamma,
    eval_rank,
    in_base_locus,
    jet_matrix,
    kernel_basis,
    locus_probe,
    monomial_basis,
    threshold_sweep,
    translate_section,
)
from slopechain.locus import evaluate_section


def rational_model(n, gens, scales):
    return build_model(ModelConfig(n=n, generators=tuple(gens), scales=tuple(scales)))


def line_model(s):
    return rational_model(1, [(1,)], (str(s),))


class TestMonomialBasis:
    def test_sizes(self):
        for n in range(1, 4):
            for d in range(1, 6):
                assert len(monomial_basis(n, d)) == math.comb(n + d, n)

    def test_graded_order(self):
        basis = monomial_basis(2, 2)
        degrees = [sum(e) for e in basis.exponents]
        assert degrees == sorted(degrees)


class TestJetMatrix:
    def test_evaluation_at_origin(self):
        m = line_model(2)
        jm = jet_matrix(m, [(F(0),)], 1, 2)
        assert jm.rows == ((F(1), F(0), F(0)),)

    def test_hasse_derivative_row(self):
        # at the point 2 with T = 2: value row (1, 2, 4), derivative row
        # binom(a,1) * 2^(a-1) = (0, 1, 4)
        m = line_model(2)
        jm = jet_matrix(m, [(F(2),)], 2, 2)
        assert jm.rows[0] == (F(1), F(2), F(4))
        assert jm.rows[1] == (F(0), F(1), F(4))

    def test_planar_origin_jets(self):
        m = rational_model(2, [(1, 0), (0, 1)], (2, 2))
        jm = jet_matrix(m, [(F(0), F(0))], 2, 1)
        assert len(jm.rows) == 3
        ident = [[F(1) if i == j else F(0) for j in range(3)] for i in range(3)]
        assert [list(r) for r in jm.rows] == ident

    def test_symbolic_model_rejected(self):
        m = build_model(ModelConfig(
            n=1,
            generators=(({"const": "0", "coeffs": {"t1": "1"}},),),
            scales=("2",),
            symbols=("tau",),
        ))
        with pytest.raises(SymbolicModelNotSpecialized):
            jet_matrix(m, [(F(0),)], 1, 2)

    def test_size_guard(self):
        m = line_model(2)
        with pytest.raises(MatrixTooLarge):
            jet_matrix(m, [(F(i),) for i in range(10)], 3, 12, limit=50)


class TestKernelBasis:
    def test_vandermonde_empty_kernel(self):
        m = line_model(2)
        pts = [(F(-1),), (F(0),), (F(1),)]
        kb = kernel_basis(m, pts, 1, 2)
        assert kb.vectors == ()

    def test_cubic_through_three_points(self):
        m = line_model(2)
        pts = [(F(-1),), (F(0),), (F(1),)]
        kb = kernel_basis(m, pts, 1, 3)
        # unique monic cubic with these roots: x^3 - x
        assert kb.vectors == ((F(0), F(-1), F(0), F(1)),)

    def test_squared_cubic(self):
        m = line_model(2)
        pts = [(F(-1),), (F(0),), (F(1),)]
        kb = kernel_basis(m, pts, 2, 6)
        # (x^3 - x)^2 = x^6 - 2 x^4 + x^2
        assert kb.vectors == ((F(0), F(0), F(1), F(0), F(-2), F(0), F(1)),)


class TestInBaseLocus:
    def test_empty_kernel_everything_inside(self):
        m = line_model(2)
        kb = kernel_basis(m, [(F(-1),), (F(0),), (F(1),)], 1, 2)
        assert in_base_locus(kb, (F(1234),))

    def test_cubic_membership(self):
        m = line_model(2)
        kb = kernel_basis(m, [(F(-1),), (F(0),), (F(1),)], 1, 3)
        assert not in_base_locus(kb, (F(2),))
        assert in_base_locus(kb, (F(1),))


class TestEvalRank:
    def test_vandermonde(self):
        m = line_model(2)
        r = eval_rank(m, [(F(-1),), (F(0),), (F(1),)], 1, 2)
        assert (r.rank, r.injective, r.surjective) == (3, True, True)

    def test_jet_order_exceeds_degree(self):
        m = line_model(2)
        r = eval_rank(m, [(F(0),)], 3, 1)
        assert (r.rank, r.rows, r.cols) == (2, 3, 2)
        assert r.injective and not r.surjective

    def test_empty_point_set(self):
        m = line_model(2)
        r = eval_rank(m, [], 1, 2)
        assert r.rank == 0 and r.surjective and not r.injective


class TestTranslateSection:
    def test_linear(self):
        basis = monomial_basis(1, 3)
        x = (F(0), F(1), F(0), F(0))
        assert translate_section(basis, x, (F(1),)) == (F(-1), F(1), F(0), F(0))

    def test_square(self):
        basis = monomial_basis(1, 2)
        x2 = (F(0), F(0), F(1))
        assert translate_section(basis, x2, (F(1),)) == (F(1), F(-2), F(1))

    def test_equivariance_with_shifted_kernel(self):
        # membership commutes with translating both the point set and the test
        # point; oracle: recompute the kernel on the shifted points
        m = line_model(2)
        pts = [(F(-1),), (F(0),), (F(1),)]
        g = F(3, 2)
        kb = kernel_basis(m, pts, 1, 3)
        shifted = [(p[0] + g,) for p in pts]
        kb_shifted = kernel_basis(m, shifted, 1, 3)
        for x in [F(0), F(1), F(2), F(1, 2), F(-5, 3)]:
            assert in_base_locus(kb, (x,)) == in_base_locus(kb_shifted, (x + g,))

    def test_translated_sections_vanish_on_shifted_points(self):
        m = line_model(2)
        pts = [(F(-1),), (F(0),), (F(1),)]
        kb = kernel_basis(m, pts, 1, 3)
        g = (F(2),)
        for vec in kb.vectors:
            moved = translate_section(kb.basis, vec, g)
            for p in pts:
                assert evaluate_section(kb.basis, moved, (p[0] + g[0],)) == 0


class TestLocusProbe:
    def test_line_cubic_regime(self):
        m = line_model(2)
        chain = build_chain(m)
        entries = locus_probe(m, chain, 1, 3, F(1, 2), samples=40, seed=5)
        assert entries[0].lower and entries[0].upper

    def test_line_empty_kernel_regime(self):
        m = line_model(2)
        chain = build_chain(m)
        entries = locus_probe(m, chain, 1, 2, F(1, 2), samples=40, seed=5)
        last = entries[-1]
        assert last.subgroup_dim == 1 and last.lower and last.upper is None
        assert not entries[0].upper

    def test_omega_always_inside(self):
        m = line_model(3)
        omega = enumerate_gamma(m)
        kb = kernel_basis(m, omega.points, 1, 4)
        for p in omega.points:
            assert in_base_locus(kb, p)


class TestThresholdSweep:
    def test_univariate_double_order(self):
        # Hermite count 2 * 3 = 6: everything up to D = 5, the points after
        m = line_model(2)
        chain = build_chain(m)
        report = threshold_sweep(m, chain, 2, range(1, 8), F(1, 2), samples=40, seed=5)
        for row in report.rows:
            if row.degree <= 5:
                assert row.nullity == 0 and row.i_star == 1
            else:
                assert row.nullity == row.degree + 1 - 6
                assert row.i_star == 0

    def test_planar_three_regimes(self):
        m = rational_model(2, [(1, 0), (0, 1)], (3, 2))
        chain = build_chain(m)
        report = threshold_sweep(m, chain, 1, range(1, 7), F(1, 2), samples=60, seed=9)
        stars = {row.degree: row.i_star for row in report.rows}
        assert stars == {1: 2, 2: 2, 3: 1, 4: 1, 5: 0, 6: 0}
        assert report.transitions == ((1, 2), (3, 1), (5, 0))

    def test_nullity_monotone(self):
        m = line_model(3)
        chain = build_chain(m)
        report = threshold_sweep(m, chain, 1, range(1, 10), F(1, 2), samples=20, seed=1)
        nullities = [row.nullity for row in report.rows]
        assert nullities == sorted(nullities)

    def test_trivial_chain_rank_bookkeeping(self):
        # no generators: Gamma(S) = {0}; with T = 2 the locus is everything
        # until degree... the origin constraints only ever cut 3 dimensions
        m = rational_model(2, [], ())
        chain = build_chain(m)
        assert chain.dims() == (0, 2)
        report = threshold_sweep(m, chain, 2, range(1, 4), F(1, 2), samples=10, seed=4)
        for row in report.rows:
            cols = (row.degree + 1) * (row.degree + 2) // 2
            assert row.rank == 3 and row.nullity == cols - 3
            # the single box point {0} is a proper locus once sections exist
            assert row.verdicts[0][0] is True
            assert row.verdicts[1][1] is None
