import warnings

import pytest

from oracles import oracle_weight, oracle_weights, sym_h, sympy_equal
from spectral_mlq import core, jt, mlq, poly
from spectral_mlq.core import format_word, parse_word
from spectral_mlq.mlq import MLQ
from spectral_mlq.poly import Poly

FIG_STARTS = ((5, 1), (3, 1), (2, 3))
FIG_ENDS = ((6, 4), (5, 6), (4, 6))
FIG_PATHS = (
    ((5, 1), (5, 2), (6, 2), (6, 3), (6, 4)),
    ((3, 1), (4, 1), (4, 2), (4, 3), (4, 4), (5, 4), (5, 5), (5, 6)),
    ((2, 3), (2, 4), (3, 4), (3, 5), (4, 5), (4, 6)),
)


class TestPaths:
    def test_single_paths(self):
        assert jt.path_sum((0, 1), (0, 3), 3) == Poly.one(3)
        assert jt.path_sum((0, 1), (2, 1), 3) == Poly.var(3, 1) ** 2
        assert jt.path_sum((0, 1), (1, 2), 3) == Poly.var(3, 1) + Poly.var(3, 2)
        assert jt.path_sum((2, 1), (1, 2), 3).is_zero()

    def test_single_path_formula_against_enumeration(self):
        for a in [(0, 1), (1, 2), (2, 1)]:
            for b in [(3, 3), (2, 4), (4, 2)]:
                total = sum((jt.path_weight(p, 4) for p in jt.enumerate_paths(a, b)), Poly.zero(4))
                assert total == jt.path_sum(a, b, 4)

    def test_figure_nilp(self):
        nilps = list(jt.enumerate_nilps(FIG_STARTS, FIG_ENDS))
        assert FIG_PATHS in nilps
        weight = Poly.one(6)
        for p in FIG_PATHS:
            weight = weight * jt.path_weight(p, 6)
        assert weight == Poly.monomial(6, (1, 1, 0, 2, 1, 0))

    def test_lgv_on_figure(self):
        assert jt.is_admissible(FIG_STARTS, FIG_ENDS)
        assert jt.lgv_determinant(FIG_STARTS, FIG_ENDS, 6) == jt.nilp_sum(FIG_STARTS, FIG_ENDS, 6)

    def test_trivial_tuples(self):
        assert jt.nilp_sum((), (), 3) == Poly.one(3)
        assert jt.lgv_determinant(((0, 1),), ((2, 2),), 3) == jt.path_sum((0, 1), (2, 2), 3)

    def test_non_admissible_warns(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            jt.lgv_determinant(((0, 1), (1, 1)), ((2, 2), (3, 3)), 3)
        assert caught


class TestTableaux:
    RIGHT = ((1, 1, 4), (2, 3), (4, 5, 5), (5,))
    LEFT = ((1, 2, 5), (2, 3), (3, 4, 5), (7,))

    def test_example_tableaux(self):
        assert jt.is_pseudo_partition((3, 2, 3, 1))
        assert not jt.is_pseudo_partition((1, 3))
        assert jt.is_semistandard(self.RIGHT)
        assert not jt.is_semistandard(self.LEFT)
        assert jt.surface(self.RIGHT) == (4, 3, 5, 5)
        assert jt.surface(self.LEFT) == (5, 3, 5, 7)
        assert jt.tableau_weight(self.RIGHT, 7) == Poly.monomial(7, (2, 1, 1, 2, 3, 0, 0))
        assert jt.tableau_weight(self.LEFT, 7) == Poly.monomial(7, (1, 2, 2, 1, 2, 0, 1))

    def test_determinant_small(self):
        assert jt.sst_determinant((1,), (3,), 4) == Poly.var(4, 3)
        assert jt.sst_sum((2, 1), (2, 3), 4) == jt.sst_determinant((2, 1), (2, 3), 4)

    def test_enumeration_respects_shape_and_surface(self):
        for t in jt.enumerate_sst((2, 3, 1), (2, 4, 5)):
            assert jt.shape(t) == (2, 3, 1)
            assert jt.surface(t) == (2, 4, 5)
            assert jt.is_semistandard(t)

    def test_pseudo_partition_of_type(self):
        assert jt.pseudo_partition_of_type((1, 1, 1, 1, 1, 3)) == (1, 2, 3, 4, 5)
        assert jt.pseudo_partition_of_type((3, 2)) == (1, 1, 1)
        assert jt.pseudo_partition_of_type((4, 2, 2, 5)) == (1, 1, 2, 2, 3, 3, 3, 3)

    def test_p_map_on_interlacing_example(self):
        q = MLQ(15, ((9, 12, 13), (7, 8, 11, 12, 14), (1, 3, 5, 6, 8, 10, 11, 14, 15)))
        t = jt.tableau_of_mlq(q)
        assert jt.shape(t) == jt.pseudo_partition_of_type((3, 2, 4, 6))
        assert jt.is_semistandard(t)
        assert jt.surface(t) == q.queues[-1]
        assert jt.mlq_of_tableau(t, (3, 2, 4, 6)) == q

    def test_p_map_single_queue(self):
        t = jt.tableau_of_mlq(MLQ(5, ((2, 4),)))
        assert t == ((2,), (4,))

    def test_p_map_on_generic_example(self):
        q = MLQ(15, ((2, 4, 9, 12), (1, 5, 6, 8, 12, 15), (1, 2, 4, 5, 8, 9, 13, 14)))
        t = jt.tableau_of_mlq(q)
        assert not jt.is_semistandard(t)
        assert jt.mlq_of_tableau(t, (4, 2, 2, 7)) == q


class TestDeterminantFormula:
    def test_u_of_v(self):
        assert format_word(jt.u_of_v(jt.SurfaceSpec((1, 2, 4, 6, 7, 9), (3, 3, 2, 2, 2, 1)), 9)) == "334242241"
        assert format_word(jt.u_of_v(jt.SurfaceSpec((1, 2, 5, 6, 8), (3, 3, 2, 1, 1)), 8)) == "33442141"
        assert format_word(jt.u_of_v(jt.SurfaceSpec((1, 2, 3), (2, 1, 1)), 3)) == "211"

    def test_invalid_specs(self):
        with pytest.raises(ValueError):
            jt.SurfaceSpec((1, 2), (1, 2))
        with pytest.raises(ValueError):
            jt.SurfaceSpec((1, 2), (3, 1))

    def test_single_site(self):
        for b in range(1, 5):
            spec = jt.SurfaceSpec((b,), (1,))
            assert jt.jt_spectral_weight(spec, 4) == Poly.var(4, b)

    def test_small_against_oracle(self):
        spec = jt.SurfaceSpec((1, 3, 4), (2, 2, 1))
        u = jt.u_of_v(spec, 5)
        assert jt.jt_spectral_weight(spec, 5) == oracle_weight(u)

    def test_full_surface_uses_empty_top_class(self):
        spec = jt.SurfaceSpec((1, 2, 3), (2, 1, 1))
        u = jt.u_of_v(spec, 3)
        assert jt.word_type_with_top(u, 3) == (2, 1, 0)
        assert jt.jt_spectral_weight(spec, 3) == oracle_weights((2, 1, 0))[u]

    def test_literal_determinant_of_merged_word(self):
        n = 8
        spec = jt.SurfaceSpec((1, 2, 5, 6, 8), (3, 3, 2, 1, 1))
        assert spec.gamma == (1, 1, 2, 3, 3)
        p = jt.jt_spectral_weight(spec, n)
        import sympy

        h = lambda i, k: sym_h(i, k, n)  # noqa: E731
        m = sympy.Matrix([
            [1, 0, 0, 0, 0],
            [h(1, 1), 1, 1, 1, 0],
            [h(2, 1), h(1, 2), h(1, 5), h(1, 6), 1],
            [h(3, 1), h(2, 2), h(2, 5), h(2, 6), h(1, 8)],
            [h(4, 1), h(3, 2), h(3, 5), h(3, 6), h(2, 8)],
        ])
        x = sympy.symbols("x1:9")
        assert sympy_equal(p, x[0] * x[1] * x[4] * x[5] * x[7] * m.det(method="berkowitz"))


class TestLacunar:
    SITES = (1, 2, 5, 6, 8)

    def test_is_lacunar(self):
        assert jt.is_lacunar((1, 4))
        assert not jt.is_lacunar((1, 2))
        assert jt.is_lacunar(())

    def test_sigma_words(self):
        words = {s: format_word(jt.sigma_s_word(self.SITES, s, 8)) for s in [(), (1,), (4,), (1, 4)]}
        assert words == {(): "54663261", (1,): "54663162", (4,): "45663261", (1, 4): "45663162"}
        assert jt.sigma_s_permutation(5, ()) == (5, 4, 3, 2, 1)

    def test_merged_word_and_gamma(self):
        assert format_word(jt.merged_w0_word(self.SITES, (1, 4), 8)) == "33442141"
        assert jt.psi_gamma(5, (1, 4)) == (1, 1, 2, 3, 3)
        assert jt.psi_gamma(5, ()) == (1, 2, 3, 4, 5)

    def test_psi_of_empty_set(self):
        sites = (1, 3, 4)
        w0 = jt.sigma_s_word(sites, (), 5)
        assert jt.psi_t(sites, (), 5) == mlq.spectral_weights(jt.word_type_with_top(w0, 4), words=[w0])[w0]
        assert jt.swt_sigma_s(sites, (), 5) == jt.psi_t(sites, (), 5)

    def test_three_ways_small(self):
        sites = (1, 2, 4, 5)
        for t in [(), (1,), (2,), (3,), (1, 3)]:
            a = jt.psi_t(sites, t, 5)
            assert a == jt.psi_t_via_merge(sites, t, 5) == jt.psi_t_by_definition(sites, t, 5)

    def test_mobius_inversion_small(self):
        sites = (1, 2, 4, 5)
        for s in [(1,), (2,), (3,), (1, 3)]:
            w = jt.sigma_s_word(sites, s, 5)
            assert jt.swt_sigma_s(sites, s, 5) == oracle_weight(w, classes=5)

    def test_rejects_non_lacunar(self):
        with pytest.raises(ValueError):
            jt.psi_t(self.SITES, (1, 2), 8)
