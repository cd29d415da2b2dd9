from unittest import TestCase

import numpy as np

from pyquadri.bialgebra import (
    QuadriBialgebra,
    QuadriCoalgebra,
    check_bialgebra,
    check_bialgebra_compat,
    check_coboundary_coalgebra,
    check_q_equation,
    check_q_tensors,
    check_quadri_coalgebra,
    coalgebra_of_dual,
    coboundary_comults,
    double_from_r,
    drinfeld_double,
    dual_bialgebra,
    dual_quadri_of_coalgebra,
    graph_lagrangian_check,
    inclusions,
    q_equation_verdicts,
    q_tensors,
    t_r_morphism_checks,
)
from pyquadri.exactlin import equal, exact, inverse, zeros
from pyquadri.quadri import QuadriAlgebra, check_omega_2cocycle, check_quadri, dual_regular_bimodule, semidirect_sum
from pyquadri.report import PreconditionError, ShapeError
from pyquadri.search import SearchSpec, enumerate_structures, search_q_solutions
from tests.quadri import (
    left_unit2,
    left_unit2_r,
    quadri1,
    scalar_cube,
    se_mask2,
    se_one,
    skew2,
    zero_bialgebra,
    zero_quadri,
)


def _random_coalgebra(rng, dim):
    return QuadriCoalgebra(*[exact(rng.integers(-1, 2, size=(dim, dim, dim)).tolist()) for _ in range(4)])


def _small_algebras():
    spec = SearchSpec("quadri", 2, coefficient_set=(0, 1), template=se_mask2(), max_nonzero=2)
    return enumerate_structures(spec).found


class TestCoalgebra(TestCase):
    def test_zero(self):
        c = QuadriCoalgebra.zero(2)
        self.assertEqual(c.dim, 2)
        self.assertTrue(check_quadri_coalgebra(c).passed)

    def test_for_op(self):
        c = QuadriCoalgebra(scalar_cube(1), scalar_cube(2), scalar_cube(3), scalar_cube(4))
        self.assertEqual(c.for_op("succ")[0, 0, 0], 6)
        self.assertEqual(c.for_op("wedge")[0, 0, 0], 3)
        self.assertEqual(c.for_op("star")[0, 0, 0], 10)
        self.assertEqual(c.scaled(-1).comult("beta")[0, 0, 0], -2)

    def test_shapes(self):
        self.assertRaises(ShapeError, QuadriCoalgebra, scalar_cube(0), scalar_cube(0), scalar_cube(0), zeros(2, 2, 2))
        self.assertRaises(ShapeError, QuadriBialgebra, zero_quadri(2), QuadriCoalgebra.zero(1))

    def test_dual_conversion(self):
        c = QuadriCoalgebra(scalar_cube(1), scalar_cube(0), scalar_cube(0), scalar_cube(2))
        q = dual_quadri_of_coalgebra(c)
        self.assertEqual(q.nw[0, 0, 0], 1)
        self.assertEqual(q.se[0, 0, 0], 2)
        self.assertEqual(coalgebra_of_dual(q), c)

    def test_two_routes_agree(self):
        rng = np.random.default_rng(7)
        for _ in range(500):
            c = _random_coalgebra(rng, 2)
            direct = check_quadri_coalgebra(c)
            dual = check_quadri(dual_quadri_of_coalgebra(c))
            self.assertEqual(direct.passed, dual.passed)
            self.assertEqual(direct.violations, dual.violations)


class TestBialgebra(TestCase):
    def test_zero_coalgebra(self):
        report = check_bialgebra(zero_bialgebra(se_one()))
        self.assertTrue(report.passed)

    def test_invalid_parts(self):
        qb = QuadriBialgebra(quadri1(nw=1, se=1), QuadriCoalgebra.zero(1))
        report = check_bialgebra(qb)
        self.assertFalse(report.passed)
        self.assertTrue(all(tag.startswith("algebra: ") for tag in report.tags()))

    def test_compat_count(self):
        c = QuadriCoalgebra(scalar_cube(1), scalar_cube(0), scalar_cube(0), scalar_cube(0))
        report = check_bialgebra_compat(QuadriBialgebra(se_one(), c))
        self.assertFalse(report.passed)
        self.assertIn("(alpha + alpha_t)(x vee y) = (1 x L_se(x))(alpha + alpha_t)(y) + (R_vee(y) x 1) alpha(x)",
                      report.tags())

    def test_negated(self):
        c = QuadriCoalgebra(scalar_cube(1), scalar_cube(0), scalar_cube(0), scalar_cube(0))
        qb = QuadriBialgebra(se_one(), c)
        self.assertEqual(qb.negated().coalgebra.comult("alpha")[0, 0, 0], -1)
        self.assertEqual(qb.negated().negated(), qb)


class TestCoboundary(TestCase):
    def test_comults(self):
        c = coboundary_comults(se_one(), exact([[2]]))
        self.assertEqual(c.comult("alpha")[0, 0, 0], 0)
        self.assertEqual(c.comult("beta")[0, 0, 0], 2)
        self.assertEqual(c.comult("alpha_t")[0, 0, 0], 2)
        self.assertEqual(c.comult("beta_t")[0, 0, 0], -2)

    def test_zero_tensor(self):
        self.assertEqual(coboundary_comults(se_one(), zeros(1, 1)), QuadriCoalgebra.zero(1))

    def test_q_equation_dim1(self):
        report = check_q_equation(se_one(), exact([[2]]))
        self.assertFalse(report.passed)
        self.assertFalse(report.notes["skew"])
        self.assertEqual(report.violations[0].tag, "Q11")
        self.assertEqual(report.violations[0].residual, (-4,))

    def test_q_equation_zero_algebra(self):
        report = check_q_equation(zero_quadri(2), skew2())
        self.assertTrue(report.passed)
        self.assertTrue(report.notes["skew"])
        self.assertTrue(check_q_tensors(zero_quadri(2), exact([[1, 2], [3, 4]])).passed)

    def test_q_tensors_shape(self):
        tensors = q_tensors(se_one(), exact([[1]]))
        self.assertEqual(sorted(tensors), ["Q11", "Q12", "Q21", "Q22", "Q31", "Q32"])
        self.assertRaises(ShapeError, q_tensors, se_one(), skew2())

    def test_coboundary_conditions_agree(self):
        for q in _small_algebras():
            for c in (0, 1, -1):
                r = skew2(c)
                coboundary = check_coboundary_coalgebra(q, r)
                coalgebra = check_quadri_coalgebra(coboundary_comults(q, r))
                self.assertEqual(coboundary.passed, coalgebra.passed)

    def test_verdicts_agree(self):
        for q in _small_algebras():
            for c in (0, 1, -1, 2):
                verdicts = q_equation_verdicts(q, skew2(c))
                self.assertEqual(len(set(verdicts.values())), 1, verdicts)


class TestDoubles(TestCase):
    def test_drinfeld_dim1(self):
        algebra, coalgebra, report = drinfeld_double(zero_bialgebra(se_one()))
        self.assertTrue(report.passed, report.to_text())
        self.assertEqual(algebra.dim, 2)
        self.assertEqual(coalgebra.dim, 2)
        self.assertEqual(algebra, semidirect_sum(se_one(), dual_regular_bimodule(se_one())))

    def test_drinfeld_invalid(self):
        qb = QuadriBialgebra(quadri1(nw=1, se=1), QuadriCoalgebra.zero(1))
        with self.assertRaises(PreconditionError) as ctx:
            drinfeld_double(qb)
        self.assertFalse(ctx.exception.report.passed)
        self.assertRaises(PreconditionError, dual_bialgebra, qb)

    def test_dual_bialgebra(self):
        dual = dual_bialgebra(zero_bialgebra(se_one()))
        self.assertEqual(dual.algebra, zero_quadri(1))
        self.assertEqual(dual.coalgebra.comult("beta_t")[0, 0, 0], 1)

    def test_inclusions(self):
        i1, i2 = inclusions(2)
        self.assertEqual(i1.shape, (4, 2))
        self.assertEqual(i1[1, 1], 1)
        self.assertEqual(i2[3, 1], 1)
        self.assertEqual(sum(i2[:2].flat), 0)

    def test_double_from_r_matches(self):
        q = se_one()
        r = zeros(1, 1)
        drinfeld, _, _ = drinfeld_double(QuadriBialgebra(q, coboundary_comults(q, r)))
        self.assertEqual(double_from_r(q, r), drinfeld)

    def test_double_from_r_catalog(self):
        for q in _small_algebras():
            for r in search_q_solutions(q, coefficient_set=(-1, 0, 1)):
                qb = QuadriBialgebra(q, coboundary_comults(q, r))
                drinfeld, _, report = drinfeld_double(qb)
                self.assertTrue(report.passed)
                self.assertEqual(double_from_r(q, r), drinfeld)

    def test_double_from_r_preconditions(self):
        self.assertRaises(PreconditionError, double_from_r, se_one(), exact([[1]]))
        self.assertRaises(PreconditionError, double_from_r, zero_quadri(2), exact([[0, 1], [0, 0]]))

    def test_zero_double(self):
        algebra, _, report = drinfeld_double(zero_bialgebra(zero_quadri(2)))
        self.assertTrue(report.passed)
        self.assertEqual(algebra, zero_quadri(4))


class TestGraphs(TestCase):
    def test_zero_map(self):
        report = graph_lagrangian_check(se_one(), zeros(1, 1))
        self.assertTrue(report.passed)
        self.assertEqual(report.notes["lagrangian"], True)
        self.assertEqual(report.notes["closed"], True)
        self.assertEqual(report.notes["q_equation"], True)

    def test_not_skew(self):
        report = graph_lagrangian_check(se_one(), exact([[1]]))
        self.assertTrue(report.passed)
        self.assertFalse(report.notes["lagrangian"])
        self.assertFalse(report.notes["skew"])

    def test_zero_algebra(self):
        report = graph_lagrangian_check(zero_quadri(2), skew2(3))
        self.assertTrue(report.passed)
        self.assertTrue(report.notes["lagrangian"])
        self.assertTrue(report.notes["closed"])


class TestMorphisms(TestCase):
    def test_zero_tensor(self):
        report = t_r_morphism_checks(se_one(), zeros(1, 1))
        self.assertTrue(report.passed, report.to_text())

    def test_zero_algebra(self):
        report = t_r_morphism_checks(zero_quadri(2), exact([[1, 1], [0, 1]]))
        self.assertTrue(report.passed)
        self.assertEqual(report.notes["tilde T_r"], "skipped: r is not skew")

    def test_not_a_solution(self):
        self.assertRaises(PreconditionError, t_r_morphism_checks, se_one(), exact([[1]]))

    def test_equal(self):
        self.assertTrue(equal(coboundary_comults(zero_quadri(2), skew2()).comult("alpha"), zeros(2, 2, 2)))


class TestLeftUnitSolution(TestCase):
    """A nonzero algebra with a nondegenerate skew solution."""

    def setUp(self):
        self.q = left_unit2()
        self.r = left_unit2_r()
        self.qb = QuadriBialgebra(self.q, coboundary_comults(self.q, self.r))

    def test_solution(self):
        self.assertTrue(check_quadri(self.q).passed)
        self.assertTrue(check_q_tensors(self.q, self.r).passed)
        self.assertTrue(check_q_equation(self.q, self.r).notes["skew"])
        self.assertTrue(all(q_equation_verdicts(self.q, self.r).values()))
        self.assertTrue(check_omega_2cocycle(self.q, inverse(self.r)).passed)

    def test_not_a_solution_without_se(self):
        q = QuadriAlgebra(self.q.nw, zeros(2, 2, 2), zeros(2, 2, 2), zeros(2, 2, 2))
        self.assertTrue(check_quadri(q).passed)
        report = check_q_equation(q, self.r)
        self.assertFalse(report.passed)
        self.assertEqual([(v.tag, v.index, v.residual) for v in report.violations],
                         [("Q11", (1, 0, 1), (-1,)), ("Q12", (0, 1, 1), (-1,))])
        self.assertFalse(any(q_equation_verdicts(q, self.r).values()))

    def test_coboundary_bialgebra(self):
        self.assertNotEqual(self.qb.coalgebra, QuadriCoalgebra.zero(2))
        self.assertTrue(check_coboundary_coalgebra(self.q, self.r).passed)
        self.assertTrue(check_bialgebra(self.qb).passed)

    def test_double(self):
        for c in (1, -1, 2):
            r = left_unit2_r(c)
            qb = QuadriBialgebra(self.q, coboundary_comults(self.q, r))
            drinfeld, _, report = drinfeld_double(qb)
            self.assertTrue(report.passed, report.to_text())
            self.assertEqual(double_from_r(self.q, r), drinfeld)
            self.assertNotEqual(drinfeld, semidirect_sum(self.q, dual_regular_bimodule(self.q)))

    def test_graph(self):
        report = graph_lagrangian_check(self.q, self.r)
        self.assertTrue(report.passed, report.to_text())
        self.assertTrue(report.notes["lagrangian"])
        self.assertTrue(report.notes["closed"])
        self.assertTrue(report.notes["q_equation"])

    def test_morphisms(self):
        report = t_r_morphism_checks(self.q, self.r)
        self.assertTrue(report.passed, report.to_text())
        self.assertNotIn("tilde T_r", report.notes)
