from fractions import Fraction
from unittest import TestCase

from pyquadri.background import QuadriBackground
from pyquadri.bialgebra import q_tensors
from pyquadri.exactlin import equal, is_skew
from pyquadri.quadri import QuadriAlgebra
from pyquadri.report import SearchError, ShapeError
from pyquadri.search import (
    SearchSpec,
    candidate_count,
    enumerate_structures,
    iter_candidates,
    q_tensors_oracle,
    random_skew_tensor,
    sample_candidates,
    search_q_solutions,
)
from tests.quadri import PyQuadri, cube_from, quadri1, zero_quadri


class TestCandidates(TestCase):
    def test_count(self):
        self.assertEqual(candidate_count((0, 1), 4), 16)
        self.assertEqual(candidate_count((0, 1), 4, max_nonzero=1), 5)
        self.assertEqual(candidate_count((-1, 0, 1), 4, max_nonzero=1), 9)
        self.assertEqual(candidate_count((1, 2), 4, max_nonzero=1), 0)

    def test_order(self):
        self.assertEqual(list(iter_candidates((0, 1), 2)), [(0, 0), (0, 1), (1, 0), (1, 1)])
        self.assertEqual(list(iter_candidates((0, 1), 3, max_nonzero=1)),
                         [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)])

    def test_sample_is_seeded(self):
        first = sample_candidates((-1, 0, 1), 6, 20, seed=3)
        self.assertEqual(first, sample_candidates((-1, 0, 1), 6, 20, seed=3))
        self.assertEqual(first, sorted(first))
        self.assertLessEqual(len(first), 20)


class TestEnumerate(TestCase):
    def test_quadri_dim1(self):
        result = enumerate_structures(SearchSpec("quadri", 1, "0,1"))
        self.assertTrue(result.exhaustive)
        self.assertEqual(result.total, 16)
        self.assertEqual(result.coverage, 1)
        self.assertEqual(result.candidates, [(0, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)])
        self.assertEqual(result.found[1], quadri1(se=1))

    def test_quadri_dim1_signed(self):
        result = enumerate_structures(SearchSpec("quadri", 1))
        self.assertEqual(len(result), 13)
        self.assertEqual(result.examined, 81)

    def test_dendriform_dim1(self):
        result = enumerate_structures(SearchSpec("dendriform", 1, [0, 1]))
        self.assertEqual(result.candidates, [(0, 0), (0, 1), (1, 0)])
        self.assertEqual(result.found[0].species, "dendriform")

    def test_template(self):
        spec = SearchSpec("quadri", 1, template={"se": [(0, 0, 0)]})
        self.assertEqual(spec.positions, [("se", (0, 0, 0))])
        self.assertEqual(len(enumerate_structures(spec)), 3)

    def test_sampling(self):
        spec = SearchSpec("quadri", 1, budget=10, seed=4)
        result = enumerate_structures(spec)
        self.assertFalse(result.exhaustive)
        self.assertEqual(result.total, 81)
        self.assertLessEqual(result.examined, 10)
        self.assertEqual(result.coverage, Fraction(result.examined, 81))
        self.assertEqual(result.candidates, enumerate_structures(SearchSpec("quadri", 1, budget=10, seed=4)).candidates)
        self.assertRaises(SearchError, enumerate_structures, spec, strict=True)

    def test_lanes(self):
        quadri = PyQuadri()
        background = QuadriBackground(quadri, lanes=2)
        try:
            spec = SearchSpec("quadri", 1)
            threaded = enumerate_structures(spec, runner=background.run_all)
        finally:
            background.stop()
        self.assertEqual(threaded.candidates, enumerate_structures(spec).candidates)

    def test_bad_spec(self):
        self.assertRaises(ShapeError, SearchSpec, "lie", 1)
        self.assertRaises(ShapeError, SearchSpec, "quadri", 0)
        self.assertRaises(ShapeError, SearchSpec, "quadri", 1, template={"prec": [(0, 0, 0)]})
        self.assertRaises(ShapeError, SearchSpec, "quadri", 1, template={"se": [(0, 0, 1)]})
        self.assertRaises(ValueError, SearchSpec, "quadri", 1, "")


class TestQSolutions(TestCase):
    def test_zero_algebra(self):
        result = search_q_solutions(zero_quadri(2))
        self.assertTrue(result.exhaustive)
        self.assertEqual(len(result), 3)
        self.assertTrue(all(is_skew(r) for r in result))
        self.assertEqual(len(search_q_solutions(zero_quadri(2), require_nondegenerate=True)), 2)

    def test_not_skew(self):
        result = search_q_solutions(zero_quadri(1), "0,1", require_skew=False)
        self.assertEqual(result.total, 2)
        self.assertEqual(len(result), 2)

    def test_se_one(self):
        # r = [[c]] solves the Q-equation on e se e = e only for c = 0
        result = search_q_solutions(quadri1(se=1), require_skew=False)
        self.assertEqual(result.candidates, [(0,)])

    def test_bad_mask(self):
        self.assertRaises(ShapeError, search_q_solutions, zero_quadri(2), template={None: [(1, 0)]})
        self.assertRaises(ShapeError, search_q_solutions, zero_quadri(2), template={None: [(0, 2)]})

    def test_oracle(self):
        q = QuadriAlgebra(cube_from({(0, 0, 0): 1, (0, 1, 1): 2}), cube_from({(1, 0, 1): -1}),
                          cube_from({(1, 1, 0): 1}), cube_from({(0, 0, 1): 3, (1, 1, 1): 1}))
        for r in ([[1, 2], [-3, 1]], [[0, 1], [-1, 0]], random_skew_tensor(2, seed=11)):
            oracle = q_tensors_oracle(q, r)
            for name, t in q_tensors(q, r).items():
                self.assertTrue(equal(t, oracle[name]), name)


class TestRandomTensor(TestCase):
    def test_seeded(self):
        r = random_skew_tensor(3, seed=5)
        self.assertTrue(is_skew(r))
        self.assertTrue(equal(r, random_skew_tensor(3, seed=5)))
        self.assertTrue(all(abs(v.numerator) <= 3 and v.denominator <= 3 for v in r.flat))
        self.assertRaises(ShapeError, random_skew_tensor, 0)
