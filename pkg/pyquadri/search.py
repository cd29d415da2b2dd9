"""Exhaustive and seeded enumeration of small structures and Q-equation solutions.

Candidates are tuples of structure constants over a finite coefficient set,
one per allowed position, ordered lexicographically. A space no larger than
the budget is walked completely; a larger one is sampled with a seeded
generator. Candidate checks run in blocks through a `runner`, a callable
taking zero-argument jobs and returning their results in submission order.
"""
import logging
from fractions import Fraction
from math import comb

import numpy as np

from .bialgebra import check_coboundary_coalgebra, check_q_equation, check_quadri_coalgebra, coboundary_comults, q_tensors
from .constant import DD_OPS, DEFAULT_BUDGET, DEFAULT_ENTRIES, DEFAULT_SEED, QUADRI_OPS
from .dendriform import DendriformAlgebra, check_dendriform
from .exactlin import ZERO, det, equal, exact, zeros
from .quadri import QuadriAlgebra, check_quadri
from .report import SearchError, ShapeError
from .util import parse_entries

_LOGGER = logging.getLogger("pyquadri")

BLOCK_SIZE = 256

_SPECIES = {
    "quadri": (QuadriAlgebra, QUADRI_OPS, check_quadri),
    "dendriform": (DendriformAlgebra, DD_OPS, check_dendriform),
}


def serial_runner(jobs):
    return [job() for job in jobs]


class SearchSpec(object):
    def __init__(self, kind, dim, coefficient_set=DEFAULT_ENTRIES, template=None,
                 seed=DEFAULT_SEED, budget=DEFAULT_BUDGET, max_nonzero=None):
        if kind not in _SPECIES:
            raise ShapeError("search: unknown kind {!r}".format(kind))
        if dim < 1:
            raise ShapeError("search: dimension must be at least 1")
        self._kind = kind
        self._dim = int(dim)
        self._values = parse_entries(coefficient_set)
        self._template = template
        self._seed = int(seed)
        self._budget = int(budget)
        self._max_nonzero = None if max_nonzero is None else int(max_nonzero)
        self._positions = self._build_positions()

    def _build_positions(self):
        _, ops, _ = _SPECIES[self._kind]
        n = self._dim
        if self._template is None:
            return [(op, index) for op in ops for index in np.ndindex(n, n, n)]
        unknown = [op for op in self._template if op not in ops]
        if unknown:
            raise ShapeError("search: mask names unknown operations {}".format(unknown))
        positions = []
        for op in ops:
            for index in sorted(set(tuple(i) for i in self._template.get(op, ()))):
                if len(index) != 3 or any(not 0 <= i < n for i in index):
                    raise ShapeError("search: mask position {} {} outside dimension {}".format(op, index, n))
                positions.append((op, index))
        return positions

    @property
    def kind(self):
        return self._kind

    @property
    def dim(self):
        return self._dim

    @property
    def coefficient_set(self):
        return self._values

    @property
    def template(self):
        return self._template

    @property
    def seed(self):
        return self._seed

    @property
    def budget(self):
        return self._budget

    @property
    def max_nonzero(self):
        return self._max_nonzero

    @property
    def positions(self):
        return list(self._positions)

    def total(self):
        return candidate_count(self._values, len(self._positions), self._max_nonzero)

    def build(self, candidate):
        """Algebra with the candidate's constants at the allowed positions."""
        cls, ops, _ = _SPECIES[self._kind]
        n = self._dim
        cubes = {op: zeros(n, n, n) for op in ops}
        for (op, index), value in zip(self._positions, candidate):
            cubes[op][index] = value
        return cls.from_ops(cubes)

    def report(self, candidate):
        _, _, checker = _SPECIES[self._kind]
        return checker(self.build(candidate))

    def check(self, candidate):
        return self.report(candidate).passed


class SearchResult(object):
    """What a search found and how much of its space it looked at."""

    def __init__(self, found, exhaustive, examined, total, candidates=None):
        self._found = list(found)
        self._exhaustive = exhaustive
        self._examined = examined
        self._total = total
        self._candidates = list(candidates or [])

    @property
    def found(self):
        return list(self._found)

    @property
    def candidates(self):
        """The raw constant tuples of the hits, aligned with `found`."""
        return list(self._candidates)

    @property
    def exhaustive(self):
        return self._exhaustive

    @property
    def examined(self):
        return self._examined

    @property
    def total(self):
        return self._total

    @property
    def coverage(self):
        if self._total == 0:
            return Fraction(1)
        return Fraction(self._examined, self._total)

    def __iter__(self):
        return iter(self._found)

    def __len__(self):
        return len(self._found)

    def __repr__(self):
        return "SearchResult(found={}, examined={}/{})".format(len(self._found), self._examined, self._total)


def candidate_count(values, length, max_nonzero=None):
    size = len(values)
    if max_nonzero is None or max_nonzero >= length:
        return size ** length
    if ZERO not in values:
        return 0
    return sum(comb(length, k) * (size - 1) ** k for k in range(max_nonzero + 1))


def iter_candidates(values, length, max_nonzero=None):
    """Every candidate tuple in lexicographic order, at most max_nonzero nonzero entries."""
    limit = length if max_nonzero is None else max_nonzero
    prefix = []

    def walk(nonzero):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for value in values:
            if value != 0 and nonzero == limit:
                continue
            prefix.append(value)
            yield from walk(nonzero + (value != 0))
            prefix.pop()

    return walk(0)


def _draw(rng, values, length, max_nonzero):
    if max_nonzero is None or max_nonzero >= length:
        return tuple(values[int(i)] for i in rng.integers(0, len(values), size=length))
    nonzero = [v for v in values if v != 0]
    out = [ZERO] * length
    if nonzero:
        count = int(rng.integers(0, max_nonzero + 1))
        for pos in rng.permutation(length)[:count]:
            out[int(pos)] = nonzero[int(rng.integers(0, len(nonzero)))]
    return tuple(out)


def sample_candidates(values, length, budget, seed, max_nonzero=None):
    """Distinct candidates from `budget` seeded draws, sorted."""
    rng = np.random.default_rng(seed)
    seen = set()
    for _ in range(budget):
        seen.add(_draw(rng, values, length, max_nonzero))
    return sorted(seen)


def _candidates(values, length, budget, seed, max_nonzero):
    total = candidate_count(values, length, max_nonzero)
    if total <= budget:
        return list(iter_candidates(values, length, max_nonzero)), True, total
    _LOGGER.info("search: {} candidates exceed the budget of {}, sampling with seed {}".format(total, budget, seed))
    return sample_candidates(values, length, budget, seed, max_nonzero), False, total


def _filter_blocks(candidates, accept, runner):
    jobs = []
    for start in range(0, len(candidates), BLOCK_SIZE):
        chunk = candidates[start:start + BLOCK_SIZE]
        jobs.append(lambda chunk=chunk: [c for c in chunk if accept(c)])
    hits = []
    for block in (runner or serial_runner)(jobs):
        hits.extend(block)
    return hits


def enumerate_structures(spec, runner=None, strict=False):
    """Every valid algebra in the SearchSpec candidate space, or those met by sampling.

    With `strict`, a space too large for the budget raises SearchError
    instead of being sampled.
    """
    candidates, exhaustive, total = _candidates(spec.coefficient_set, len(spec.positions), spec.budget,
                                                spec.seed, spec.max_nonzero)
    if strict and not exhaustive:
        raise SearchError("search: {} candidates exceed the budget of {}".format(total, spec.budget))
    hits = _filter_blocks(candidates, spec.check, runner)
    _LOGGER.info("search: {} {} structures valid among {} of {} candidates".format(
        len(hits), spec.kind, len(candidates), total))
    return SearchResult([spec.build(c) for c in hits], exhaustive, len(candidates), total, hits)


def tensor_positions(dim, skew=True, template=None):
    """Free entries of a tensor: the strict upper triangle when skew."""
    if template is not None:
        positions = sorted(set(tuple(i) for i in template.get(None, ())))
        for i, j in positions:
            if not (0 <= i < dim and 0 <= j < dim) or (skew and i >= j):
                raise ShapeError("search: tensor mask position {} not allowed".format((i, j)))
        return positions
    if skew:
        return [(i, j) for i in range(dim) for j in range(i + 1, dim)]
    return [(i, j) for i in range(dim) for j in range(dim)]


def build_tensor(dim, positions, candidate, skew=True):
    r = zeros(dim, dim)
    for (i, j), value in zip(positions, candidate):
        r[i, j] = value
        if skew:
            r[j, i] = -value
    return r


def _reverify(q, r):
    oracle = q_tensors_oracle(q, r)
    for name, t in q_tensors(q, r).items():
        if not equal(t, oracle[name]):
            raise SearchError("search: {} disagrees with the index expansion".format(name))
    coboundary = check_coboundary_coalgebra(q, r)
    coalgebra = check_quadri_coalgebra(coboundary_comults(q, r))
    if coboundary.passed != coalgebra.passed:
        raise SearchError("search: coboundary conditions and coalgebra axioms disagree")


def search_q_solutions(q, coefficient_set=DEFAULT_ENTRIES, budget=DEFAULT_BUDGET, require_skew=True,
                       require_nondegenerate=False, template=None, seed=DEFAULT_SEED, runner=None):
    """Tensors solving the Q-equation on q, each re-verified by the index expansion."""
    values = parse_entries(coefficient_set)
    n = q.dim
    positions = tensor_positions(n, require_skew, template)
    candidates, exhaustive, total = _candidates(values, len(positions), budget, seed, None)

    def accept(candidate):
        r = build_tensor(n, positions, candidate, require_skew)
        if require_nondegenerate and det(r) == 0:
            return False
        return check_q_equation(q, r).passed

    hits = _filter_blocks(candidates, accept, runner)
    found = []
    for candidate in hits:
        r = build_tensor(n, positions, candidate, require_skew)
        _reverify(q, r)
        found.append(r)
    _LOGGER.info("search: {} Q-equation solutions among {} of {} candidates".format(len(found), len(candidates), total))
    return SearchResult(found, exhaustive, len(candidates), total, hits)


def random_skew_tensor(dim, seed=DEFAULT_SEED, coefficient_bound=3):
    """Seeded skew matrix with entries p/q, |p| and q at most the bound."""
    if dim < 1:
        raise ShapeError("random_skew_tensor: dimension must be at least 1")
    rng = np.random.default_rng(seed)
    r = zeros(dim, dim)
    for i in range(dim):
        for j in range(i + 1, dim):
            p = int(rng.integers(-coefficient_bound, coefficient_bound + 1))
            d = int(rng.integers(1, coefficient_bound + 1))
            r[i, j] = Fraction(p, d)
            r[j, i] = -r[i, j]
    return r


def _leg_products(r, c):
    """The three leg products r12 o r13, r13 o r23, r23 o r12 by explicit index loops."""
    n = len(r)
    out12 = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    out13 = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    out23 = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if r[i][j] == 0:
                continue
            for k in range(n):
                for l in range(n):
                    coeff = r[i][j] * r[k][l]
                    if coeff == 0:
                        continue
                    for m in range(n):
                        if c[i][k][m]:
                            out12[m][j][l] += coeff * c[i][k][m]
                        if c[j][l][m]:
                            out13[i][k][m] += coeff * c[j][l][m]
                        if c[i][l][m]:
                            out23[k][m][j] += coeff * c[i][l][m]
    return {"12.13": exact(out12), "13.23": exact(out13), "23.12": exact(out23)}


def q_tensors_oracle(q, r):
    """The six Q-tensors expanded entry by entry, independent of the leg machinery."""
    rows = [[Fraction(v) for v in row] for row in exact(r)]
    cubes = {}
    for name in ("wedge", "vee", "succ", "prec", "sw", "ne"):
        cubes[name] = _leg_products(rows, exact(q.op(name)).tolist())

    def p(pair, op):
        return cubes[op][pair]

    return {
        "Q11": p("23.12", "wedge") - p("13.23", "succ") + p("12.13", "sw"),
        "Q12": p("23.12", "vee") - p("12.13", "prec") + p("13.23", "ne"),
        "Q21": p("12.13", "wedge") - p("23.12", "succ") - p("13.23", "sw"),
        "Q22": p("12.13", "vee") + p("13.23", "prec") + p("23.12", "ne"),
        "Q31": p("13.23", "wedge") + p("12.13", "succ") + p("23.12", "sw"),
        "Q32": p("13.23", "vee") - p("23.12", "prec") - p("12.13", "ne"),
    }
