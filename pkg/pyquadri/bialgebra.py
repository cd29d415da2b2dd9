"""Quadri-coalgebras, quadri-bialgebras, coboundary structures and doubles.

A comultiplication is stored per basis element: ``comult[s]`` is the
n x n coefficient matrix of delta(e_s). The quadri-algebra on A* has the
index-transposed cubes, so the two views convert exactly.
"""
import logging

import numpy as np

from .constant import COMULT_OF, COMULTS, QUADRI_AXIOMS, QUADRI_OPS, QUADRI_SUMS
from .dendriform import check_dd_o_operator, check_homomorphism, check_manin_dd, o_operator_residuals
from .exactlin import (
    apply_out,
    block,
    canonical_tensor,
    exact,
    hyperbolic_form,
    identity,
    is_isotropic,
    is_skew,
    leg_embed,
    leg_product,
    require_square,
    transform_product,
    zeros,
)
from .quadri import (
    QuadriAlgebra,
    QuadriMatchedPairData,
    build_quadri_bowtie,
    check_manin_quadri,
    check_quadri,
    dual_regular_bimodule,
    project_dd,
    projection_dual_bimodule,
    semidirect_sum,
)
from .report import PreconditionError, Report, ShapeError, axiom_tag
from .util import to_scalar

_LOGGER = logging.getLogger("pyquadri")


class QuadriCoalgebra(object):
    """Four comultiplications alpha, beta, alpha_t, beta_t, dual to nw, ne, sw, se."""

    def __init__(self, alpha, beta, alpha_t, beta_t):
        self._comults = {}
        shape = None
        for name, family in zip(COMULTS, (alpha, beta, alpha_t, beta_t)):
            family = exact(family)
            if family.ndim != 3 or len(set(family.shape)) != 1:
                raise ShapeError("coalgebra: {} has shape {}".format(name, family.shape))
            if shape is not None and family.shape != shape:
                raise ShapeError("coalgebra: {} has shape {}, expected {}".format(name, family.shape, shape))
            shape = family.shape
            self._comults[name] = family
        self._dim = shape[0]

    @classmethod
    def zero(cls, dim):
        return cls(*[zeros(dim, dim, dim) for _ in COMULTS])

    @classmethod
    def from_comults(cls, comults):
        return cls(*[comults[name] for name in COMULTS])

    @property
    def dim(self):
        return self._dim

    @property
    def comults(self):
        return dict(self._comults)

    def comult(self, name):
        return self._comults[name]

    def for_op(self, op):
        """Sum of the comultiplications dual to the arrows making up `op`."""
        total = zeros(self._dim, self._dim, self._dim)
        for part in QUADRI_SUMS[op]:
            total = total + self._comults[COMULT_OF[part]]
        return total

    def scaled(self, c):
        c = to_scalar(c)
        return QuadriCoalgebra(*[c * self._comults[name] for name in COMULTS])

    def __eq__(self, other):
        if not isinstance(other, QuadriCoalgebra):
            return NotImplemented
        return self._dim == other._dim and all(
            np.array_equal(self._comults[n], other._comults[n]) for n in COMULTS)

    def __repr__(self):
        return "QuadriCoalgebra(dim={})".format(self._dim)


class QuadriBialgebra(object):
    def __init__(self, algebra, coalgebra):
        if algebra.dim != coalgebra.dim:
            raise ShapeError("bialgebra: algebra has dimension {}, coalgebra {}".format(algebra.dim, coalgebra.dim))
        self._algebra = algebra
        self._coalgebra = coalgebra

    @property
    def algebra(self):
        return self._algebra

    @property
    def coalgebra(self):
        return self._coalgebra

    @property
    def dim(self):
        return self._algebra.dim

    def negated(self):
        """Same products, comultiplications negated."""
        return QuadriBialgebra(self._algebra, self._coalgebra.scaled(-1))

    def __eq__(self, other):
        if not isinstance(other, QuadriBialgebra):
            return NotImplemented
        return self._algebra == other._algebra and self._coalgebra == other._coalgebra

    def __repr__(self):
        return "QuadriBialgebra(dim={})".format(self.dim)


def dual_quadri_of_coalgebra(c):
    return QuadriAlgebra.from_ops({op: c.comult(COMULT_OF[op]).transpose(1, 2, 0) for op in QUADRI_OPS})


def coalgebra_of_dual(q):
    return QuadriCoalgebra.from_comults({COMULT_OF[op]: q.op(op).transpose(2, 0, 1) for op in QUADRI_OPS})


def check_quadri_coalgebra(c):
    """(D_o1 x 1) D_o2 = (1 x D_o4) D_o3 for every axiom, reported at (i, j, k) over s.

    Locations and tags coincide with `check_quadri` of the dual algebra.
    """
    report = Report("quadri-coalgebra")
    for axiom in QUADRI_AXIOMS:
        o1, o2, o3, o4 = axiom
        lhs = np.tensordot(c.for_op(o2), c.for_op(o1), ([1], [0])).transpose(0, 2, 3, 1)
        rhs = np.tensordot(c.for_op(o3), c.for_op(o4), ([2], [0]))
        report.add_residuals(axiom_tag(axiom), (lhs - rhs).transpose(1, 2, 3, 0), 3)
    return report.log()


class _Terms(object):
    """Vectorized pieces of the compatibility equations, all shaped (x, y, a, b)."""

    def __init__(self, q, c):
        self._q = q
        self._c = c

    def d(self, *names):
        total = zeros(self._c.dim, self._c.dim, self._c.dim)
        for name in names:
            total = total + self._c.comult(name)
        return total

    def t(self, *names):
        return self.d(*names).transpose(0, 2, 1)

    def of(self, op, family):
        """delta(x op y)."""
        return np.tensordot(self._q.op(op), family, ([2], [0]))

    def first(self, mats, m, family, t):
        """(M(m) x 1) delta(t) with m, t the two distinct arguments x, y."""
        out = np.tensordot(mats, family, ([2], [1]))
        return out.transpose(0, 2, 1, 3) if m == "x" else out.transpose(2, 0, 1, 3)

    def second(self, mats, m, family, t):
        """(1 x M(m)) delta(t)."""
        out = np.tensordot(family, mats, ([2], [2]))
        return out.transpose(0, 2, 1, 3) if t == "x" else out.transpose(2, 0, 1, 3)

    def lm(self, op):
        return self._q.left(op)

    def rm(self, op):
        return self._q.right(op)


def _compat_residuals(q, c):
    e = _Terms(q, c)
    L, R, D, T = e.lm, e.rm, e.d, e.t
    a, b, at, bt = COMULTS
    every = (a, at, b, bt)
    return [
        ("alpha_t(x star y) = (R_wedge(y) x 1) alpha_t(x) + (1 x L_succ(x)) alpha_t(y)",
         e.of("star", D(at)) - e.first(R("wedge"), "y", D(at), "x") - e.second(L("succ"), "x", D(at), "y")),
        ("beta(x star y) = (R_prec(y) x 1) beta(x) + (1 x L_vee(x)) beta(y)",
         e.of("star", D(b)) - e.first(R("prec"), "y", D(b), "x") - e.second(L("vee"), "x", D(b), "y")),
        ("(alpha + alpha_t)(x wedge y) = (R_wedge(y) x 1)(alpha + alpha_t)(x) + (1 x L_ne(x)) alpha_t(y)",
         e.of("wedge", D(a, at)) - e.first(R("wedge"), "y", D(a, at), "x") - e.second(L("ne"), "x", D(at), "y")),
        ("(beta + beta_t)(x wedge y) = (R_nw(y) x 1)(beta + beta_t)(x) + (1 x L_wedge(x)) beta_t(y)",
         e.of("wedge", D(b, bt)) - e.first(R("nw"), "y", D(b, bt), "x") - e.second(L("wedge"), "x", D(bt), "y")),
        ("(beta + beta_t)(x vee y) = (1 x L_vee(x))(beta + beta_t)(y) + (R_sw(y) x 1) beta(x)",
         e.of("vee", D(b, bt)) - e.second(L("vee"), "x", D(b, bt), "y") - e.first(R("sw"), "y", D(b), "x")),
        ("(alpha + alpha_t)(x vee y) = (1 x L_se(x))(alpha + alpha_t)(y) + (R_vee(y) x 1) alpha(x)",
         e.of("vee", D(a, at)) - e.second(L("se"), "x", D(a, at), "y") - e.first(R("vee"), "y", D(a), "x")),
        ("(alpha + beta)(x succ y) = (1 x L_se(x))(alpha + beta)(y) + (R_succ(y) x 1) alpha(x)",
         e.of("succ", D(a, b)) - e.second(L("se"), "x", D(a, b), "y") - e.first(R("succ"), "y", D(a), "x")),
        ("(alpha_t + beta_t)(x succ y) = (1 x L_succ(x))(alpha_t + beta_t)(y) + (R_ne(y) x 1) alpha_t(x)",
         e.of("succ", D(at, bt)) - e.second(L("succ"), "x", D(at, bt), "y") - e.first(R("ne"), "y", D(at), "x")),
        ("(alpha + beta)(x prec y) = (R_prec(y) x 1)(alpha + beta)(x) + (1 x L_sw(x)) beta(y)",
         e.of("prec", D(a, b)) - e.first(R("prec"), "y", D(a, b), "x") - e.second(L("sw"), "x", D(b), "y")),
        ("(alpha_t + beta_t)(x prec y) = (R_nw(y) x 1)(alpha_t + beta_t)(x) + (1 x L_prec(x)) beta_t(y)",
         e.of("prec", D(at, bt)) - e.first(R("nw"), "y", D(at, bt), "x") - e.second(L("prec"), "x", D(bt), "y")),
        ("(1 x L_succ(y) - R_wedge(y) x 1) t.beta(x) = (1 x R_prec(x) - L_vee(x) x 1) alpha_t(y)",
         e.second(L("succ"), "y", T(b), "x") - e.first(R("wedge"), "y", T(b), "x")
         - e.second(R("prec"), "x", D(at), "y") + e.first(L("vee"), "x", D(at), "y")),
        ("(1 x R_nw(x) - L_vee(x) x 1)(alpha + alpha_t)(y) = (1 x L_ne(y)) t.beta(x) - (R_vee(y) x 1) t.beta_t(x)",
         e.second(R("nw"), "x", D(a, at), "y") - e.first(L("vee"), "x", D(a, at), "y")
         - e.second(L("ne"), "y", T(b), "x") + e.first(R("vee"), "y", T(bt), "x")),
        ("(R_wedge(y) x 1 - 1 x L_se(y)) t.(beta + beta_t)(x) = (L_wedge(x) x 1) alpha(y) - (1 x R_sw(x)) alpha_t(y)",
         e.first(R("wedge"), "y", T(b, bt), "x") - e.second(L("se"), "y", T(b, bt), "x")
         - e.first(L("wedge"), "x", D(a), "y") + e.second(R("sw"), "x", D(at), "y")),
        ("(1 x L_succ(x) - R_nw(x) x 1) t.(alpha + beta)(y) = (1 x R_succ(y)) beta_t(x) - (L_sw(y) x 1) alpha_t(x)",
         e.second(L("succ"), "x", T(a, b), "y") - e.first(R("nw"), "x", T(a, b), "y")
         - e.second(R("succ"), "y", D(bt), "x") + e.first(L("sw"), "y", D(at), "x")),
        ("(1 x L_se(x) - R_prec(x) x 1) t.(alpha_t + beta_t)(y) = (1 x R_ne(y)) beta(x) - (L_prec(y) x 1) alpha(x)",
         e.second(L("se"), "x", T(at, bt), "y") - e.first(R("prec"), "x", T(at, bt), "y")
         - e.second(R("ne"), "y", D(b), "x") + e.first(L("prec"), "y", D(a), "x")),
        ("(alpha + alpha_t + beta + beta_t)(x sw y) = (R_sw(y) x 1)(alpha + beta)(x) + (1 x L_sw(x))(beta + beta_t)(y)",
         e.of("sw", D(*every)) - e.first(R("sw"), "y", D(a, b), "x") - e.second(L("sw"), "x", D(b, bt), "y")),
        ("(alpha + alpha_t + beta + beta_t)(x ne y) = (R_ne(y) x 1)(alpha + alpha_t)(x) + (1 x L_ne(x))(alpha_t + beta_t)(y)",
         e.of("ne", D(*every)) - e.first(R("ne"), "y", D(a, at), "x") - e.second(L("ne"), "x", D(at, bt), "y")),
        ("(L_sw(y) x 1)(alpha + alpha_t)(x) + (1 x L_ne(x)) t.(alpha + beta)(y)"
         " = (R_sw(x) x 1) t.(alpha_t + beta_t)(y) + (1 x R_ne(y))(beta + beta_t)(x)",
         e.first(L("sw"), "y", D(a, at), "x") + e.second(L("ne"), "x", T(a, b), "y")
         - e.first(R("sw"), "x", T(at, bt), "y") - e.second(R("ne"), "y", D(b, bt), "x")),
    ]


def check_bialgebra_compat(qb):
    """The eighteen compatibility identities between products and coproducts.

    Each is an equality in A (x) A checked on every basis pair (x, y);
    `t.` marks the flip of the two tensor legs.
    """
    report = Report("bialgebra-compat")
    for tag, residual in _compat_residuals(qb.algebra, qb.coalgebra):
        report.add_residuals(tag, residual, 2)
    return report.log()


def check_bialgebra(qb):
    report = Report("bialgebra")
    report.merge(check_quadri(qb.algebra), prefix="algebra")
    report.merge(check_quadri_coalgebra(qb.coalgebra), prefix="coalgebra")
    report.merge(check_bialgebra_compat(qb), prefix="compat")
    return report.log()


# Coboundary structures.


def _r_left(r, family):
    """r L(x)^T for every x, i.e. (1 x L(x)) r."""
    return np.tensordot(r, family, ([1], [2])).transpose(1, 0, 2)


def _r_right(family, r):
    """R(x) r for every x, i.e. (R(x) x 1) r."""
    return np.tensordot(family, r, ([2], [0]))


def _tensor(q, r):
    return require_square(exact(r), q.dim, "tensor")


def coboundary_comults(q, r):
    r = _tensor(q, r)
    return QuadriCoalgebra(
        -_r_left(r, q.left("se")) + _r_right(q.right("star"), r),
        _r_left(r, q.left("vee")) - _r_right(q.right("prec"), r),
        _r_left(r, q.left("succ")) - _r_right(q.right("wedge"), r),
        -_r_left(r, q.left("star")) + _r_right(q.right("nw"), r),
    )


def q_tensors(q, r):
    """The six three-leg tensors whose vanishing makes up the Q-equations."""
    r = _tensor(q, r)
    r12, r13, r23 = (leg_embed(r, p) for p in ("12", "13", "23"))

    def p(u, v, op):
        return leg_product(u, v, q.op(op))

    return {
        "Q11": p(r23, r12, "wedge") - p(r13, r23, "succ") + p(r12, r13, "sw"),
        "Q12": p(r23, r12, "vee") - p(r12, r13, "prec") + p(r13, r23, "ne"),
        "Q21": p(r12, r13, "wedge") - p(r23, r12, "succ") - p(r13, r23, "sw"),
        "Q22": p(r12, r13, "vee") + p(r13, r23, "prec") + p(r23, r12, "ne"),
        "Q31": p(r13, r23, "wedge") + p(r12, r13, "succ") + p(r23, r12, "sw"),
        "Q32": p(r13, r23, "vee") - p(r23, r12, "prec") - p(r12, r13, "ne"),
    }


# (left arrow, right arrow, tensor combination) of each coalgebra condition.
_COBOUNDARY_CONDITIONS = (
    ("se", "star", (("Q12", 1), ("Q31", -1))),
    ("se", "prec", (("Q12", 1),)),
    ("vee", "prec", (("Q31", 1),)),
    ("se", "wedge", (("Q21", 1),)),
    ("se", "nw", (("Q21", 1), ("Q32", 1))),
    ("vee", "nw", (("Q32", 1),)),
    ("succ", "wedge", (("Q22", 1),)),
    ("succ", "nw", (("Q11", 1),)),
    ("star", "nw", (("Q31", 1), ("Q32", 1))),
)


def check_coboundary_coalgebra(q, r):
    """(1 x 1 x L(x) - R(x) x 1 x 1) applied to Q-tensor combinations, on every basis x."""
    tensors = q_tensors(q, r)
    report = Report("coboundary-coalgebra")
    for left, right, combination in _COBOUNDARY_CONDITIONS:
        t = sum(sign * tensors[name] for name, sign in combination)
        third = np.tensordot(t, q.left(left), ([2], [2])).transpose(2, 0, 1, 3)
        first = np.tensordot(q.right(right), t, ([2], [0]))
        label = " + ".join(name if sign > 0 else "-" + name for name, sign in combination)
        report.add_residuals("(1 x 1 x L_{}(x) - R_{}(x) x 1 x 1)({})".format(left, right, label),
                             third - first, 1)
    return report.log()


def check_q_equation(q, r):
    r = _tensor(q, r)
    tensors = q_tensors(q, r)
    report = Report("q-equation")
    for name in ("Q11", "Q12"):
        report.add_residuals(name, tensors[name], 3)
    report.note("skew", is_skew(r))
    return report.log()


def check_q_tensors(q, r):
    """All six Q-tensors vanish."""
    report = Report("q-tensors")
    for name, t in q_tensors(q, r).items():
        report.add_residuals(name, t, 3)
    return report.log()


def q_equation_verdicts(q, r):
    """Five conditions that agree for skew r on a valid quadri-algebra."""
    r = _tensor(q, r)
    tensors = q_tensors(q, r)

    def vanish(*names):
        return all(not any(v != 0 for v in tensors[name].flat) for name in names)

    return {
        "Q1": vanish("Q11", "Q12"),
        "Q2": vanish("Q21", "Q22"),
        "Q3": vanish("Q31", "Q32"),
        "quadri O-operator": o_operator_residuals("quadri-o-operator", q, dual_regular_bimodule(q), r).passed,
        "dendriform O-operator": check_dd_o_operator(project_dd(q, "vertical"),
                                                     projection_dual_bimodule(q, "vertical"), r).passed,
    }


# Doubles.


def _require_valid(qb):
    validity = check_bialgebra(qb)
    if not validity.passed:
        _LOGGER.warning("double: input bialgebra is not valid")
        raise PreconditionError("not a quadri-bialgebra", validity)


def double_algebra(qb):
    """Quadri-algebra on A + A* from A, the dual of the coalgebra and both dual regular actions."""
    a = qb.algebra
    astar = dual_quadri_of_coalgebra(qb.coalgebra)
    pair = QuadriMatchedPairData(a, astar, dual_regular_bimodule(a), dual_regular_bimodule(astar))
    algebra, _ = build_quadri_bowtie(pair)
    return algebra


def dual_bialgebra(qb, validate=True):
    if validate:
        _require_valid(qb)
    return QuadriBialgebra(dual_quadri_of_coalgebra(qb.coalgebra), coalgebra_of_dual(qb.algebra))


def inclusions(n):
    """i1: A -> A + A* and i2: A* -> A + A*."""
    zero = zeros(n, n)
    return np.vstack([identity(n), zero]), np.vstack([zero, identity(n)])


def double_certificates(qb, algebra, coalgebra):
    """Named certifying checks of a double, each a zero-argument callable."""
    n = qb.dim
    i1, i2 = inclusions(n)
    double = QuadriBialgebra(algebra, coalgebra)
    return {
        "quadri": lambda: check_quadri(algebra),
        "coalgebra": lambda: check_quadri_coalgebra(coalgebra),
        "compat": lambda: check_bialgebra_compat(double),
        "manin": lambda: check_manin_quadri(algebra, n),
        "dd-manin": lambda: check_manin_dd(project_dd(algebra, "vertical"), n),
        "i1": lambda: check_homomorphism("quadri_bialgebra", i1, qb.negated(), double),
        "i2": lambda: check_homomorphism("quadri_bialgebra", i2, dual_bialgebra(qb, validate=False), double),
    }


def drinfeld_double(qb, certify=True):
    """The double on A + A* with the coboundary comultiplications of r = sum e_i (x) e_i*.

    Returns (algebra, coalgebra, report); the report certifies the double.
    """
    _require_valid(qb)
    algebra = double_algebra(qb)
    coalgebra = coboundary_comults(algebra, canonical_tensor(qb.dim))
    report = Report("drinfeld-double")
    if certify:
        for name, check in double_certificates(qb, algebra, coalgebra).items():
            report.merge(check(), prefix=name)
    return algebra, coalgebra, report.log()


def tilde_double(q, r):
    """Double of the coboundary bialgebra of r, with comultiplications of sum e_i* (x) e_i."""
    qb = QuadriBialgebra(q, coboundary_comults(q, r))
    algebra = double_algebra(qb)
    return algebra, coboundary_comults(algebra, canonical_tensor(q.dim).T)


def _require_solution(q, r):
    if not is_skew(r):
        _LOGGER.warning("double: r is not skew-symmetric")
        raise PreconditionError("r is not skew-symmetric")
    qeq = check_q_equation(q, r)
    if not qeq.passed:
        _LOGGER.warning("double: r does not solve the Q-equation")
        raise PreconditionError("r does not solve the Q-equation", qeq)


def double_from_r(q, r):
    """The double of the coboundary bialgebra of a skew solution r, written through T_r."""
    r = _tensor(q, r)
    _require_solution(q, r)
    n = q.dim
    dual = dual_regular_bimodule(q)
    ops = {}
    for name in QUADRI_OPS:
        c = q.op(name)
        left = dual.l(name)
        right = dual.r(name)
        cube = zeros(2 * n, 2 * n, 2 * n)
        cube[:n, :n, :n] = c
        cube[n:, n:, n:] = (np.tensordot(r, left, ([0], [0])).transpose(0, 2, 1)
                            + np.tensordot(r, right, ([0], [0])).transpose(2, 0, 1))
        cube[n:, :n, n:] = right.transpose(2, 0, 1)
        cube[n:, :n, :n] = (np.tensordot(r, c, ([0], [0]))
                            - np.tensordot(right, r, ([1], [1])).transpose(1, 0, 2))
        cube[:n, n:, n:] = left.transpose(0, 2, 1)
        cube[:n, n:, :n] = (np.tensordot(c, r, ([1], [0])).transpose(0, 2, 1)
                            - np.tensordot(left, r, ([1], [1])))
        ops[name] = cube
    return QuadriAlgebra.from_ops(ops)


def graph_lagrangian_check(q, t):
    """Graph of T: A* -> A inside A x A*: Lagrangian subalgebra iff T is a skew solution.

    Violations are recorded only when the verdicts disagree or the
    isomorphism from the double to A x A* fails; the verdicts are notes.
    """
    t = require_square(exact(t), q.dim, "map")
    n = q.dim
    semi = semidirect_sum(q, dual_regular_bimodule(q))
    graph = np.vstack([t, identity(n)])
    lagrangian = is_isotropic(hyperbolic_form(n), graph.T)

    closure = Report("graph-closure")
    for name in QUADRI_OPS:
        prod = transform_product(semi.op(name), graph, graph)
        closure.add_residuals("graph closed under {}".format(name), prod[:, :, :n] - apply_out(prod[:, :, n:], t), 2)
    skew = is_skew(t)
    qeq = check_q_equation(q, t).passed
    report = Report("graph-lagrangian")
    report.note("lagrangian", lagrangian)
    report.note("closed", closure.passed)
    report.note("skew", skew)
    report.note("q_equation", qeq)
    if (lagrangian and closure.passed) != (skew and qeq):
        report.add("lagrangian subalgebra iff skew solution", (), [])
    if skew and qeq:
        theta = block(identity(n), t, zeros(n, n), identity(n))
        report.merge(check_homomorphism("quadri", theta, double_from_r(q, t), semi), prefix="theta")
    return report.log()


def t_r_morphism_checks(q, r):
    r = _tensor(q, r)
    tensors = check_q_tensors(q, r)
    if not tensors.passed:
        _LOGGER.warning("t_r: r does not satisfy all six Q-equations")
        raise PreconditionError("r does not satisfy the Q-equations", tensors)
    n = q.dim
    qb = QuadriBialgebra(q, coboundary_comults(q, r))
    report = Report("t_r-morphisms")
    report.merge(check_homomorphism("quadri_bialgebra", r, dual_bialgebra(qb, validate=False), qb.negated()),
                 prefix="T_r")
    if is_skew(r):
        algebra, coalgebra = tilde_double(q, r)
        tilde = np.hstack([identity(n), r])
        report.merge(check_homomorphism("quadri_bialgebra", tilde, (algebra, coalgebra), qb), prefix="tilde T_r")
    else:
        report.note("tilde T_r", "skipped: r is not skew")
    return report.log()
