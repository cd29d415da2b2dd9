"""Quadri-algebras: axioms, projections, bimodules, sums, forms and Manin triples."""
import logging

import numpy as np

from .constant import QUADRI_AXIOMS, QUADRI_OPS, QUADRI_SUMS
from .dendriform import (
    Bimodule,
    DDBimodule,
    DDMatchedPairData,
    DendriformAlgebra,
    MatchedPairData,
    OpAlgebra,
    bowtie_ops,
    check_axioms,
    check_bimodule_axioms,
    check_dd_2cocycle,
    check_dd_bimodule,
    check_dendriform,
    check_form_symmetry,
    isotropy,
    subspace_closure,
)
from .exactlin import det, exact, hyperbolic_form, inverse, require_square
from .report import PreconditionError, Report, ShapeError

_LOGGER = logging.getLogger("pyquadri")


class QuadriAlgebra(OpAlgebra):
    """Four operations nw, ne, sw, se (the arrows of a quadri-algebra).

    Derived operations succ = ne + se, prec = nw + sw, vee = sw + se,
    wedge = nw + ne and star (all four) come from `op()`.
    """

    SPECIES = "quadri"
    OPS = QUADRI_OPS
    SUMS = QUADRI_SUMS

    def __init__(self, nw, ne, sw, se):
        super().__init__({"nw": nw, "ne": ne, "sw": sw, "se": se})

    @property
    def nw(self):
        return self._ops["nw"]

    @property
    def ne(self):
        return self._ops["ne"]

    @property
    def sw(self):
        return self._ops["sw"]

    @property
    def se(self):
        return self._ops["se"]


class DerivedOps(object):
    def __init__(self, q):
        self._cubes = {name: q.op(name) for name in ("succ", "prec", "vee", "wedge", "star")}

    @property
    def succ(self):
        return self._cubes["succ"]

    @property
    def prec(self):
        return self._cubes["prec"]

    @property
    def vee(self):
        return self._cubes["vee"]

    @property
    def wedge(self):
        return self._cubes["wedge"]

    @property
    def star(self):
        return self._cubes["star"]


class QuadriBimodule(Bimodule):
    SPECIES = "quadri"
    OPS = QUADRI_OPS
    SUMS = QUADRI_SUMS

    def __init__(self, l_nw, r_nw, l_ne, r_ne, l_sw, r_sw, l_se, r_se):
        super().__init__({
            "l_nw": l_nw, "r_nw": r_nw, "l_ne": l_ne, "r_ne": r_ne,
            "l_sw": l_sw, "r_sw": r_sw, "l_se": l_se, "r_se": r_se,
        })


class QuadriMatchedPairData(MatchedPairData):
    pass


def check_quadri(q):
    return check_axioms("quadri", q, QUADRI_AXIOMS)


def derived_ops(q):
    return DerivedOps(q)


def project_dd(q, which):
    if which == "horizontal":
        return DendriformAlgebra(q.op("prec"), q.op("succ"))
    if which == "vertical":
        return DendriformAlgebra(q.op("wedge"), q.op("vee"))
    raise ShapeError("unknown projection {!r}".format(which))


def regular_bimodule(q):
    return QuadriBimodule.from_maps({"{}_{}".format(side, name): (q.left if side == "l" else q.right)(name)
                                     for name in QUADRI_OPS for side in ("l", "r")})


def projection_bimodule(q, which):
    """Regular bimodule of a projection built from single arrows."""
    if which == "horizontal":
        return DDBimodule(q.left("sw"), q.right("nw"), q.left("se"), q.right("ne"))
    if which == "vertical":
        return DDBimodule(q.left("ne"), q.right("nw"), q.left("se"), q.right("sw"))
    raise ShapeError("unknown projection {!r}".format(which))


def _dual(family):
    return family.transpose(0, 2, 1)


def projection_dual_bimodule(q, which):
    """Bimodule of a projection on A* built from the duals of single arrows."""
    if which == "horizontal":
        return DDBimodule(-_dual(q.right("ne")), _dual(q.left("vee")), _dual(q.right("wedge")), -_dual(q.left("sw")))
    if which == "vertical":
        return DDBimodule(-_dual(q.right("sw")), _dual(q.left("succ")), _dual(q.right("prec")), -_dual(q.left("ne")))
    raise ShapeError("unknown projection {!r}".format(which))


def check_quadri_bimodule(q, m):
    return check_bimodule_axioms("quadri-bimodule", q, m, QUADRI_AXIOMS)


def dual_quadri_bimodule(m):
    return QuadriBimodule(
        _dual(m.r("se")), _dual(m.l("star")),
        -_dual(m.r("vee")), -_dual(m.l("prec")),
        -_dual(m.r("succ")), -_dual(m.l("wedge")),
        _dual(m.r("star")), _dual(m.l("nw")),
    )


def dual_regular_bimodule(q):
    return dual_quadri_bimodule(regular_bimodule(q))


def build_quadri_bowtie(pair):
    """Quadri-algebra on A + B; the report is its axiom check, tagged by sector."""
    algebra = QuadriAlgebra.from_ops(bowtie_ops(pair))
    report = check_axioms("quadri-bowtie", algebra, QUADRI_AXIOMS, split=pair.a.dim)
    return algebra, report


def semidirect_sum(q, m):
    bimodule = check_quadri_bimodule(q, m)
    if not bimodule.passed:
        _LOGGER.warning("semidirect: bimodule check failed with {} violations".format(len(bimodule.violations)))
        raise PreconditionError("bimodule is not valid", bimodule)
    pair = QuadriMatchedPairData(q, QuadriAlgebra.zero(m.module_dim), m,
                                 QuadriBimodule.zero(m.module_dim, q.dim))
    algebra, _ = build_quadri_bowtie(pair)
    return algebra


def induced_dd_matched_pair(pair):
    def summed(m):
        return DDBimodule(m.l("wedge"), m.r("wedge"), m.l("vee"), m.r("vee"))

    return DDMatchedPairData(project_dd(pair.a, "vertical"), project_dd(pair.b, "vertical"),
                             summed(pair.on_b), summed(pair.on_a))


def _invariance_sides(q, gram):
    """Both sides of the four invariance identities, keyed by arrow."""
    sides = {}
    star = q.op("star")
    rhs = {
        "nw": np.tensordot(gram, star, ([1], [2])),
        "ne": -np.tensordot(gram, q.op("vee"), ([1], [2])).transpose(2, 0, 1),
        "sw": -np.tensordot(gram, q.op("wedge"), ([1], [2])),
        "se": np.tensordot(gram, star, ([1], [2])).transpose(2, 0, 1),
    }
    for name in QUADRI_OPS:
        sides[name] = (np.tensordot(q.op(name), gram, ([2], [0])), rhs[name])
    return sides


_INVARIANCE_TAGS = {
    "nw": "B(x nw y, z) = B(x, y star z)",
    "ne": "B(x ne y, z) = -B(y, z vee x)",
    "sw": "B(x sw y, z) = -B(x, y wedge z)",
    "se": "B(x se y, z) = B(y, z star x)",
}


def check_invariant_form(q, gram):
    gram = require_square(exact(gram), q.dim, "form")
    report = check_form_symmetry(Report("invariant-form"), gram)
    for name, (lhs, rhs) in _invariance_sides(q, gram).items():
        report.add_residuals(_INVARIANCE_TAGS[name], lhs - rhs, 3)
    return report.log()


def quadri_from_2cocycle(d, gram):
    """Recover the four arrows from a nondegenerate symmetric 2-cocycle.

    Each x o y is the unique vector whose pairing with every basis z matches
    the right side of the matching invariance identity.
    """
    gram = require_square(exact(gram), d.dim, "form")
    symmetry = check_form_symmetry(Report("form"), gram)
    if not symmetry.passed:
        _LOGGER.warning("2-cocycle: form is not symmetric")
        raise PreconditionError("form is not symmetric", symmetry)
    if det(gram) == 0:
        _LOGGER.warning("2-cocycle: form is degenerate")
        raise PreconditionError("form is degenerate")
    cocycle = check_dd_2cocycle(d, gram)
    if not cocycle.passed:
        _LOGGER.warning("2-cocycle: form fails the cocycle identity")
        raise PreconditionError("form is not a 2-cocycle", cocycle)
    ginv = inverse(gram)
    star = d.star
    rhs = {
        "nw": np.tensordot(gram, star, ([1], [2])),
        "ne": -np.tensordot(gram, d.succ, ([1], [2])).transpose(2, 0, 1),
        "sw": -np.tensordot(gram, d.prec, ([1], [2])),
        "se": np.tensordot(gram, star, ([1], [2])).transpose(2, 0, 1),
    }
    return QuadriAlgebra.from_ops({name: np.tensordot(rhs[name], ginv, ([2], [0])) for name in QUADRI_OPS})


def check_omega_2cocycle(q, omega):
    """omega(x, y wedge z) = -omega(x sw y, z) + omega(z succ x, y)
    and omega(x, y vee z) = omega(x prec y, z) - omega(z ne x, y).

    Also checks that the symmetrization omega + omega^T is a 2-cocycle of
    the vertical projection.
    """
    omega = require_square(exact(omega), q.dim, "form")

    def on_product(name):
        return np.tensordot(omega, q.op(name), ([1], [2]))

    def of_product(name):
        return np.tensordot(q.op(name), omega, ([2], [0]))

    report = Report("omega-2-cocycle")
    wedge = on_product("wedge") + of_product("sw") - of_product("succ").transpose(1, 2, 0)
    report.add_residuals("w(x, y wedge z) = -w(x sw y, z) + w(z succ x, y)", wedge, 3)
    vee = on_product("vee") - of_product("prec") + of_product("ne").transpose(1, 2, 0)
    report.add_residuals("w(x, y vee z) = w(x prec y, z) - w(z ne x, y)", vee, 3)
    report.merge(check_dd_2cocycle(project_dd(q, "vertical"), omega + omega.T), prefix="symmetrized")
    return report.log()


def check_manin_quadri(q, n):
    if q.dim != 2 * n:
        raise ShapeError("manin: algebra of dimension {} does not split as {} + {}".format(q.dim, n, n))
    gram = hyperbolic_form(n)
    report = subspace_closure(Report("quadri-manin"), q, n)
    isotropy(report, gram, n)
    report.merge(check_invariant_form(q, gram), prefix="invariance")
    return report.log()


def projection_equivalence(q):
    """The three equivalent descriptions of a quadri-algebra, as verdicts.

    Returns (quadri, vertical, horizontal) where the last two require the
    projection to be dendriform and its arrow bimodule to be valid.
    """
    verdicts = [check_quadri(q).passed]
    for which in ("vertical", "horizontal"):
        d = project_dd(q, which)
        verdicts.append(check_dendriform(d).passed and
                        check_dd_bimodule(d, projection_bimodule(q, which)).passed)
    return tuple(verdicts)
