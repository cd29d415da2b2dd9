"""Rota-Baxter, Nijenhuis and O-operators, and the operator families built on doubles."""
import logging

from .bialgebra import check_q_equation, double_from_r
from .dendriform import (
    DDBimodule,
    DDMatchedPairData,
    DendriformAlgebra,
    OpAlgebra,
    build_dd_bowtie,
    check_dd_o_operator,
    check_homomorphism,
    o_operator_residuals,
)
from .exactlin import (
    apply_out,
    block,
    equal,
    exact,
    identity,
    inverse,
    is_skew,
    require_square,
    transform_product,
    zeros,
)
from .quadri import check_quadri, check_quadri_bimodule, project_dd, projection_bimodule
from .report import PreconditionError, Report, ShapeError
from .util import to_scalar

_LOGGER = logging.getLogger("pyquadri")


class OpFamilyAlgebra(OpAlgebra):
    """Any named set of bilinear operations on one space."""

    SPECIES = "family"

    @classmethod
    def from_algebra(cls, algebra, names=None):
        names = algebra.names if names is None else names
        return cls({name: algebra.op(name) for name in names})


def _operator(algebra, m, what="operator"):
    return require_square(exact(m), algebra.dim, what)


def check_rota_baxter(algebra, p, weight=0):
    """P(x) o P(y) = P(P(x) o y + x o P(y) + weight x o y) for every operation."""
    p = _operator(algebra, p)
    weight = to_scalar(weight)
    one = identity(algebra.dim)
    report = Report("rota-baxter")
    report.note("weight", str(weight))
    for name in algebra.names:
        c = algebra.op(name)
        inner = transform_product(c, p, one) + transform_product(c, one, p) + weight * c
        report.add_residuals("P(x) {0} P(y) = P(P(x) {0} y + x {0} P(y) + w x {0} y)".format(name),
                             transform_product(c, p, p) - apply_out(inner, p), 2)
    return report.log()


def _nijenhuis_residual(c, n, one):
    inner = transform_product(c, n, one) + transform_product(c, one, n) - apply_out(c, n)
    return transform_product(c, n, n) - apply_out(inner, n)


def check_nijenhuis(algebra, n):
    """N(x) o N(y) = N(N(x) o y + x o N(y) - N(x o y)) for every operation and for their sum."""
    n = _operator(algebra, n)
    one = identity(algebra.dim)
    report = Report("nijenhuis")
    names = list(algebra.names)
    if len(names) > 1:
        names.append("star")
    for name in names:
        report.add_residuals("N(x) {0} N(y) = N(N(x) {0} y + x {0} N(y) - N(x {0} y))".format(name),
                             _nijenhuis_residual(algebra.op(name), n, one), 2)
    return report.log()


def nijenhuis_to_rb(n, weight):
    """P = (-weight id - N) / 2, a Rota-Baxter operator of that weight when N is Nijenhuis."""
    n = require_square(exact(n), what="operator")
    weight = to_scalar(weight)
    one = identity(n.shape[0])
    if not equal(n.dot(n), weight * weight * one):
        _LOGGER.warning("nijenhuis: N^2 is not {} id".format(weight * weight))
        raise PreconditionError("N^2 != lambda^2 id")
    return (-weight * one - n) / 2


def is_idempotent(p):
    p = require_square(exact(p), what="operator")
    return equal(p.dot(p), p)


def _require_double(qd, r):
    """Check that qd is the double built from a skew solution r on A; returns (r, n)."""
    r = require_square(exact(r), what="tensor")
    n = r.shape[0]
    if qd.dim != 2 * n:
        raise ShapeError("double has dimension {}, tensor {}".format(qd.dim, n))
    if not is_skew(r):
        _LOGGER.warning("operators: r is not skew-symmetric")
        raise PreconditionError("r is not skew-symmetric")
    q = qd.restrict(0, n)
    qeq = check_q_equation(q, r)
    if not qeq.passed:
        _LOGGER.warning("operators: r does not solve the Q-equation")
        raise PreconditionError("r does not solve the Q-equation", qeq)
    if qd != double_from_r(q, r):
        _LOGGER.warning("operators: algebra is not the double of r")
        raise PreconditionError("algebra is not the double built from r")
    return r, n


def _r_inverse(r):
    try:
        return inverse(r)
    except PreconditionError:
        _LOGGER.warning("operators: r is degenerate, T_r has no inverse")
        raise PreconditionError("r is degenerate")


def _nijenhuis_block(r, l1, l2, l3, l4, three=False):
    n = r.shape[0]
    one = identity(n)
    if three:
        lower = zeros(n, n)
    elif l3 != 0:
        lower = l3 * _r_inverse(r)
    else:
        lower = zeros(n, n)
    return block(l2 * one, l1 * r, lower, l4 * one)


def double_nijenhuis(qd, r, params):
    """N(x, a*) = (l1 T(a*) + l2 x, l3 T^-1(x) + l4 a*), or (l1 T(a*) + l2 x, l3 a*) for three params."""
    r, _ = _require_double(qd, r)
    params = [to_scalar(p) for p in params]
    if len(params) == 4:
        return _nijenhuis_block(r, *params)
    if len(params) == 3:
        l1, l2, l3 = params
        return _nijenhuis_block(r, l1, l2, 0, l3, three=True)
    raise ShapeError("double_nijenhuis: expected 3 or 4 parameters, got {}".format(len(params)))


def _family_params(kind, params):
    kind = kind.upper()
    if kind not in ("F1", "F2", "F3", "G1", "G2", "G3"):
        raise ShapeError("unknown operator family {!r}".format(kind))
    values = {key: to_scalar(value) for key, value in params.items() if value is not None}
    if kind.startswith("G"):
        if values.get("lambda", -1) != -1:
            raise PreconditionError("{} fixes lambda = -1".format(kind))
        values["lambda"] = to_scalar(-1)
    for key in ("lambda", "k", "k1", "k2"):
        values.setdefault(key, to_scalar(0))
    family = "F" + kind[1]
    lam = values["lambda"]
    if family == "F1" and values["k"] == 0:
        raise PreconditionError("{} needs k != 0".format(kind))
    if family == "F2" and values["k"] == 0 and lam == 0:
        raise PreconditionError("{} needs (k, lambda) != (0, 0)".format(kind))
    if family == "F3":
        k1, k2 = values["k1"], values["k2"]
        if k1 == 0:
            raise PreconditionError("{} needs k1 != 0".format(kind))
        if k2 == lam or k2 == -lam:
            raise PreconditionError("{} needs k2 != +-lambda".format(kind))
        lambda3 = (lam * lam - k2 * k2) / k1
        if "lambda3" in values and values["lambda3"] != lambda3:
            raise PreconditionError("{}: lambda3 is forced to {}".format(kind, lambda3))
        values["lambda3"] = lambda3
    return family, values


def _sign(family, sign):
    if family == "F3":
        return "+"
    if sign not in ("+", "-"):
        raise ShapeError("{} needs sign + or -".format(family))
    return sign


def family_nijenhuis(kind, sign, params, r):
    """The Nijenhuis operator a family member comes from, with its weight.

    Returns (N, lambda) with N^2 = lambda^2 id.
    """
    r = require_square(exact(r), what="tensor")
    family, values = _family_params(kind, params)
    sign = _sign(family, sign)
    lam = values["lambda"]
    s = lam if sign == "+" else -lam
    if family == "F1":
        n = _nijenhuis_block(r, 0, s, values["k"], -s)
    elif family == "F2":
        n = _nijenhuis_block(r, values["k"], s, 0, -s, three=True)
    else:
        k2 = values["k2"]
        n = _nijenhuis_block(r, values["k1"], k2, values["lambda3"], -k2)
    return n, lam


def rb_family(kind, sign, params, qd, r):
    """Rota-Baxter operator of a family member on the double of a skew solution r.

    `params` holds lambda, k (also the hatted k of F2), k1 and k2; the G kinds
    fix lambda = -1 and are idempotent.
    """
    r, n = _require_double(qd, r)
    family, values = _family_params(kind, params)
    sign = _sign(family, sign)
    lam = values["lambda"]
    one = identity(n)
    zero = zeros(n, n)
    if family == "F1":
        lower = -(values["k"] / 2) * _r_inverse(r)
        p = block(-lam * one, zero, lower, zero) if sign == "+" else block(zero, zero, lower, -lam * one)
    elif family == "F2":
        upper = -(values["k"] / 2) * r
        p = block(-lam * one, upper, zero, zero) if sign == "+" else block(zero, upper, zero, -lam * one)
    else:
        k1, k2 = values["k1"], values["k2"]
        p = block(-(k2 + lam) / 2 * one, -(k1 / 2) * r,
                  (k2 * k2 - lam * lam) / (2 * k1) * _r_inverse(r), (k2 - lam) / 2 * one)
    if equal(p, -lam * identity(2 * n)):
        _LOGGER.info("family: {}{} gives the trivial operator -lambda id".format(kind, sign))
    return p


def semidirect_nijenhuis_theta(q, params):
    """Nijenhuis operator on A_v x A and the isomorphism from the self-bowtie.

    A_v is the vertical projection acting on A through (L_ne, R_nw, L_se, R_sw).
    N(x, y) = (l1 y + l2 x, l3 x + l4 y) and theta(x, y) = (y + x, x).
    Returns (N, theta, report).
    """
    validity = check_quadri(q)
    if not validity.passed:
        _LOGGER.warning("semidirect: not a quadri-algebra")
        raise PreconditionError("not a quadri-algebra", validity)
    l1, l2, l3, l4 = [to_scalar(p) for p in params]
    n = q.dim
    one = identity(n)
    zero = zeros(n, n)
    vertical = project_dd(q, "vertical")
    module = projection_bimodule(q, "vertical")
    semi, _ = build_dd_bowtie(DDMatchedPairData(vertical, DendriformAlgebra.zero(n), module, DDBimodule.zero(n, n)))
    nij = block(l2 * one, l1 * one, l3 * one, l4 * one)
    theta = block(one, one, one, zero)
    theta_inv = block(zero, one, one, -one)

    report = Report("semidirect-nijenhuis")
    report.merge(check_nijenhuis(semi, nij), prefix="nijenhuis")
    if not equal(theta.dot(theta_inv), identity(2 * n)):
        report.add("theta invertible", (), list((theta.dot(theta_inv) - identity(2 * n)).flat))
    bowtie, pair = build_dd_bowtie(DDMatchedPairData(vertical, vertical, module, module))
    report.note("matched pair", pair.passed)
    if pair.passed:
        report.merge(check_homomorphism("dendriform", theta, bowtie, semi), prefix="theta")
    else:
        report.note("theta", "skipped: A_v does not form a matched pair with itself")
    return nij, theta, report.log()


def check_o_operator(kind, algebra, module, t):
    if kind == "dendriform":
        return check_dd_o_operator(algebra, module, exact(t))
    if kind == "quadri":
        bimodule = check_quadri_bimodule(algebra, module)
        if not bimodule.passed:
            _LOGGER.warning("o-operator: invalid bimodule")
            raise PreconditionError("bimodule is not valid", bimodule)
        return o_operator_residuals("quadri-o-operator", algebra, module, exact(t)).log()
    raise ShapeError("unknown O-operator kind {!r}".format(kind))
