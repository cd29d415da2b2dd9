"""Dendriform dialgebras and the machinery shared with the quadri species.

`OpAlgebra` and `Bimodule` are species-agnostic containers for structure
constant cubes and action families. The axiom tables in
:mod:`pyquadri.constant` drive both the algebra and the bimodule checks,
so every species is verified by the same residual engine.
"""
import logging

import numpy as np

from .constant import DD_AXIOMS, DD_OPS, DD_SUMS
from .exactlin import (
    apply_out,
    assoc_lhs,
    assoc_rhs,
    exact,
    hyperbolic_form,
    identity,
    is_isotropic,
    left_family,
    require_cube,
    require_shape,
    require_square,
    right_family,
    transform_product,
    zeros,
)
from .report import PreconditionError, Report, ShapeError, axiom_tag

_LOGGER = logging.getLogger("pyquadri")


class OpAlgebra(object):
    """A vector space with named bilinear operations given by cubes.

    Subclasses fix the species: its base operation names and the derived
    operations that are sums of base ones. A plain `OpAlgebra` accepts any
    names and is what an associative algebra or an operator family uses.
    """

    SPECIES = "associative"
    OPS = None
    SUMS = {}

    def __init__(self, ops):
        names = tuple(ops) if self.OPS is None else self.OPS
        missing = [name for name in names if name not in ops]
        if missing:
            raise ShapeError("{}: missing operations {}".format(self.SPECIES, missing))
        if not names:
            raise ShapeError("{}: no operations".format(self.SPECIES))
        dim = None
        self._ops = {}
        for name in names:
            cube = require_cube(exact(ops[name]), dim, what="{} {}".format(self.SPECIES, name))
            dim = cube.shape[0]
            self._ops[name] = cube
        self._names = names
        self._dim = dim
        self._derived = {}

    @classmethod
    def zero(cls, dim):
        return cls.from_ops({name: zeros(dim, dim, dim) for name in cls.OPS})

    @classmethod
    def from_ops(cls, ops):
        if cls.OPS is None:
            return cls(ops)
        return cls(*[ops[name] for name in cls.OPS])

    @property
    def species(self):
        return self.SPECIES

    @property
    def dim(self):
        return self._dim

    @property
    def names(self):
        return self._names

    @property
    def ops(self):
        return dict(self._ops)

    def op(self, name):
        """Cube of a base or derived operation; `star` always sums every base op."""
        if name in self._ops:
            return self._ops[name]
        if name not in self._derived:
            if name in self.SUMS:
                parts = self.SUMS[name]
            elif name == "star":
                parts = self._names
            else:
                raise ShapeError("{}: unknown operation {!r}".format(self.SPECIES, name))
            total = zeros(self._dim, self._dim, self._dim)
            for part in parts:
                total = total + self._ops[part]
            self._derived[name] = total
        return self._derived[name]

    @property
    def star(self):
        return self.op("star")

    def left(self, name):
        return left_family(self.op(name))

    def right(self, name):
        return right_family(self.op(name))

    def restrict(self, lo, hi):
        """Structure constants of the coordinate block [lo, hi) as an algebra.

        Only meaningful when the block is closed; no check is made.
        """
        return self.from_ops({name: cube[lo:hi, lo:hi, lo:hi] for name, cube in self._ops.items()})

    def __eq__(self, other):
        if not isinstance(other, OpAlgebra):
            return NotImplemented
        if self.SPECIES != other.SPECIES or self._names != other._names or self._dim != other._dim:
            return False
        return all(np.array_equal(self._ops[n], other._ops[n]) for n in self._names)

    def __repr__(self):
        return "{}(dim={})".format(type(self).__name__, self._dim)


class DendriformAlgebra(OpAlgebra):
    SPECIES = "dendriform"
    OPS = DD_OPS
    SUMS = DD_SUMS

    def __init__(self, prec, succ):
        super().__init__({"prec": prec, "succ": succ})

    @property
    def prec(self):
        return self._ops["prec"]

    @property
    def succ(self):
        return self._ops["succ"]


class Bimodule(object):
    """Action families l_o, r_o of an algebra on a module V.

    Each family has shape (algebra_dim, module_dim, module_dim); family[x]
    is the matrix of the action of the basis element e_x.
    """

    SPECIES = None
    OPS = ()
    SUMS = {}

    def __init__(self, maps):
        self._maps = {}
        shape = None
        for name in self.OPS:
            for side in ("l", "r"):
                key = "{}_{}".format(side, name)
                if key not in maps:
                    raise ShapeError("{} bimodule: missing family {}".format(self.SPECIES, key))
                family = exact(maps[key])
                if family.ndim != 3 or family.shape[1] != family.shape[2]:
                    raise ShapeError("{} bimodule: family {} has shape {}".format(self.SPECIES, key, family.shape))
                if shape is not None and family.shape != shape:
                    raise ShapeError("{} bimodule: family {} has shape {}, expected {}".format(
                        self.SPECIES, key, family.shape, shape))
                shape = family.shape
                self._maps[key] = family
        self._algebra_dim = shape[0]
        self._module_dim = shape[1]

    @classmethod
    def from_maps(cls, maps):
        return cls(*[maps["{}_{}".format(side, name)] for name in cls.OPS for side in ("l", "r")])

    @classmethod
    def zero(cls, algebra_dim, module_dim):
        family = zeros(algebra_dim, module_dim, module_dim)
        return cls.from_maps({"{}_{}".format(side, name): family for name in cls.OPS for side in ("l", "r")})

    @property
    def species(self):
        return self.SPECIES

    @property
    def algebra_dim(self):
        return self._algebra_dim

    @property
    def module_dim(self):
        return self._module_dim

    @property
    def maps(self):
        return dict(self._maps)

    def _family(self, side, name):
        key = "{}_{}".format(side, name)
        if key in self._maps:
            return self._maps[key]
        parts = self.SUMS.get(name, self.OPS if name == "star" else None)
        if parts is None:
            raise ShapeError("{} bimodule: unknown operation {!r}".format(self.SPECIES, name))
        total = zeros(self._algebra_dim, self._module_dim, self._module_dim)
        for part in parts:
            total = total + self._maps["{}_{}".format(side, part)]
        return total

    def l(self, name):
        return self._family("l", name)

    def r(self, name):
        return self._family("r", name)

    def __eq__(self, other):
        if not isinstance(other, Bimodule):
            return NotImplemented
        if self.SPECIES != other.SPECIES or set(self._maps) != set(other._maps):
            return False
        return all(np.array_equal(v, other._maps[k]) for k, v in self._maps.items())

    def __repr__(self):
        return "{}({} -> gl({}))".format(type(self).__name__, self._algebra_dim, self._module_dim)


class DDBimodule(Bimodule):
    SPECIES = "dendriform"
    OPS = DD_OPS
    SUMS = DD_SUMS

    def __init__(self, l_prec, r_prec, l_succ, r_succ):
        super().__init__({"l_prec": l_prec, "r_prec": r_prec, "l_succ": l_succ, "r_succ": r_succ})


class MatchedPairData(object):
    """Two algebras of one species acting on each other.

    `on_b` is the bimodule of A acting on B, `on_a` that of B acting on A.
    """

    def __init__(self, a, b, on_b, on_a):
        if a.SPECIES != b.SPECIES or on_b.SPECIES != a.SPECIES or on_a.SPECIES != a.SPECIES:
            raise ShapeError("matched pair: species disagree")
        if on_b.algebra_dim != a.dim or on_b.module_dim != b.dim:
            raise ShapeError("matched pair: A-action has shape {}x{}, expected {}x{}".format(
                on_b.algebra_dim, on_b.module_dim, a.dim, b.dim))
        if on_a.algebra_dim != b.dim or on_a.module_dim != a.dim:
            raise ShapeError("matched pair: B-action has shape {}x{}, expected {}x{}".format(
                on_a.algebra_dim, on_a.module_dim, b.dim, a.dim))
        self._a = a
        self._b = b
        self._on_b = on_b
        self._on_a = on_a

    @property
    def a(self):
        return self._a

    @property
    def b(self):
        return self._b

    @property
    def on_b(self):
        return self._on_b

    @property
    def on_a(self):
        return self._on_a


class DDMatchedPairData(MatchedPairData):
    pass


# Residual engines shared by the species.


def _sector(index, split, out_lo):
    """Which kind of identity a block of an axiom residual on A + B expresses."""
    sides = [i >= split for i in index]
    if all(sides) or not any(sides):
        return "axiom"
    mostly_b = sum(sides) * 2 > len(sides)
    # The component landing on the minority side is a module identity.
    return "module" if mostly_b != (out_lo >= split) else "matched"


def check_axioms(subject, algebra, axioms, split=None):
    """Evaluate every axiom (x o1 y) o2 z = x o3 (y o4 z) on all basis triples.

    With `split`, the algebra is read as A + B with A the first `split`
    coordinates, and each residual is cut into its A and B components tagged
    by sector: pure triples are `axiom`, components that are bimodule
    identities are `module`, the rest are matched-pair conditions.
    """
    report = Report(subject)
    for axiom in axioms:
        o1, o2, o3, o4 = axiom
        residual = assoc_lhs(algebra.op(o1), algebra.op(o2)) - assoc_rhs(algebra.op(o3), algebra.op(o4))
        tag = axiom_tag(axiom)
        if split is None:
            report.add_residuals(tag, residual, 3)
            continue
        n = algebra.dim
        for index in np.ndindex(n, n, n):
            for lo, hi in ((0, split), (split, n)):
                block = residual[index][lo:hi]
                if any(v != 0 for v in block):
                    report.add("{}: {}".format(_sector(index, split, lo), tag), index, list(block))
    return report.log()


def check_bimodule_axioms(subject, algebra, module, axioms):
    """Module identities induced by each algebra axiom on every basis pair (x, y).

    For the axiom (x o1 y) o2 z = x o3 (y o4 z) these are
        r_o2(y) r_o1(x) = r_o3(x o4 y)
        r_o2(y) l_o1(x) = l_o3(x) r_o4(y)
        l_o2(x o1 y) = l_o3(x) l_o4(y)
    """
    if module.algebra_dim != algebra.dim or module.SPECIES != algebra.SPECIES:
        raise ShapeError("{}: bimodule over a {}-dimensional {} algebra given for a {}-dimensional {} algebra".format(
            subject, module.algebra_dim, module.SPECIES, algebra.dim, algebra.SPECIES))
    report = Report(subject)
    for o1, o2, o3, o4 in axioms:
        right = np.tensordot(module.r(o2), module.r(o1), ([2], [1])).transpose(2, 0, 1, 3)
        right = right - np.tensordot(algebra.op(o4), module.r(o3), ([2], [0]))
        report.add_residuals("r_{}(y) r_{}(x) = r_{}(x {} y)".format(o2, o1, o3, o4), right, 2)

        middle = np.tensordot(module.r(o2), module.l(o1), ([2], [1])).transpose(2, 0, 1, 3)
        middle = middle - np.tensordot(module.l(o3), module.r(o4), ([2], [1])).transpose(0, 2, 1, 3)
        report.add_residuals("r_{}(y) l_{}(x) = l_{}(x) r_{}(y)".format(o2, o1, o3, o4), middle, 2)

        left = np.tensordot(algebra.op(o1), module.l(o2), ([2], [0]))
        left = left - np.tensordot(module.l(o3), module.l(o4), ([2], [1])).transpose(0, 2, 1, 3)
        report.add_residuals("l_{}(x {} y) = l_{}(x) l_{}(y)".format(o2, o1, o3, o4), left, 2)
    return report.log()


def bowtie_cube(c_a, c_b, l_a, r_a, l_b, r_b):
    """One product on A + B from both products and both action families.

    x o b = l_a(x) b + r_b(b) x and b o x = l_b(b) x + r_a(x) b.
    """
    n = c_a.shape[0]
    m = c_b.shape[0]
    cube = zeros(n + m, n + m, n + m)
    cube[:n, :n, :n] = c_a
    cube[n:, n:, n:] = c_b
    cube[:n, n:, :n] = r_b.transpose(2, 0, 1)
    cube[:n, n:, n:] = l_a.transpose(0, 2, 1)
    cube[n:, :n, :n] = l_b.transpose(0, 2, 1)
    cube[n:, :n, n:] = r_a.transpose(2, 0, 1)
    return cube


def bowtie_ops(pair):
    a, b = pair.a, pair.b
    return {name: bowtie_cube(a.op(name), b.op(name),
                              pair.on_b.l(name), pair.on_b.r(name),
                              pair.on_a.l(name), pair.on_a.r(name))
            for name in a.names}


def split_pair(algebra, n, pair_class, bimodule_class):
    """Read the mixed blocks of an algebra on A + B back into matched-pair data."""
    ops = algebra.ops
    maps_b = {}
    maps_a = {}
    for name, cube in ops.items():
        maps_b["l_" + name] = cube[:n, n:, n:].transpose(0, 2, 1)
        maps_b["r_" + name] = cube[n:, :n, n:].transpose(1, 2, 0)
        maps_a["l_" + name] = cube[n:, :n, :n].transpose(0, 2, 1)
        maps_a["r_" + name] = cube[:n, n:, :n].transpose(1, 2, 0)
    return pair_class(algebra.restrict(0, n), algebra.restrict(n, algebra.dim),
                      bimodule_class.from_maps(maps_b), bimodule_class.from_maps(maps_a))


def o_operator_residuals(subject, algebra, module, t):
    """T(u) o T(v) - T(l_o(T u) v + r_o(T v) u) for every base op and module basis pair."""
    t = require_shape(t, (algebra.dim, module.module_dim), "O-operator")
    report = Report(subject)
    for name in algebra.names:
        lhs = transform_product(algebra.op(name), t, t)
        acted = np.tensordot(t, module.l(name), ([0], [0])).transpose(0, 2, 1)
        acted = acted + np.tensordot(t, module.r(name), ([0], [0])).transpose(2, 0, 1)
        report.add_residuals("T(u) {0} T(v) = T(l_{0}(T u) v + r_{0}(T v) u)".format(name),
                             lhs - apply_out(acted, t), 2)
    return report


def subspace_closure(report, algebra, n):
    """Record products of the first n (resp. last) coordinates leaving their block."""
    for name in algebra.names:
        cube = algebra.op(name)
        report.add_residuals("A closed under {}".format(name), cube[:n, :n, n:], 2)
        m = algebra.dim - n
        upper = cube[n:, n:, :n]
        for i, j in np.ndindex(m, m):
            if any(v != 0 for v in upper[i, j]):
                report.add("A* closed under {}".format(name), (n + i, n + j), list(upper[i, j]))
    return report


def isotropy(report, gram, n):
    dim = gram.shape[0]
    for label, rows in (("A", range(n)), ("A*", range(n, dim))):
        vectors = identity(dim)[list(rows)]
        if not is_isotropic(gram, vectors):
            report.add("{} isotropic".format(label), (), list(vectors.dot(gram).dot(vectors.T).flat))
    return report


def check_form_symmetry(report, gram):
    gram = require_square(gram, what="form")
    n = gram.shape[0]
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i, j] != gram[j, i]:
                report.add("form symmetric", (i, j), [gram[i, j] - gram[j, i]])
    return report


# Dendriform operations.


def check_dendriform(d):
    return check_axioms("dendriform", d, DD_AXIOMS)


def assoc_of(d):
    return d.prec + d.succ


def regular_dd_bimodule(d):
    return DDBimodule(d.left("prec"), d.right("prec"), d.left("succ"), d.right("succ"))


def check_dd_bimodule(d, m):
    return check_bimodule_axioms("dd-bimodule", d, m, DD_AXIOMS)


def dual_dd_bimodule(m):
    """(V*, -r_succ*, l_succ* + l_prec*, r_succ* + r_prec*, -l_prec*)."""
    def dual(family):
        return family.transpose(0, 2, 1)

    return DDBimodule(-dual(m.r("succ")), dual(m.l("star")), dual(m.r("star")), -dual(m.l("prec")))


def check_dd_2cocycle(d, gram):
    """B(x star y, z) = B(y, z prec x) + B(x, y succ z) on all basis triples."""
    gram = require_square(exact(gram), d.dim, "form")
    report = check_form_symmetry(Report("dd-2-cocycle"), gram)
    lhs = np.tensordot(d.star, gram, ([2], [0]))
    rhs = np.tensordot(gram, d.prec, ([1], [2])).transpose(2, 0, 1)
    rhs = rhs + np.tensordot(gram, d.succ, ([1], [2]))
    report.add_residuals("B(x star y, z) = B(y, z prec x) + B(x, y succ z)", lhs - rhs, 3)
    return report.log()


def build_dd_bowtie(pair):
    """Dendriform algebra on A + B plus the sector-tagged report of its axioms."""
    algebra = DendriformAlgebra.from_ops(bowtie_ops(pair))
    report = check_axioms("dd-bowtie", algebra, DD_AXIOMS, split=pair.a.dim)
    return algebra, report


def check_manin_dd(d, n):
    if d.dim != 2 * n:
        raise ShapeError("manin: algebra of dimension {} does not split as {} + {}".format(d.dim, n, n))
    gram = hyperbolic_form(n)
    report = subspace_closure(Report("dd-manin"), d, n)
    isotropy(report, gram, n)
    report.merge(check_dd_2cocycle(d, gram), prefix="cocycle")
    return report.log()


def manin_matched_pair(d, n):
    """Matched pair of dendriform dialgebras hidden in a Manin triple on A + A*."""
    manin = check_manin_dd(d, n)
    if not manin.passed:
        _LOGGER.warning("manin: not a Manin triple, cannot split")
        raise PreconditionError("not a Manin triple of dendriform dialgebras", manin)
    return split_pair(d, n, DDMatchedPairData, DDBimodule)


def check_dd_o_operator(d, m, t):
    bimodule = check_dd_bimodule(d, m)
    if not bimodule.passed:
        _LOGGER.warning("o-operator: invalid bimodule")
        raise PreconditionError("bimodule is not valid", bimodule)
    return o_operator_residuals("dd-o-operator", d, m, t).log()


def _comult_residuals(report, f, x, y):
    for name, delta_x in x.comults.items():
        lhs = np.tensordot(np.tensordot(delta_x, f, ([1], [1])), f, ([1], [1]))
        rhs = np.tensordot(f, y.comult(name), ([0], [0]))
        report.add_residuals("(f x f) {0} = {0} f".format(name), lhs - rhs, 1)


def check_homomorphism(kind, f, x, y, manin=None):
    """Check f(a o b) = f(a) o f(b) for every operation, and comultiplications for bialgebras.

    `x` and `y` are algebras, or (algebra, coalgebra) pairs / bialgebras when
    kind is "quadri_bialgebra". `manin` = (n_x, n_y) adds preservation of the
    coordinate splits and of the standard forms.
    """
    if kind == "quadri_bialgebra":
        alg_x, co_x = (x.algebra, x.coalgebra) if hasattr(x, "algebra") else x
        alg_y, co_y = (y.algebra, y.coalgebra) if hasattr(y, "algebra") else y
    else:
        alg_x, co_x, alg_y, co_y = x, None, y, None
    if kind not in ("quadri_bialgebra",) and alg_x.SPECIES != kind:
        raise ShapeError("homomorphism: expected {} algebras, got {}".format(kind, alg_x.SPECIES))
    if alg_x.names != alg_y.names:
        raise ShapeError("homomorphism: operations {} and {} differ".format(alg_x.names, alg_y.names))
    f = require_shape(exact(f), (alg_y.dim, alg_x.dim), "homomorphism")
    report = Report("{}-homomorphism".format(kind))
    for name in alg_x.names:
        residual = apply_out(alg_x.op(name), f) - transform_product(alg_y.op(name), f, f)
        report.add_residuals("f(x {0} y) = f(x) {0} f(y)".format(name), residual, 2)
    if co_x is not None:
        _comult_residuals(report, f, co_x, co_y)
    if manin is not None:
        nx, ny = manin
        for i in range(alg_x.dim):
            lo, hi = (0, ny) if i >= nx else (ny, alg_y.dim)
            stray = f[lo:hi, i]
            if any(v != 0 for v in stray):
                report.add("f preserves the split", (i,), list(stray))
        form = f.T.dot(hyperbolic_form(ny)).dot(f) - hyperbolic_form(nx)
        report.add_residuals("f preserves the standard form", form, 2)
    return report.log()


def check_associative(cube):
    cube = require_cube(exact(cube))
    report = Report("associative")
    report.add_residuals("(x star y) star z = x star (y star z)", assoc_lhs(cube, cube) - assoc_rhs(cube, cube), 3)
    return report.log()
