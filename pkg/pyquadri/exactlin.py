"""Exact scalar, matrix and small-tensor kernel.

Everything is a numpy array of ``dtype=object`` holding ``fractions.Fraction``
entries. Cubes are indexed ``c[i][j][k]``, the coefficient of e_k in
e_i o e_j. Two-leg tensors are indexed ``t[i][j]``, the coefficient of
e_i (x) e_j; three-leg tensors likewise ``t[i][j][k]``.
"""
import logging
from fractions import Fraction

import numpy as np

from .constant import PLACEMENTS
from .report import PreconditionError, ShapeError
from .util import to_scalar

_LOGGER = logging.getLogger("pyquadri")

ZERO = Fraction(0)
ONE = Fraction(1)


def exact(data):
    """Return `data` as an object array of Fractions."""
    arr = np.array(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for index in np.ndindex(*arr.shape):
        out[index] = to_scalar(arr[index])
    return out


def zeros(*shape):
    return np.full(shape, ZERO, dtype=object)


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def is_zero(arr):
    arr = np.asarray(arr, dtype=object)
    return all(v == 0 for v in arr.flat)


def equal(a, b):
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and is_zero(a - b)


def require_shape(arr, shape, what="array"):
    arr = np.asarray(arr, dtype=object)
    if arr.shape != tuple(shape):
        raise ShapeError("{}: expected shape {}, got {}".format(what, tuple(shape), arr.shape))
    return arr


def require_cube(cube, n=None, what="cube"):
    cube = np.asarray(cube, dtype=object)
    if cube.ndim != 3 or len(set(cube.shape)) != 1:
        raise ShapeError("{}: expected an n x n x n cube, got {}".format(what, cube.shape))
    if n is not None and cube.shape[0] != n:
        raise ShapeError("{}: expected dimension {}, got {}".format(what, n, cube.shape[0]))
    return cube


def require_square(m, n=None, what="matrix"):
    m = np.asarray(m, dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError("{}: expected a square matrix, got {}".format(what, m.shape))
    if n is not None and m.shape[0] != n:
        raise ShapeError("{}: expected dimension {}, got {}".format(what, n, m.shape[0]))
    return m


def is_skew(m):
    m = require_square(m)
    return is_zero(m + m.T)


def is_symmetric(m):
    m = require_square(m)
    return is_zero(m - m.T)


def det(m):
    """Determinant by fraction-free (Bareiss) elimination."""
    m = require_square(m)
    n = m.shape[0]
    a = [[to_scalar(v) for v in row] for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    if n == 0:
        return ONE
    return sign * a[n - 1][n - 1]


def _row_reduce(a, width):
    """Gauss-Jordan on the list-of-rows `a` using its first `width` columns.

    Returns the pivot columns; `a` is reduced in place.
    """
    pivots = []
    row = 0
    for col in range(width):
        pivot = next((i for i in range(row, len(a)) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        scale = a[row][col]
        a[row] = [v / scale for v in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [v - factor * p for v, p in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == len(a):
            break
    return pivots


def rank(m):
    m = np.asarray(m, dtype=object)
    if m.ndim != 2:
        raise ShapeError("rank: expected a matrix, got {}".format(m.shape))
    a = [[to_scalar(v) for v in row] for row in m]
    return len(_row_reduce(a, m.shape[1]))


def inverse(m):
    m = require_square(m)
    n = m.shape[0]
    a = [[to_scalar(v) for v in row] + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m)]
    if len(_row_reduce(a, n)) != n:
        raise PreconditionError("matrix is singular")
    return exact([row[n:] for row in a])


def solve(m, rhs):
    """Solve m x = rhs exactly; `rhs` may be a vector or a matrix of columns."""
    m = require_square(m)
    rhs = np.asarray(rhs, dtype=object)
    if rhs.shape[0] != m.shape[0]:
        raise ShapeError("solve: right side has {} rows, matrix has {}".format(rhs.shape[0], m.shape[0]))
    return inverse(m).dot(rhs)


# Multiplication families and products.


def left_family(cube):
    """L[x] is the matrix of y -> x o y, so L[x][k][j] = c[x][j][k]."""
    return require_cube(cube).transpose(0, 2, 1)


def right_family(cube):
    """R[y] is the matrix of x -> x o y, so R[y][k][i] = c[i][y][k]."""
    return require_cube(cube).transpose(1, 2, 0)


def product(cube, x, y):
    """x o y for coordinate vectors x and y."""
    x = np.asarray(x, dtype=object)
    y = np.asarray(y, dtype=object)
    return np.tensordot(y, np.tensordot(x, cube, ([0], [0])), ([0], [0]))


def assoc_lhs(c1, c2):
    """(e_i o1 e_j) o2 e_k for all triples, shape (i, j, k, out)."""
    return np.tensordot(c1, c2, ([2], [0]))


def assoc_rhs(c3, c4):
    """e_i o3 (e_j o4 e_k) for all triples, shape (i, j, k, out)."""
    return np.tensordot(c3, c4, ([1], [2])).transpose(0, 2, 3, 1)


def transform_product(cube, f, g):
    """(f e_u) o (g e_v) for all source basis pairs, shape (u, v, out)."""
    tmp = np.tensordot(f, cube, ([0], [0]))
    return np.tensordot(tmp, g, ([1], [0])).transpose(0, 2, 1)


def apply_out(arr, f):
    """Apply the matrix `f` to the last axis of `arr`."""
    return np.tensordot(arr, f, ([arr.ndim - 1], [1]))


# Tensor legs.


class EmbeddedTensor(object):
    """A two-leg tensor placed on two of three legs, the third holding a formal unit."""

    def __init__(self, coeffs, placement):
        if placement not in PLACEMENTS:
            raise ShapeError("unknown placement {!r}".format(placement))
        self._coeffs = require_square(coeffs, what="tensor")
        self._placement = placement

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def placement(self):
        return self._placement

    @property
    def dim(self):
        return self._coeffs.shape[0]

    @property
    def legs(self):
        return tuple(int(leg) for leg in self._placement)

    @property
    def unit_leg(self):
        return ({1, 2, 3} - set(self.legs)).pop()

    def is_zero(self):
        return is_zero(self._coeffs)

    def oriented(self, leg):
        """Coefficients with `leg` first and the other nontrivial leg second."""
        first, second = self.legs
        if leg == first:
            return self._coeffs, second
        if leg == second:
            return self._coeffs.T, first
        raise ShapeError("leg {} is the unit leg of r{}".format(leg, self._placement))

    def __repr__(self):
        return "EmbeddedTensor(r{}, dim={})".format(self._placement, self.dim)


def leg_embed(r, placement):
    return EmbeddedTensor(r, placement)


def leg_product(u, v, cube):
    """Product of two leg-embedded tensors sharing exactly one nontrivial leg.

    The shared leg carries (entry of u) o (entry of v); the other two legs
    copy the entry of whichever factor is nontrivial there.
    """
    if u.dim != v.dim:
        raise ShapeError("leg_product: dimensions {} and {} differ".format(u.dim, v.dim))
    cube = require_cube(cube, u.dim)
    shared = set(u.legs) & set(v.legs)
    if len(shared) != 1:
        raise ShapeError("leg_product: r{} and r{} must share exactly one leg".format(u.placement, v.placement))
    leg = shared.pop()
    uu, ou = u.oriented(leg)
    vv, ov = v.oriented(leg)
    tmp = np.tensordot(uu, cube, ([0], [0]))
    w = np.tensordot(vv, tmp, ([0], [1])).transpose(1, 0, 2)
    labels = [ou, ov, leg]
    return w.transpose([labels.index(1), labels.index(2), labels.index(3)])


# Tensors as maps and forms.


def map_of_tensor(r):
    """Identify r with T_r: A* -> A, T_r(e_j*) = sum_i r[i][j] e_i.

    Returns (T, invertible, omega). omega is the Gram matrix of the form
    omega(x, y) = <T_r^-1 x, y>, the matrix inverse of r, or None when r
    is singular.
    """
    r = require_square(r, what="tensor")
    invertible = det(r) != 0
    omega = inverse(r) if invertible else None
    return r.copy(), invertible, omega


def dual_map(t):
    return np.asarray(t, dtype=object).T.copy()


def dual_rep(rho):
    """Transpose every matrix of a representation family."""
    rho = np.asarray(rho, dtype=object)
    if rho.ndim != 3 or rho.shape[1] != rho.shape[2]:
        raise ShapeError("dual_rep: expected a family of square matrices, got {}".format(rho.shape))
    return rho.transpose(0, 2, 1).copy()


def twist(r):
    return require_square(r, what="tensor").T.copy()


def is_isotropic(gram, vectors):
    gram = require_square(gram, what="form")
    n = gram.shape[0]
    w = np.asarray(vectors, dtype=object)
    if w.size == 0:
        return True
    if w.ndim != 2 or w.shape[1] != n:
        raise ShapeError("is_isotropic: vectors must have length {}".format(n))
    return is_zero(w.dot(gram).dot(w.T))


def hyperbolic_form(n):
    """Gram matrix of the standard pairing on A + A*: <x + a*, y + b*> = a*(y) + b*(x)."""
    gram = zeros(2 * n, 2 * n)
    gram[:n, n:] = identity(n)
    gram[n:, :n] = identity(n)
    return gram


def block(top_left, top_right, bottom_left, bottom_right):
    return np.vstack([np.hstack([top_left, top_right]), np.hstack([bottom_left, bottom_right])])


def canonical_tensor(n):
    """r = sum_i e_i (x) e_i* on A + A*."""
    r = zeros(2 * n, 2 * n)
    for i in range(n):
        r[i, n + i] = ONE
    return r
