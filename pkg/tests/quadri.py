import logging
import os

from pyquadri.bialgebra import QuadriBialgebra, QuadriCoalgebra
from pyquadri.cfg import QuadriCfg
from pyquadri.dendriform import DendriformAlgebra
from pyquadri.exactlin import exact, zeros
from pyquadri.quadri import QuadriAlgebra


_LOGGER = logging.getLogger("pyquadri")

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


class PyQuadri(object):
    """Just enough of the real PyQuadri for cfg, background and storage."""

    def __init__(self, **kwargs):
        """Constructor for the PyQuadri object."""
        self._last_error = None
        self._cfg = QuadriCfg(self, **kwargs)

    @property
    def cfg(self):
        return self._cfg

    def error(self, msg):
        self._last_error = msg
        _LOGGER.error(msg)

    @property
    def last_error(self):
        """Return the last reported error."""
        return self._last_error

    def warning(self, msg):
        _LOGGER.warning(msg)

    def info(self, msg):
        _LOGGER.info(msg)

    def debug(self, msg):
        _LOGGER.debug(msg)

    def vdebug(self, msg):
        if self._cfg.verbose:
            _LOGGER.debug(msg)


def scalar_cube(value):
    return exact([[[value]]])


def quadri1(nw=0, ne=0, sw=0, se=0):
    """One dimensional quadri candidate e o e = value e for each arrow."""
    return QuadriAlgebra(scalar_cube(nw), scalar_cube(ne), scalar_cube(sw), scalar_cube(se))


def dendriform1(prec=0, succ=0):
    return DendriformAlgebra(scalar_cube(prec), scalar_cube(succ))


def se_one():
    """e se e = e, every other arrow zero."""
    return quadri1(se=1)


def zero_quadri(dim):
    return QuadriAlgebra.zero(dim)


def zero_bialgebra(algebra):
    return QuadriBialgebra(algebra, QuadriCoalgebra.zero(algebra.dim))


def skew2(c=1):
    return exact([[0, c], [-c, 0]])


def se_mask2():
    """Every se constant of a two dimensional algebra, other arrows zero."""
    return {"se": [(i, j, k) for i in range(2) for j in range(2) for k in range(2)]}


def cube_from(entries, dim=2):
    """Cube with the given {(i, j, k): value} entries."""
    cube = zeros(dim, dim, dim)
    for index, value in entries.items():
        cube[index] = value
    return cube


def fixture(name):
    return os.path.join(FIXTURES, name)


def left_unit2():
    """e_0 nw e_0 = e_0 and e_0 se e_1 = e_1; every other product vanishes."""
    return QuadriAlgebra(cube_from({(0, 0, 0): 1}), zeros(2, 2, 2), zeros(2, 2, 2), cube_from({(0, 1, 1): 1}))


def left_unit2_r(c=1):
    """Nondegenerate skew solution of the Q-equation on left_unit2()."""
    return exact([[0, -c], [c, 0]])
