"""JSON interchange documents.

One document per file: ``{"kind", "version", "dim", ...}`` with scalars
written as lowest-terms strings and cubes as ``c[i][j][k]`` nested lists.
"""
import json
import logging

import numpy as np

from .bialgebra import QuadriBialgebra, QuadriCoalgebra
from .constant import COMULTS, DD_OPS, FORMAT_VERSION, QUADRI_OPS
from .dendriform import DDBimodule, DendriformAlgebra, OpAlgebra
from .exactlin import exact, require_square
from .quadri import QuadriAlgebra, QuadriBimodule
from .report import DocumentError, QuadriError
from .util import scalar_str, to_scalar

_LOGGER = logging.getLogger("pyquadri")

KINDS = ("dendriform", "quadri", "associative", "bialgebra", "tensor", "form", "operator", "bimodule")

_ALGEBRAS = {
    "dendriform": (DendriformAlgebra, DD_OPS),
    "quadri": (QuadriAlgebra, QUADRI_OPS),
    "associative": (OpAlgebra, ("star",)),
}

_BIMODULES = {
    "dendriform": DDBimodule,
    "quadri": QuadriBimodule,
}


def encode(arr):
    """Nested lists of scalar strings."""
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return scalar_str(arr.item())
    return [encode(sub) for sub in arr]


def decode(data, ndim, what):
    try:
        arr = exact(data)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise DocumentError("{}: bad scalar ({})".format(what, e))
    if arr.ndim != ndim:
        raise DocumentError("{}: expected {} nested levels, got shape {}".format(what, ndim, arr.shape))
    return arr


def _require(data, key):
    if key not in data:
        raise DocumentError("document: missing field {!r}".format(key))
    return data[key]


class Document(object):
    """A parsed interchange document: its kind and the library object it carries.

    `value` is an algebra, a bialgebra, a bimodule, or an exact matrix for
    tensor, form and operator documents. Operators may carry a `weight`.
    """

    def __init__(self, kind, value, weight=None):
        if kind not in KINDS:
            raise DocumentError("document: unknown kind {!r}".format(kind))
        self._kind = kind
        self._value = value
        self._weight = None if weight is None else to_scalar(weight)

    @property
    def kind(self):
        return self._kind

    @property
    def value(self):
        return self._value

    @property
    def weight(self):
        return self._weight

    @property
    def dim(self):
        if self._kind in ("tensor", "form", "operator"):
            return self._value.shape[0]
        if self._kind == "bimodule":
            return self._value.algebra_dim
        return self._value.dim

    def __repr__(self):
        return "Document({}, dim={})".format(self._kind, self.dim)

    def to_dict(self):
        data = {"kind": self._kind, "version": FORMAT_VERSION, "dim": self.dim}
        value = self._value
        if self._kind in _ALGEBRAS:
            data["ops"] = {name: encode(value.op(name)) for name in value.names}
        elif self._kind == "bialgebra":
            data["ops"] = {name: encode(value.algebra.op(name)) for name in QUADRI_OPS}
            data["comults"] = {name: encode(value.coalgebra.comult(name)) for name in COMULTS}
        elif self._kind == "bimodule":
            data["species"] = value.species
            data["algebra_dim"] = value.algebra_dim
            data["module_dim"] = value.module_dim
            data["maps"] = {key: encode(family) for key, family in sorted(value.maps.items())}
        elif self._kind == "form":
            data["gram"] = encode(value)
        else:
            data["matrix"] = encode(value)
            if self._weight is not None:
                data["weight"] = scalar_str(self._weight)
        return data

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise DocumentError("document: expected a JSON object")
        kind = _require(data, "kind")
        version = _require(data, "version")
        if str(version) != FORMAT_VERSION:
            raise DocumentError("document: unsupported version {!r}".format(version))
        if kind not in KINDS:
            raise DocumentError("document: unknown kind {!r}".format(kind))
        dim = _require(data, "dim")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise DocumentError("document: bad dimension {!r}".format(dim))
        try:
            doc = cls._parse(kind, dim, data)
        except DocumentError:
            raise
        except QuadriError as e:
            raise DocumentError("document: {}".format(e))
        if doc.dim != dim:
            raise DocumentError("document: declared dimension {} but content has {}".format(dim, doc.dim))
        return doc

    @classmethod
    def _parse(cls, kind, dim, data):
        if kind in _ALGEBRAS or kind == "bialgebra":
            algebra_class, names = _ALGEBRAS.get(kind, (QuadriAlgebra, QUADRI_OPS))
            ops = _require(data, "ops")
            extra = sorted(set(ops) - set(names))
            if extra:
                raise DocumentError("document: unexpected operations {}".format(extra))
            cubes = {name: decode(_require(ops, name), 3, "ops.{}".format(name)) for name in names}
            algebra = algebra_class.from_ops(cubes)
            if kind != "bialgebra":
                return cls(kind, algebra)
            comults = _require(data, "comults")
            coalgebra = QuadriCoalgebra.from_comults(
                {name: decode(_require(comults, name), 3, "comults.{}".format(name)) for name in COMULTS})
            return cls(kind, QuadriBialgebra(algebra, coalgebra))
        if kind == "bimodule":
            species = _require(data, "species")
            if species not in _BIMODULES:
                raise DocumentError("document: unknown bimodule species {!r}".format(species))
            maps = _require(data, "maps")
            families = {key: decode(family, 3, "maps.{}".format(key)) for key, family in maps.items()}
            module = _BIMODULES[species].from_maps(families)
            if module.module_dim != _require(data, "module_dim") or module.algebra_dim != _require(data, "algebra_dim"):
                raise DocumentError("document: bimodule dimensions disagree with its maps")
            return cls(kind, module)
        if kind == "form":
            return cls(kind, require_square(decode(_require(data, "gram"), 2, "gram"), what="gram"))
        matrix = require_square(decode(_require(data, "matrix"), 2, "matrix"), what="matrix")
        weight = data.get("weight") if kind == "operator" else None
        try:
            return cls(kind, matrix, weight)
        except (ValueError, TypeError, ZeroDivisionError) as e:
            raise DocumentError("document: bad weight ({})".format(e))

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except ValueError as e:
            raise DocumentError("document: not JSON ({})".format(e))
        return cls.from_dict(data)

    @classmethod
    def load(cls, path):
        _LOGGER.debug("document: loading {}".format(path))
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise DocumentError("document: cannot read {} ({})".format(path, e))
        return cls.from_json(text)

    def save(self, path):
        _LOGGER.debug("document: saving {}".format(path))
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_json())
            f.write("\n")


def document_of(value, kind=None, weight=None):
    """Wrap a library object, inferring the kind of algebras and bialgebras."""
    if kind is None:
        if isinstance(value, QuadriBialgebra):
            kind = "bialgebra"
        elif isinstance(value, (DendriformAlgebra, QuadriAlgebra)):
            kind = value.species
        elif isinstance(value, OpAlgebra):
            kind = "associative"
        elif isinstance(value, (DDBimodule, QuadriBimodule)):
            kind = "bimodule"
        else:
            raise DocumentError("document: kind needed for {!r}".format(type(value).__name__))
    return Document(kind, value, weight)
