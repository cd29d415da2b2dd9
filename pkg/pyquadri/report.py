import hashlib
import json
import logging

import numpy as np

from .util import basis_label, scalar_str, to_scalar

_LOGGER = logging.getLogger("pyquadri")


class QuadriError(Exception):
    """Base class for misuse of the library (never for a failed check)."""


class ShapeError(QuadriError, ValueError):
    pass


class PreconditionError(QuadriError):
    """An input violates an operation's precondition.

    The report that established the violation, if any, is kept in `report`.
    """

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class DocumentError(QuadriError):
    pass


class SearchError(QuadriError):
    pass


def axiom_tag(axiom):
    """Readable form of an axiom tuple, e.g. `(x nw y) nw z = x nw (y star z)`."""
    o1, o2, o3, o4 = axiom
    return "(x {} y) {} z = x {} (y {} z)".format(o1, o2, o3, o4)


class Violation(object):
    """A single nonzero residual: which identity, where, and by how much."""

    def __init__(self, tag, index, residual):
        self._tag = str(tag)
        self._index = tuple(int(i) for i in index)
        self._residual = tuple(to_scalar(v) for v in residual)

    @property
    def tag(self):
        return self._tag

    @property
    def index(self):
        return self._index

    @property
    def residual(self):
        return self._residual

    def __eq__(self, other):
        if not isinstance(other, Violation):
            return NotImplemented
        return (self._tag, self._index, self._residual) == (other._tag, other._index, other._residual)

    def __hash__(self):
        return hash((self._tag, self._index, self._residual))

    def __repr__(self):
        return "Violation({!r}, {!r})".format(self._tag, self._index)

    def to_dict(self):
        return {
            "tag": self._tag,
            "index": list(self._index),
            "residual": [scalar_str(v) for v in self._residual],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data["tag"], data["index"], data["residual"])


class Report(object):
    """Outcome of a check.

    A report passes exactly when it holds no violations. Notes carry
    informational verdicts (for example skewness of a tensor) that do not
    by themselves fail the report.
    """

    def __init__(self, subject, violations=None, notes=None):
        self._subject = subject
        self._violations = list(violations or [])
        self._notes = dict(notes or {})

    @property
    def subject(self):
        return self._subject

    @property
    def passed(self):
        return len(self._violations) == 0

    @property
    def violations(self):
        return list(self._violations)

    @property
    def notes(self):
        return dict(self._notes)

    def note(self, key, value):
        self._notes[key] = value

    def add(self, tag, index, residual):
        self._violations.append(Violation(tag, index, residual))

    def add_residuals(self, tag, residuals, axes):
        """Record every nonzero entry block of `residuals`.

        The first `axes` axes index the location (basis triple, basis pair...)
        and the remaining axes hold the residual value at that location.
        """
        residuals = np.asarray(residuals, dtype=object)
        for index in np.ndindex(*residuals.shape[:axes]):
            value = residuals[index]
            flat = list(value.flat) if isinstance(value, np.ndarray) else [value]
            if any(v != 0 for v in flat):
                self.add(tag, index, flat)

    def merge(self, other, prefix=None):
        """Fold another report's violations and notes into this one."""
        for v in other.violations:
            tag = v.tag if prefix is None else "{}: {}".format(prefix, v.tag)
            self._violations.append(Violation(tag, v.index, v.residual))
        for key, value in other.notes.items():
            self._notes[key if prefix is None else "{}: {}".format(prefix, key)] = value
        return self

    def tags(self):
        return sorted(set(v.tag for v in self._violations))

    def locations(self):
        """Set of (tag, index) pairs, the comparison key of two-route checks."""
        return set((v.tag, v.index) for v in self._violations)

    def digest(self):
        canon = json.dumps([v.to_dict() for v in self._violations], sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()

    def log(self):
        _LOGGER.debug("{}: passed={} violations={}".format(self._subject, self.passed, len(self._violations)))
        return self

    def __eq__(self, other):
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return "Report({!r}, passed={}, violations={})".format(self._subject, self.passed, len(self._violations))

    def to_dict(self):
        return {
            "subject": self._subject,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self._violations],
            "notes": self._notes,
        }

    @classmethod
    def from_dict(cls, data):
        report = cls(data["subject"],
                     [Violation.from_dict(v) for v in data.get("violations", [])],
                     data.get("notes", {}))
        if report.passed != bool(data.get("passed", report.passed)):
            raise DocumentError("report passed flag disagrees with its violations")
        return report

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self, split=None):
        lines = ["{}: {}".format(self._subject, "PASS" if self.passed else "FAIL")]
        for key in sorted(self._notes):
            lines.append("  note {} = {}".format(key, self._notes[key]))
        for v in self._violations:
            where = ", ".join(basis_label(i, split) for i in v.index)
            lines.append("  {} @ ({}) : [{}]".format(v.tag, where, ", ".join(scalar_str(r) for r in v.residual)))
        return "\n".join(lines)
