import json
import threading

from .constant import CHECKER_VERSION


def certificate(report):
    """What a catalog keeps of the check that admitted a record."""
    return {"checker": CHECKER_VERSION, "passed": report.passed, "digest": report.digest()}


def _line(record):
    return json.dumps(record, sort_keys=True, separators=(",", ":")) + "\n"


class QuadriCatalog(object):
    """Certified documents keyed by "kind/dimN/index", one JSON record per line on disk."""

    def __init__(self, owner):
        self._owner = owner
        self._catalog_file = self._owner.cfg.catalog_file if self._owner.cfg.save_catalog else None
        self._db = {}
        self._lock = threading.Lock()
        self.load()

    def load(self):
        if self._catalog_file is not None:
            try:
                with self._lock:
                    with open(self._catalog_file, "r", encoding="utf-8") as dump:
                        for line in dump:
                            if line.strip():
                                record = json.loads(line)
                                self._db[record["key"]] = record
            except FileNotFoundError:
                self._owner.debug("storage: file not read")
            except (OSError, ValueError, KeyError):
                self._owner.warning("storage: catalog {} is damaged".format(self._catalog_file))

    def save(self):
        if self._catalog_file is not None:
            try:
                with self._lock:
                    with open(self._catalog_file, "w", encoding="utf-8") as dump:
                        for key in sorted(self._db):
                            dump.write(_line(self._db[key]))
            except OSError:
                self._owner.warning("storage: file not written")

    def set(self, key, document, report, prefix="catalog"):
        """Store a document dict under `key` (a string or a list of parts) with the certificate of `report`."""
        ekey = key if not isinstance(key, list) else "/".join(str(k) for k in key)
        record = {"key": ekey, "document": document, "certificate": certificate(report)}
        output = "set:" + ekey + "=" + str(record["certificate"])
        self._owner.debug(f"{prefix}: {output[:80]}")
        with self._lock:
            self._db[ekey] = record
            return record

    def records(self, prefix=""):
        """Records whose key starts with `prefix`, sorted by key."""
        with self._lock:
            return [self._db[key] for key in sorted(self._db) if key.startswith(prefix)]

    def to_ndjson(self, prefix=""):
        return "".join(_line(r) for r in self.records(prefix))
