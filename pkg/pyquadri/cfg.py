import os

from .constant import (
    CATALOG_SUFFIX,
    DEFAULT_BUDGET,
    DEFAULT_COEFFICIENT_BOUND,
    DEFAULT_ENTRIES,
    DEFAULT_LANES,
    DEFAULT_NAME,
    DEFAULT_REPORT_FORMAT,
    DEFAULT_SEED,
    DEFAULT_STORAGE_DIR,
)
from .util import parse_entries


class QuadriCfg(object):
    """Helper class to get at pyquadri configuration options.

    Config is passed in as kwargs and parsed out by the property methods.
    """

    def __init__(self, owner, **kwargs):
        """The constructor.

        Args:
            kwargs (kwargs): Configuration options.

        """
        self._owner = owner
        self._kw = kwargs
        self._owner.debug("config: loaded")

    @property
    def name(self):
        return self._kw.get("name", DEFAULT_NAME)

    @property
    def storage_dir(self):
        return self._kw.get("storage_dir", DEFAULT_STORAGE_DIR)

    @property
    def catalog_file(self):
        return self._kw.get("catalog_file", os.path.join(self.storage_dir, self.name + CATALOG_SUFFIX))

    @property
    def save_catalog(self):
        return self._kw.get("save_catalog", False)

    @property
    def lanes(self):
        return max(1, int(self._kw.get("lanes", DEFAULT_LANES)))

    @property
    def budget(self):
        return int(self._kw.get("budget", DEFAULT_BUDGET))

    @property
    def entries(self):
        return parse_entries(self._kw.get("entries", DEFAULT_ENTRIES))

    @property
    def seed(self):
        return int(self._kw.get("seed", DEFAULT_SEED))

    @property
    def coefficient_bound(self):
        return int(self._kw.get("coefficient_bound", DEFAULT_COEFFICIENT_BOUND))

    @property
    def verbose(self):
        return self._kw.get("verbose", False)

    @property
    def report_format(self):
        return self._kw.get("report_format", DEFAULT_REPORT_FORMAT)
