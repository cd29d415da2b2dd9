import logging
import os

from .background import QuadriBackground
from .bialgebra import check_q_equation, double_certificates, drinfeld_double
from .cfg import QuadriCfg
from .document import document_of
from .report import Report
from .search import SearchSpec, enumerate_structures, random_skew_tensor, search_q_solutions
from .storage import QuadriCatalog

_LOGGER = logging.getLogger("pyquadri")

__version__ = "0.1.0"


class PyQuadri(object):
    """Entry point for the long running pyquadri operations.

    The algebra, bialgebra and operator checks are plain functions in their
    modules. This class wires configuration, worker lanes and the catalog
    into the searches and the certification of doubles.

    **Optional `kwargs` parameters:**

    * **lanes** - Number of worker threads candidate blocks are spread over. Default `1`.
    * **budget** - Largest candidate space walked exhaustively; bigger ones are sampled. Default `100000`.
    * **entries** - Coefficient set of searches, e.g. ``"-1,0,1"``. Default ``(-1, 0, 1)``.
    * **seed** - Seed of sampled searches and random tensors. Default `0`.
    * **coefficient_bound** - Bound on numerators and denominators of random tensors. Default `3`.
    * **save_catalog** - Keep search hits in a catalog file across runs. Default `False`.
    * **storage_dir** - Where the catalog lives. Default ``./``.
    * **catalog_file** - Catalog path. Default is `${storage_dir}/${name}.catalog.ndjson`.
    * **name** - Name used for the catalog file.
    * **report_format** - `json` or `text`, used by the command line.
    * **verbose** - If `True`, provide extra debug in the logs.
    """

    def __init__(self, **kwargs):
        """Constructor for the PyQuadri object."""
        self.info(f"pyquadri {__version__} starting...")

        self._last_error = None
        self._cfg = QuadriCfg(self, **kwargs)

        if self._cfg.save_catalog:
            try:
                if not os.path.exists(self._cfg.storage_dir):
                    os.mkdir(self._cfg.storage_dir)
            except OSError:
                self.warning(f"Problem creating {self._cfg.storage_dir}")

        self._bg = QuadriBackground(self, self._cfg.lanes)
        self._st = QuadriCatalog(self)

    def __repr__(self):
        return "<{0}: {1}>".format(self.__class__.__name__, self._cfg.name)

    def stop(self):
        """Save the catalog and stop the worker lanes."""
        self._st.save()
        self._bg.stop()

    @property
    def cfg(self):
        return self._cfg

    @property
    def bg(self):
        return self._bg

    @property
    def catalog(self):
        return self._st

    def _catalog_hits(self, prefix, values, reports):
        for index, (value, report) in enumerate(zip(values, reports)):
            self._st.set(prefix + ["{:06d}".format(index)], value.to_dict(), report)

    def enumerate(self, kind, dim, entries=None, mask=None, max_nonzero=None, seed=None, budget=None,
                  strict=False, catalog=False):
        spec = SearchSpec(kind, dim,
                          coefficient_set=self._cfg.entries if entries is None else entries,
                          template=mask,
                          seed=self._cfg.seed if seed is None else seed,
                          budget=self._cfg.budget if budget is None else budget,
                          max_nonzero=max_nonzero)
        self.debug("search: {} dim {} over {} candidates on {} lanes".format(kind, dim, spec.total(), self._bg.lanes))
        result = enumerate_structures(spec, runner=self._bg.run_all, strict=strict)
        if catalog:
            docs = [document_of(algebra) for algebra in result]
            self._catalog_hits([kind, "dim{}".format(dim)], docs, [spec.report(c) for c in result.candidates])
        return result

    def search_q(self, q, entries=None, mask=None, skew=True, nondegenerate=False, seed=None, budget=None,
                 catalog=False):
        result = search_q_solutions(q,
                                    coefficient_set=self._cfg.entries if entries is None else entries,
                                    budget=self._cfg.budget if budget is None else budget,
                                    require_skew=skew,
                                    require_nondegenerate=nondegenerate,
                                    template=mask,
                                    seed=self._cfg.seed if seed is None else seed,
                                    runner=self._bg.run_all)
        if catalog:
            docs = [document_of(r, kind="tensor") for r in result]
            self._catalog_hits(["tensor", "dim{}".format(q.dim)], docs, [check_q_equation(q, r) for r in result])
        return result

    def random_skew(self, dim, seed=None):
        return random_skew_tensor(dim, self._cfg.seed if seed is None else seed, self._cfg.coefficient_bound)

    def certify_double(self, qb):
        """Drinfeld double of a quadri-bialgebra with its certifying checks spread over the lanes."""
        algebra, coalgebra, _ = drinfeld_double(qb, certify=False)
        checks = double_certificates(qb, algebra, coalgebra)
        report = Report("drinfeld-double")
        for name, part in zip(checks.keys(), self._bg.run_all(list(checks.values()))):
            report.merge(part, prefix=name)
        self.debug("double: certified={} on {} lanes".format(report.passed, self._bg.lanes))
        return algebra, coalgebra, report.log()

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
