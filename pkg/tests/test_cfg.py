from fractions import Fraction
from unittest import TestCase
import tests.quadri


class TestQuadriCfg(TestCase):
    def test_defaults(self):
        quadri = tests.quadri.PyQuadri()
        self.assertEqual(quadri.cfg.name, "pyquadri")
        self.assertEqual(quadri.cfg.storage_dir, "./")
        self.assertEqual(quadri.cfg.catalog_file, "./pyquadri.catalog.ndjson")
        self.assertFalse(quadri.cfg.save_catalog)
        self.assertEqual(quadri.cfg.lanes, 1)
        self.assertEqual(quadri.cfg.budget, 100000)
        self.assertEqual(quadri.cfg.entries, (-1, 0, 1))
        self.assertEqual(quadri.cfg.seed, 0)
        self.assertEqual(quadri.cfg.coefficient_bound, 3)
        self.assertEqual(quadri.cfg.report_format, "json")

    def test_catalog_00(self):
        quadri = tests.quadri.PyQuadri(name="dim3", storage_dir="/tmp/catalogs")
        self.assertEqual(quadri.cfg.catalog_file, "/tmp/catalogs/dim3.catalog.ndjson")

    def test_catalog_10(self):
        quadri = tests.quadri.PyQuadri(name="dim3", catalog_file="/tmp/mine.ndjson")
        self.assertEqual(quadri.cfg.catalog_file, "/tmp/mine.ndjson")

    def test_lanes(self):
        self.assertEqual(tests.quadri.PyQuadri(lanes=0).cfg.lanes, 1)
        self.assertEqual(tests.quadri.PyQuadri(lanes="4").cfg.lanes, 4)

    def test_entries_00(self):
        quadri = tests.quadri.PyQuadri(entries="1, 0,-1/2,1")
        self.assertEqual(quadri.cfg.entries, (Fraction(-1, 2), 0, 1))

    def test_entries_10(self):
        quadri = tests.quadri.PyQuadri(entries=[2, "1/3"])
        self.assertEqual(quadri.cfg.entries, (Fraction(1, 3), 2))

    def test_search(self):
        quadri = tests.quadri.PyQuadri(budget="50", seed=7, coefficient_bound=5)
        self.assertEqual(quadri.cfg.budget, 50)
        self.assertEqual(quadri.cfg.seed, 7)
        self.assertEqual(quadri.cfg.coefficient_bound, 5)
