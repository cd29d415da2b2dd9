import json
import os
from unittest import TestCase

from click.testing import CliRunner

from pyquadri.main import cli
from tests.quadri import fixture


class TestCli(TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def run_cli(self, *args):
        return self.runner.invoke(cli, [fixture(a) if os.path.exists(fixture(a)) else a for a in args])

    def test_check_pass(self):
        result = self.run_cli("check", "quadri", "zero2.json")
        self.assertEqual(result.exit_code, 0)
        self.assertTrue(json.loads(result.stdout)["passed"])

    def test_check_fail(self):
        result = self.run_cli("check", "quadri", "bad-two-op.json")
        self.assertEqual(result.exit_code, 1)
        violations = json.loads(result.stdout)["violations"]
        self.assertEqual(sorted(v["tag"] for v in violations),
                         ["(x nw y) nw z = x nw (y star z)", "(x star y) se z = x se (y se z)"])
        self.assertTrue(all(v["index"] == [0, 0, 0] for v in violations))

    def test_check_text(self):
        result = self.run_cli("-f", "text", "check", "quadri", "bad-two-op.json")
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(result.stdout.splitlines()[0], "quadri: FAIL")

    def test_check_several(self):
        result = self.run_cli("-f", "text", "check", "quadri", "zero2.json", "se1.json")
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.stdout.splitlines(), ["quadri: PASS", "quadri: PASS"])

    def test_errors(self):
        for args in (("check", "quadri", "bad-version.json"),
                     ("check", "quadri", "missing.json"),
                     ("check", "dendriform", "se1.json"),
                     ("check", "lie", "se1.json"),
                     ("qeq", "check", "se1.json", "skew.json")):
            result = self.run_cli(*args)
            self.assertEqual(result.exit_code, 2, args)

    def test_fatal_message(self):
        result = self.run_cli("check", "quadri", "bad-version.json")
        self.assertIn("FATAL-ERROR:", result.output)

    def test_other_checks(self):
        for args in (("check", "dendriform", "dd-prec.json"),
                     ("check", "bialgebra", "se1-bialgebra.json"),
                     ("check", "bimodule", "dd-prec.json", "dd-regular.json"),
                     ("check", "invariant", "zero2.json", "hyperbolic1.json"),
                     ("check", "cocycle", "dd-prec.json", "form-one.json"),
                     ("check", "manin", "zero2.json"),
                     ("qeq", "check", "zero2.json", "skew.json")):
            result = self.run_cli(*args)
            self.assertEqual(result.exit_code, 0, args)

    def test_derive(self):
        result = self.run_cli("derive", "vertical", "se1.json")
        self.assertEqual(result.exit_code, 0)
        doc = json.loads(result.stdout)
        self.assertEqual(doc["kind"], "dendriform")
        self.assertEqual(doc["ops"], {"prec": [[["0"]]], "succ": [[["1"]]]})

        doc = json.loads(self.run_cli("derive", "assoc", "se1.json").stdout)
        self.assertEqual(doc["kind"], "associative")
        self.assertEqual(doc["ops"], {"star": [[["1"]]]})

        doc = json.loads(self.run_cli("derive", "dual", "dd-regular.json").stdout)
        self.assertEqual(doc["maps"], {"l_prec": [[["0"]]], "r_prec": [[["1"]]],
                                       "l_succ": [[["1"]]], "r_succ": [[["-1"]]]})

    def test_derive_output(self):
        with self.runner.isolated_filesystem():
            result = self.run_cli("derive", "dual", "se1-bialgebra.json", "-o", "dual.json")
            self.assertEqual(result.exit_code, 0)
            self.assertEqual(result.stdout, "")
            check = self.runner.invoke(cli, ["check", "bialgebra", "dual.json"])
            self.assertEqual(check.exit_code, 0)

    def test_enumerate(self):
        with self.runner.isolated_filesystem():
            result = self.run_cli("enumerate", "quadri", "--dim", "1", "--entries", "0,1", "-o", "cat.ndjson")
            self.assertEqual(result.exit_code, 0)
            summary = json.loads(result.stdout)
            self.assertEqual(summary["found"], 5)
            self.assertEqual(summary["total"], 16)
            self.assertEqual(summary["coverage"], "1")
            self.assertTrue(summary["exhaustive"])
            self.assertEqual(len(summary["structures"]), 5)
            with open("cat.ndjson", "r", encoding="utf-8") as f:
                records = [json.loads(line) for line in f]
        self.assertEqual(len(records), 5)
        self.assertEqual(records[0]["key"], "quadri/dim1/000000")
        self.assertTrue(all(r["certificate"]["passed"] for r in records))

    def test_enumerate_strict(self):
        result = self.run_cli("enumerate", "quadri", "--dim", "1", "--budget", "10", "--strict")
        self.assertEqual(result.exit_code, 2)
        result = self.run_cli("enumerate", "quadri", "--dim", "1", "--budget", "10", "--seed", "2")
        self.assertEqual(result.exit_code, 0)
        self.assertFalse(json.loads(result.stdout)["exhaustive"])

    def test_qeq_search(self):
        result = self.run_cli("qeq", "search", "zero2.json")
        self.assertEqual(result.exit_code, 0)
        summary = json.loads(result.stdout)
        self.assertEqual(summary["found"], 3)
        self.assertIn([["0", "1"], ["-1", "0"]], summary["solutions"])
        result = self.run_cli("qeq", "search", "zero2.json", "--nondegenerate")
        self.assertEqual(json.loads(result.stdout)["found"], 2)

    def test_double(self):
        with self.runner.isolated_filesystem():
            result = self.run_cli("double", "se1.json", "zero1-tensor.json", "-o", "double.json")
            self.assertEqual(result.exit_code, 0)
            with open("double.json", "r", encoding="utf-8") as f:
                doc = json.load(f)
            self.assertEqual(doc["kind"], "bialgebra")
            self.assertEqual(doc["dim"], 2)
            family = self.run_cli("op", "family", "double.json", "zero1-tensor.json", "--kind", "G2")
            self.assertEqual(family.exit_code, 0)

    def test_double_bad_tensor(self):
        self.assertEqual(self.run_cli("double", "se1.json", "one1-tensor.json").exit_code, 2)

    def test_operators(self):
        self.assertEqual(self.run_cli("op", "rb-check", "se1.json", "identity1.json").exit_code, 0)
        self.assertEqual(self.run_cli("op", "rb-check", "se1.json", "identity1.json", "--lambda", "0").exit_code, 1)
        self.assertEqual(self.run_cli("op", "nij-check", "se1.json", "identity1.json").exit_code, 0)
        self.assertEqual(self.run_cli("op", "o-check", "dd-prec.json", "dd-regular.json",
                                      "zero1-operator.json").exit_code, 0)
        self.assertEqual(self.run_cli("op", "rb-check", "se1.json", "skew.json").exit_code, 2)

    def test_report(self):
        with self.runner.isolated_filesystem():
            first = self.run_cli("check", "quadri", "bad-two-op.json")
            with open("report.json", "w", encoding="utf-8") as f:
                f.write(first.stdout)
            again = self.runner.invoke(cli, ["report", "report.json"])
            self.assertEqual(again.exit_code, 1)
            self.assertEqual(again.stdout, first.stdout)
            text = self.runner.invoke(cli, ["-f", "text", "report", "report.json", "--split", "1"])
            self.assertIn("@ (e_0, e_0, e_0)", text.stdout)
            self.assertTrue(os.path.exists("report.json"))

    def test_zero_denominator(self):
        for args in (("op", "rb-check", "se1.json", "identity1.json", "--lambda", "1/0"),
                     ("enumerate", "quadri", "--dim", "1", "--entries", "0,1/0"),
                     ("qeq", "search", "zero2.json", "--entries", "1/0")):
            result = self.run_cli(*args)
            self.assertEqual(result.exit_code, 2, args)
            self.assertIn("FATAL-ERROR:", result.output)

    def test_report_zero_denominator(self):
        with self.runner.isolated_filesystem():
            with open("report.json", "w", encoding="utf-8") as f:
                json.dump({"subject": "quadri", "passed": False, "notes": {},
                           "violations": [{"tag": "t", "index": [0], "residual": ["1/0"]}]}, f)
            self.assertEqual(self.runner.invoke(cli, ["report", "report.json"]).exit_code, 2)

    def test_golden_output(self):
        for name, args in (("golden-check-bad-two-op.json", ("check", "quadri", "bad-two-op.json")),
                           ("golden-derive-vertical-se1.json", ("derive", "vertical", "se1.json"))):
            with open(fixture(name), "r", encoding="utf-8") as f:
                expected = f.read()
            self.assertEqual(self.run_cli(*args).stdout, expected, name)
