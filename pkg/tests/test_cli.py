import json
import os
import unittest

from click.testing import CliRunner

from daos.field_dao import read_field_binary
from scripts.torsionlab import cli


class TestCli(unittest.TestCase):
    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(cli, ["--out", "out", *args])

    def test_exponents_table(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("exponents", "--d", "3", "--q", "2", "--q", "7/6")
            self.assertEqual(result.exit_code, 0, result.output)
            lines = result.output.splitlines()
            self.assertEqual(lines[0], "q,p,p_prime,admissible,weight_exponent")
            self.assertEqual(lines[1], "2,12/11,12,True,0")
            self.assertEqual(lines[2], "7/6,7/6,7,False,")
            self.assertTrue(os.path.isfile(os.path.join("out", "exponents.csv")))

    def test_drury_sequence(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("exponents", "--d", "3", "--drury", "1", "--iterations", "3")
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertIn("drury 5 75/11 1125/161", result.output)

    def test_analyze_writes_report(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("analyze", "--expr", "t", "--expr", "t^2", "--expr", "t^4", "--levels", "0", "2")
            self.assertEqual(result.exit_code, 0, result.output)
            with open(os.path.join("out", "analyze_report.json"), encoding="utf-8") as f:
                report = json.load(f)
            self.assertEqual(report["torsion"]["degree"], 1)
            self.assertEqual(len(report["level_sets"]), 3)
            self.assertEqual(report["config"]["kind"], "analyze")
            self.assertIn("timestamp", report)

    def test_analyze_curve_file(self):
        with self.runner.isolated_filesystem():
            with open("curve.json", "w", encoding="utf-8") as f:
                json.dump({"d": 2, "exprs": ["t", "t^2"]}, f)
            result = self.invoke("analyze", "--curve", "curve.json")
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertIn("1 pieces", result.output)

    def test_domain_error_exit_code(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("analyze", "--expr", "t", "--expr", "2t")
            self.assertEqual(result.exit_code, 2, result.output)

    def test_numerical_precondition_exit_code(self):
        with self.runner.isolated_filesystem():
            result = self.invoke("field", "--expr", "t", "--expr", "t^2", "--resolution", "8", "--nodes", "1")
            self.assertEqual(result.exit_code, 3, result.output)

    def test_usage_exit_codes(self):
        with self.runner.isolated_filesystem():
            self.assertEqual(self.invoke("analyze", "--expr", "t^^2", "--expr", "t").exit_code, 64)
            self.assertEqual(self.invoke("verify", "--suite", "exponents").exit_code, 64)
            self.assertEqual(self.invoke("exponents", "--d", "3").exit_code, 64)
            self.assertEqual(self.invoke("verify", "--suite", "nonsense").exit_code, 64)
            self.assertEqual(self.invoke("analyze", "--curve", "missing.json").exit_code, 64)

    def test_exponents_rejects_config(self):
        with self.runner.isolated_filesystem():
            with open("config.json", "w", encoding="utf-8") as f:
                json.dump({"seed": 1}, f)
            result = self.runner.invoke(cli, ["--config", "config.json", "exponents", "--d", "3", "--q", "2"])
            self.assertEqual(result.exit_code, 64, result.output)
            self.assertIn("no config file", result.output)
            self.assertFalse(os.path.exists(os.path.join("out", "exponents.csv")))

    def test_verify_exponent_suite(self):
        with self.runner.isolated_filesystem():
            result = self.runner.invoke(cli, ["--seed", "7", "--out", "out", "--quick", "verify", "--suite", "exponents"])
            self.assertEqual(result.exit_code, 0, result.output)
            self.assertIn("PASS drury_iteration", result.output)
            with open(os.path.join("out", "verify_exponents.json"), encoding="utf-8") as f:
                self.assertTrue(json.load(f)["passed"])

    def test_field_binary_dump(self):
        with self.runner.isolated_filesystem():
            result = self.invoke(
                "field", "--expr", "t", "--expr", "t^2", "--resolution", "8", "--nodes", "512", "--format", "binary"
            )
            self.assertEqual(result.exit_code, 0, result.output)
            box, resolution, values = read_field_binary(os.path.join("out", "field.tlfd"))
            self.assertEqual(resolution, [8, 8])
            self.assertEqual(box, [(-16.0, 16.0), (-16.0, 16.0)])
            self.assertEqual(values.shape, (8, 8))
            self.assertFalse(os.path.exists(os.path.join("out", "field.csv")))


if __name__ == "__main__":
    unittest.main()
