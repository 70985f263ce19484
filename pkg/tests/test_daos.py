import csv
import json
import os
import tempfile
import unittest

import numpy as np

from daos.curve_dao import load_curve, parse_curve_document
from daos.field_dao import read_field_binary, read_field_csv, write_field_binary, write_field_csv
from daos.report_dao import DECOMPOSITION_REPORT_SCHEMA, render_report, write_csv, write_report
from daos.schema_loader import load_schema, read_json
from services.curve.curve import PolyCurve
from services.experiments.analyze import analyze_curve
from services.oscillatory.extension import ExtensionField
from services.oscillatory.grid import GridSpec
from services.poly.polynomial import Polynomial
from utils.errors import ConfigError


class TestCurveDao(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def _write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_expressions(self):
        curve = parse_curve_document({"d": 3, "exprs": ["t", "t^2/2", "t^3/6"]})
        self.assertEqual(curve.d, 3)
        self.assertTrue(curve.torsion.allclose(Polynomial.constant(1.0)))

    def test_components(self):
        curve = parse_curve_document({"components": [[0, 1], [0, 0, 1]]})
        self.assertEqual(curve.torsion, Polynomial.constant(2.0))

    def test_schema_rejects(self):
        with self.assertRaises(ConfigError):
            parse_curve_document({"d": 2})
        with self.assertRaises(ConfigError):
            parse_curve_document({"exprs": ["t", "t^2"], "colour": "red"})
        with self.assertRaises(ConfigError) as ctx:
            parse_curve_document({"exprs": ["t", 2]})
        self.assertEqual(ctx.exception.context["location"], "exprs/1")

    def test_load_curve(self):
        path = self._write("curve.json", json.dumps({"exprs": ["t", "t^2", "t^4"]}))
        self.assertEqual(load_curve(path).torsion, Polynomial([0.0, 48.0]))

    def test_missing_and_malformed_files(self):
        with self.assertRaises(ConfigError):
            load_curve(os.path.join(self.tmp.name, "absent.json"))
        path = self._write("broken.json", '{"exprs": ["t",\n')
        with self.assertRaises(ConfigError) as ctx:
            read_json(path)
        self.assertEqual(ctx.exception.context["line"], 2)

    def test_unknown_schema(self):
        with self.assertRaises(FileNotFoundError):
            load_schema("no_such_schema.json")


class TestReportDao(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def test_render_is_deterministic_without_timestamp(self):
        payload = {"b": np.float64(0.5), "a": [float("inf"), np.int64(3)]}
        first = render_report(payload, config={"seed": 1}, timestamp=False)
        self.assertEqual(first, render_report(payload, config={"seed": 1}, timestamp=False))
        document = json.loads(first)
        self.assertEqual(list(document), ["a", "b", "config"])
        self.assertEqual(document["a"], ["inf", 3])
        self.assertIn("timestamp", json.loads(render_report(payload)))

    def test_write_report(self):
        path = write_report(os.path.join(self.tmp.name, "nested", "report.json"), {"ok": True}, timestamp=False)
        with open(path, "r", encoding="utf-8") as f:
            self.assertEqual(json.load(f), {"ok": True})

    def test_report_schema(self):
        path = os.path.join(self.tmp.name, "analyze.json")
        with self.assertRaises(ConfigError):
            write_report(path, {"curve": {"d": 2}}, schema=DECOMPOSITION_REPORT_SCHEMA)
        self.assertFalse(os.path.exists(path))
        report = analyze_curve(PolyCurve.from_exprs(["t", "t^2", "t^4"]), levels=(-1, 1))
        write_report(path, report, config={"kind": "analyze"}, schema=DECOMPOSITION_REPORT_SCHEMA)
        self.assertTrue(os.path.isfile(path))

    def test_write_csv(self):
        path = os.path.join(self.tmp.name, "table.csv")
        write_csv(path, ["q", "p"], [{"q": "2", "p": None}, ["7/6", "7/6"]])
        with open(path, "r", encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
        self.assertEqual(rows, [["q", "p"], ["2", ""], ["7/6", "7/6"]])


class TestFieldDao(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        grid = GridSpec(box=[(-1.0, 1.0), (0.0, 2.0)], resolution=[3, 4])
        values = np.arange(12, dtype=float).reshape(3, 4) + 1j * np.linspace(-1.0, 1.0, 12).reshape(3, 4)
        self.field = ExtensionField(grid, values, True, 0.0)

    def test_csv(self):
        path = write_field_csv(os.path.join(self.tmp.name, "field.csv"), self.field)
        box, resolution, values = read_field_csv(path)
        self.assertEqual(box, [(-1.0, 1.0), (0.0, 2.0)])
        self.assertEqual(resolution, [3, 4])
        np.testing.assert_array_equal(values, self.field.values)

    def test_binary(self):
        path = write_field_binary(os.path.join(self.tmp.name, "field.bin"), self.field)
        with open(path, "rb") as f:
            self.assertEqual(f.read(4), b"TLFD")
        box, resolution, values = read_field_binary(path)
        self.assertEqual(box, [(-1.0, 1.0), (0.0, 2.0)])
        self.assertEqual(resolution, [3, 4])
        np.testing.assert_array_equal(values, self.field.values)

    def test_rejects_foreign_files(self):
        path = os.path.join(self.tmp.name, "other.bin")
        with open(path, "wb") as f:
            f.write(b"PNG\x00" + bytes(32))
        with self.assertRaises(ConfigError):
            read_field_binary(path)
        path = os.path.join(self.tmp.name, "other.csv")
        with open(path, "w", encoding="utf-8") as f:
            f.write("x,y\n1,2\n")
        with self.assertRaises(ConfigError):
            read_field_csv(path)


if __name__ == "__main__":
    unittest.main()
