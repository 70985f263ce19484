import unittest

from fastapi.testclient import TestClient

from main import app

FLAT_AT_ORIGIN = [("exprs", "t"), ("exprs", "t^2"), ("exprs", "t^4")]


class TestApi(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.client = TestClient(app)

    def test_health(self):
        response = self.client.get("/api/v1/health/")
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json()["status"], "ok")

    def test_torsion(self):
        response = self.client.get("/api/v1/analysis/torsion", params=FLAT_AT_ORIGIN)
        self.assertEqual(response.status_code, 200)
        data = response.json()["data"]
        self.assertEqual(data["degree"], 1)
        self.assertEqual(data["profile"]["K_max"], 1)

    def test_level_sets(self):
        response = self.client.get("/api/v1/analysis/level_sets", params=FLAT_AT_ORIGIN + [("n", 0)])
        self.assertEqual(response.status_code, 200)
        data = response.json()["data"]
        self.assertEqual(data["n"], 0)
        self.assertEqual(len(data["intervals"]), 2)
        self.assertAlmostEqual(data["measure"], 1.0 / 24.0)

    def test_analyze_curve(self):
        response = self.client.post("/api/v1/analysis/curve", json={"exprs": ["t", "t^2"], "levels": [0, 1]})
        self.assertEqual(response.status_code, 200)
        data = response.json()["data"]
        self.assertEqual(len(data["decomposition"]["pieces"]), 1)
        self.assertEqual([row["n"] for row in data["level_sets"]], [0, 1])
        # |L| = 2 everywhere
        self.assertEqual(data["level_sets"][1]["measure"], "inf")

    def test_parse_error_is_bad_request(self):
        response = self.client.get("/api/v1/analysis/torsion", params=[("exprs", "t^^2"), ("exprs", "t")])
        self.assertEqual(response.status_code, 400)

    def test_degenerate_curve_is_unprocessable(self):
        response = self.client.get("/api/v1/analysis/level_sets", params=[("exprs", "t"), ("exprs", "2t"), ("n", 0)])
        self.assertEqual(response.status_code, 422)
        self.assertEqual(response.json()["detail"]["error"], "DegenerateTorsionError")
        response = self.client.post("/api/v1/analysis/curve", json={"exprs": ["t", "2t"]})
        self.assertEqual(response.status_code, 422)

    def test_injectivity_needs_seed(self):
        response = self.client.post("/api/v1/analysis/curve", json={"exprs": ["t", "t^2"], "injectivity_samples": 5})
        self.assertEqual(response.status_code, 422)

    def test_exponent_table(self):
        response = self.client.get("/api/v1/exponents/table", params={"d": 3, "q": "2"})
        self.assertEqual(response.status_code, 200)
        (row,) = response.json()["data"]["rows"]
        self.assertEqual(row["p_prime"], "12")
        self.assertTrue(row["admissible"])

    def test_drury(self):
        response = self.client.get("/api/v1/exponents/drury", params={"d": 3, "p0": "1", "iterations": 2})
        self.assertEqual(response.status_code, 200)
        data = response.json()["data"]
        self.assertEqual(data["sequence"], ["5", "75/11"])
        self.assertEqual(data["fixed_point"], "7")
        self.assertEqual(data["vertex"], ["3/5", "3/5"])
        self.assertTrue(data["inside_region"])
        response = self.client.get("/api/v1/exponents/drury", params={"d": 3, "p0": "8"})
        self.assertEqual(response.status_code, 422)


if __name__ == "__main__":
    unittest.main()
