import unittest

import numpy as np
import portion as P
from sympy import Rational

from services.curve.affine import normalize_at
from services.curve.curve import PolyCurve
from services.decompose.dw import dw_decompose
from services.decompose.pieces import DecompositionPiece
from services.inequality_lab.bands import freq_band_check, vanishing_order
from services.inequality_lab.convolution import ALL, convolution_density_2d, convolution_mass
from services.inequality_lab.decay import (
    multilinear_decay_fit,
    pigeonhole_split_index,
    predicted_decay_exponent,
    split_for_scales,
)
from services.inequality_lab.multilinear import multilinear_T
from services.inequality_lab.scans import (
    attach_injectivity,
    geometric_ratio_scan,
    injectivity_probe,
    offspring_torsion_check,
    require_normalized,
)
from services.oscillatory.functions import Indicator
from services.poly.parser import parse_poly
from utils.errors import DegenerateTorsionError, DomainError, EmptyPieceError, NotNormalizedError

PARABOLA = PolyCurve.from_exprs(["t", "t^2"])
FLAT_AT_ORIGIN = PolyCurve.from_exprs(["t", "t^2", "t^4"])


def one(t):
    return np.ones_like(np.asarray(t, dtype=float))


class TestGeometricRatioScan(unittest.TestCase):
    def test_moment_curves(self):
        report = geometric_ratio_scan(PolyCurve.moment(2), (0.0, 1.0), 500, seed=7)
        self.assertAlmostEqual(report.min_ratio, 1.0, places=10)
        report = geometric_ratio_scan(PolyCurve.moment(3), (-1.0, 1.0), 500, seed=7)
        self.assertAlmostEqual(report.min_ratio, 0.5, places=10)
        self.assertEqual(len(report.argmin), 3)

    def test_lower_bound_away_from_flat_point(self):
        report = geometric_ratio_scan(FLAT_AT_ORIGIN, (0.5, 1.0), 3000, seed=1)
        self.assertGreaterEqual(report.min_ratio, 0.5 - 1e-12)
        self.assertLess(report.min_ratio, 0.51)
        self.assertEqual(report.history[-1][0], 3000)
        values = [best for _, best in report.history]
        self.assertEqual(values, sorted(values, reverse=True))

    def test_deterministic(self):
        first = geometric_ratio_scan(FLAT_AT_ORIGIN, (0.2, 2.0), 1500, seed=42)
        second = geometric_ratio_scan(FLAT_AT_ORIGIN, (0.2, 2.0), 1500, seed=42)
        self.assertEqual(first.to_dict(), second.to_dict())

    def test_rejects_torsion_zero_inside(self):
        with self.assertRaises(DegenerateTorsionError):
            geometric_ratio_scan(FLAT_AT_ORIGIN, (-1.0, 1.0), 100, seed=0)

    def test_rejects_bad_input(self):
        with self.assertRaises(DomainError):
            geometric_ratio_scan(FLAT_AT_ORIGIN, (0.5, 1.0), 2, seed=0)
        with self.assertRaises(DomainError):
            geometric_ratio_scan(FLAT_AT_ORIGIN, P.closed(0.5, P.inf), 100, seed=0)
        with self.assertRaises(EmptyPieceError):
            geometric_ratio_scan(FLAT_AT_ORIGIN, (1.0, 1.0), 100, seed=0)


class TestOffspringTorsion(unittest.TestCase):
    def test_normalization_required(self):
        require_normalized(PolyCurve.moment(3))
        with self.assertRaises(NotNormalizedError):
            require_normalized(PARABOLA)
        with self.assertRaises(NotNormalizedError):
            offspring_torsion_check(PARABOLA, 0.1, 4, seed=0)

    def test_moment_curve_is_exact(self):
        self.assertLess(offspring_torsion_check(PolyCurve.moment(3), 0.3, 20, seed=3), 1e-12)

    def test_deviation_shrinks_with_delta(self):
        _, normalized = normalize_at(FLAT_AT_ORIGIN, 1.0)
        small = offspring_torsion_check(normalized, 0.01, 30, seed=5)
        large = offspring_torsion_check(normalized, 0.5, 30, seed=5)
        self.assertGreater(large, 0.0)
        self.assertLess(small, large)

    def test_delta_range(self):
        with self.assertRaises(DomainError):
            offspring_torsion_check(PolyCurve.moment(2), 1.0, 1, seed=0)


class TestInjectivity(unittest.TestCase):
    def test_moment_curve(self):
        report = injectivity_probe(PolyCurve.moment(2), (0.0, 1.0), 400, seed=9)
        self.assertGreater(report.min_image_gap, 0.0)
        self.assertEqual([len(w) for w in report.witness], [2, 2])
        self.assertEqual(report.to_dict(), injectivity_probe(PolyCurve.moment(2), (0.0, 1.0), 400, seed=9).to_dict())

    def test_attach_to_decomposition(self):
        decomposition = attach_injectivity(dw_decompose(FLAT_AT_ORIGIN), FLAT_AT_ORIGIN, 100, seed=1)
        # both pieces are unbounded
        self.assertEqual(decomposition.injectivity_report["pieces_probed"], 0)
        self.assertIsNone(decomposition.injectivity_report["min_floor"])


class TestMultilinearForms(unittest.TestCase):
    def test_first_order(self):
        value = multilinear_T(PARABOLA, [one], supports=[(0.0, 1.0)])
        self.assertAlmostEqual(value, 2.0 ** 0.25, places=8)

    def test_second_order(self):
        value = multilinear_T(PARABOLA, [one, one], supports=[(0.0, 1.0), (0.0, 1.0)], quad_nodes=48)
        self.assertAlmostEqual(value, 2.0 ** 0.5 * 8.0 / 3.0, delta=5e-3)

    def test_supports_from_functions(self):
        value = multilinear_T(PolyCurve.moment(2), [Indicator(0.0, 2.0)])
        self.assertAlmostEqual(value, 2.0, places=8)

    def test_order_limits(self):
        with self.assertRaises(DomainError):
            multilinear_T(PARABOLA, [one] * 4, supports=[(0.0, 1.0)] * 4)
        with self.assertRaises(DomainError):
            multilinear_T(PARABOLA, [one], supports=[(0.0, float("inf"))])


class TestConvolutionDensity(unittest.TestCase):
    def test_values(self):
        density = convolution_density_2d(PARABOLA, lambda t: 1.0, (1.0, 1.0))
        self.assertAlmostEqual(density.value, 2.0 ** (2.0 / 3.0) / 2.0)
        self.assertFalse(density.singular)
        np.testing.assert_allclose(density.solutions[0], (0.0, 1.0), atol=1e-12)
        both = convolution_density_2d(PARABOLA, lambda t: 1.0, (1.0, 1.0), ALL)
        self.assertAlmostEqual(both.value, 2.0 ** (2.0 / 3.0))

    def test_outside_image_and_fold(self):
        self.assertEqual(convolution_density_2d(PARABOLA, lambda t: 1.0, (0.0, -1.0)).value, 0.0)
        fold = convolution_density_2d(PARABOLA, lambda t: 1.0, (1.0, 0.5))
        self.assertTrue(fold.singular)

    def test_mass(self):
        mass = convolution_mass(PARABOLA, lambda t: 1.0, (0.0, 1.0), resolution=64)
        self.assertAlmostEqual(mass, 2.0 ** (2.0 / 3.0), places=6)

    def test_domain(self):
        with self.assertRaises(DomainError):
            convolution_density_2d(FLAT_AT_ORIGIN, lambda t: 1.0, (0.0, 0.0, 0.0))
        with self.assertRaises(DomainError):
            convolution_density_2d(PolyCurve.from_exprs(["t", "t^3"]), lambda t: 1.0, (0.0, 0.0))
        with self.assertRaises(DomainError):
            convolution_density_2d(PARABOLA, lambda t: 1.0, (1.0, 1.0), "decreasing")


class TestFrequencyBands(unittest.TestCase):
    def test_linear_first_coordinate(self):
        piece = DecompositionPiece(P.open(0.0, P.inf), 0j, 1, 48.0)
        band = freq_band_check(FLAT_AT_ORIGIN, piece, 0)
        self.assertEqual(band.ell, 0)
        self.assertAlmostEqual(band.band[0], 1.0)
        self.assertAlmostEqual(band.band[1], 2.0)
        self.assertAlmostEqual(band.comparability, 1.0)

    def test_quadratic_first_coordinate(self):
        piece = DecompositionPiece(P.open(0.0, P.inf), 0j, 2, 6.0)
        band = freq_band_check(PolyCurve.from_exprs(["t^2", "t^3"]), piece, -1)
        self.assertEqual(band.ell, 1)
        self.assertAlmostEqual(band.band[0], 0.25)
        self.assertAlmostEqual(band.band[1], 1.0)
        self.assertAlmostEqual(band.comparability, 1.0)

    def test_empty_dyadic_piece(self):
        with self.assertRaises(EmptyPieceError):
            freq_band_check(FLAT_AT_ORIGIN, DecompositionPiece(P.closed(1.0, 8.0), 0j, 1, 48.0), 5)

    def test_vanishing_order(self):
        self.assertEqual(vanishing_order(parse_poly("t^3 - t^2"), 0.0), 2)
        self.assertEqual(vanishing_order(parse_poly("t^3 - t^2"), 1.0), 1)
        self.assertEqual(vanishing_order(parse_poly("t^3 - t^2"), 2.0), 0)


class TestDecayBookkeeping(unittest.TestCase):
    def test_split_index(self):
        self.assertEqual(pigeonhole_split_index([0, 1, 2, 10]), 3)
        self.assertEqual(pigeonhole_split_index([7, 0, 6, 5]), 1)
        with self.assertRaises(DomainError):
            pigeonhole_split_index([3])

    def test_split_follows_scales(self):
        self.assertEqual(split_for_scales(2, (-7, -4, -1)), (1, Rational(1, 8)))
        self.assertEqual(split_for_scales(2, (0, 1, 10)), (2, Rational(1, 8)))
        self.assertEqual(split_for_scales(3, (10, 0, 1)), (2, Rational(1, 9)))

    def test_predicted_exponent(self):
        self.assertEqual(predicted_decay_exponent(2, 1), Rational(1, 8))
        self.assertEqual(predicted_decay_exponent(3, 1), Rational(1, 9))
        with self.assertRaises(DomainError):
            predicted_decay_exponent(3, 3)

    def test_fit_guards(self):
        piece = DecompositionPiece(P.open(0.0, P.inf), 0j, 0, 2.0)
        with self.assertRaises(DomainError):
            multilinear_decay_fit(FLAT_AT_ORIGIN, piece, 0)
        with self.assertRaises(DomainError):
            multilinear_decay_fit(PARABOLA, piece, 0, steps=(0, 1, 2))


if __name__ == "__main__":
    unittest.main()
