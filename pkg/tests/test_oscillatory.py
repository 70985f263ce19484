import unittest

import numpy as np
from pydantic import ValidationError

from services.curve.curve import PolyCurve
from services.oscillatory.decay import stationary_decay_fit
from services.oscillatory.extension import extension_eval, extension_field, grid_norm
from services.oscillatory.fits import loglog_fit
from services.oscillatory.functions import (
    GaussianBump,
    Indicator,
    family,
    knapp_function,
    lp_norm,
    weighted_lp_norm,
)
from services.oscillatory.grid import GridSpec, check_cell_phase, dual_box
from services.oscillatory.knapp import knapp_packets, knapp_ratio, knapp_scaling_fit, unweighted_knapp_growth
from services.oscillatory.search import norm_ratio, norm_ratio_search
from utils.errors import AliasingError, DegenerateDataError, DomainError, GridTooCoarseError

PARABOLA = PolyCurve.from_exprs(["t", "t^2"])


class TestTestFunctions(unittest.TestCase):
    def test_indicator(self):
        f = Indicator(0.0, 1.0, 3.0)
        np.testing.assert_array_equal(f(np.array([-0.5, 0.0, 0.5, 1.0])), [0.0, 3.0, 3.0, 0.0])
        self.assertAlmostEqual(lp_norm(f, 2), 3.0)
        with self.assertRaises(DomainError):
            Indicator(0.0, 0.0)

    def test_gaussian(self):
        bump = GaussianBump(0.0, 0.5, frequency=2.0)
        self.assertEqual(bump.support, (-3.0, 3.0))
        self.assertAlmostEqual(abs(complex(bump(0.3))), np.exp(-0.5 * 0.36))
        with self.assertRaises(DomainError):
            GaussianBump(0.0, 0.0)

    def test_weighted_norm(self):
        self.assertAlmostEqual(weighted_lp_norm(PARABOLA, Indicator(0.0, 1.0), 2), 2.0 ** (1.0 / 6.0))
        self.assertAlmostEqual(weighted_lp_norm(PARABOLA, Indicator(0.0, 1.0, 2.0), float("inf")), 2.0)
        with self.assertRaises(DomainError):
            weighted_lp_norm(PARABOLA, Indicator(0.0, 1.0), 0)

    def test_families(self):
        self.assertEqual(knapp_function(0.5).support, (0.0, 0.5))
        indicators = family("indicator")
        f = indicators.build(indicators.start())
        self.assertIsInstance(f, Indicator)
        self.assertEqual(indicators.clip([5.0, -100.0]), [1.0, indicators.bounds[1][0]])
        with self.assertRaises(DomainError):
            family("sawtooth")


class TestGridSpec(unittest.TestCase):
    def test_shape_and_volume(self):
        grid = GridSpec(box=[(0.0, 1.0), (0.0, 2.0)], resolution=4)
        self.assertEqual(grid.shape, (4, 4))
        self.assertAlmostEqual(grid.cell_volume, 0.125)
        self.assertEqual(grid.points().shape, (16, 2))
        self.assertEqual(int(grid.boundary_mask().sum()), 12)

    def test_resolution_caps(self):
        with self.assertRaises(ValidationError):
            GridSpec.centered([1.0, 1.0], resolution=1)
        with self.assertRaises(ValidationError):
            GridSpec.centered([1.0, 1.0], resolution=513)
        with self.assertRaises(ValidationError):
            GridSpec.centered([1.0, 1.0, 1.0], resolution=65)
        with self.assertRaises(ValidationError):
            GridSpec(box=[(1.0, 0.0), (0.0, 1.0)])
        self.assertEqual(GridSpec.centered([1.0, 1.0, 1.0], resolution=[8, 16, 64]).shape, (8, 16, 64))

    def test_dual_box_and_cell_phase(self):
        self.assertEqual(dual_box(PARABOLA, (0.0, 0.5), box_factor=1.0), [2.0, 4.0])
        with self.assertRaises(DomainError):
            dual_box(PolyCurve.from_exprs(["t", "1"]), (0.0, 1.0))
        coarse = GridSpec.centered([100.0, 100.0], resolution=4)
        with self.assertRaises(GridTooCoarseError):
            check_cell_phase(PARABOLA, (0.0, 1.0), coarse)


class TestExtension(unittest.TestCase):
    def test_at_origin(self):
        f = Indicator(-1.0, 2.0)
        self.assertAlmostEqual(extension_eval(PARABOLA, f, True, (0.0, 0.0)).real, 2.0 * 2.0 ** (1.0 / 3.0))
        self.assertAlmostEqual(extension_eval(PARABOLA, f, False, (0.0, 0.0)).real, 2.0)

    def test_aliasing(self):
        with self.assertRaises(AliasingError):
            extension_eval(PARABOLA, Indicator(0.0, 1.0), True, (1000.0, 0.0), nodes=8)
        with self.assertRaises(DomainError):
            extension_eval(PARABOLA, Indicator(0.0, 1.0), True, (1.0, 0.0, 0.0))

    def test_field_matches_pointwise(self):
        grid = GridSpec(box=[(-1.0, 1.0), (-1.0, 1.0)], resolution=8, nodes=64)
        field = extension_field(PARABOLA, Indicator(0.0, 1.0), True, grid)
        self.assertEqual(field.values.shape, (8, 8))
        x = grid.points()[11]
        expected = extension_eval(PARABOLA, Indicator(0.0, 1.0), True, x, nodes=64)
        self.assertAlmostEqual(abs(field.values.ravel()[11] - expected), 0.0, places=12)
        self.assertLessEqual(field.tail, 1.0)

    def test_field_dimension(self):
        with self.assertRaises(DomainError):
            extension_field(PARABOLA, Indicator(0.0, 1.0), True, GridSpec.centered([1.0, 1.0, 1.0], resolution=4))

    def test_grid_norm(self):
        grid = GridSpec(box=[(0.0, 1.0), (0.0, 1.0)], resolution=4)
        ones = np.ones(grid.shape)
        self.assertAlmostEqual(grid_norm(ones, 3, grid), 1.0)
        self.assertEqual(grid_norm(2.0 * ones, float("inf")), 2.0)
        self.assertAlmostEqual(grid_norm(ones, 0.5, cell_volume=1.0 / 16.0), 1.0)
        with self.assertRaises(DomainError):
            grid_norm(ones, 0)


class TestKnapp(unittest.TestCase):
    def test_packets(self):
        packets, g = knapp_packets(PARABOLA, 2.0, 1)
        self.assertEqual(packets[0].support, (0.5, 1.0))
        self.assertAlmostEqual(g.norm(), 1.0)
        packets, g = knapp_packets(PARABOLA, 2.0, 3)
        self.assertAlmostEqual(g.norm(), np.sqrt(3.0))
        offsets = [packet.modulation[0] for packet in packets]
        self.assertEqual(offsets, sorted(offsets))
        self.assertAlmostEqual(abs(complex(g(0.3))), 2.0)
        with self.assertRaises(DomainError):
            knapp_packets(PARABOLA, 2.0, 0)

    def test_scaling_law(self):
        fit = knapp_scaling_fit(PARABOLA, 6, [0.125, 0.25, 0.5], resolution=32, nodes=128)
        self.assertAlmostEqual(fit.predicted, 0.5)
        self.assertAlmostEqual(fit.slope, 0.5, places=6)
        self.assertEqual(len(fit.details["tails"]), 3)

    def test_knapp_ratio_is_scale_invariant(self):
        small = knapp_ratio(PARABOLA, 2, 6, 0.25, resolution=32, nodes=128)
        large = knapp_ratio(PARABOLA, 2, 6, 0.5, resolution=32, nodes=128)
        self.assertGreater(small, 0.0)
        self.assertAlmostEqual(small / large, 1.0, places=6)

    def test_unweighted_growth_bookkeeping(self):
        fit = unweighted_knapp_growth(PARABOLA, 2, [1, 2, 4], resolution=16, nodes=64)
        self.assertEqual(fit.details["p_prime"], 6.0)
        self.assertAlmostEqual(fit.predicted, 1.0 / 6.0 - 0.5)
        with self.assertRaises(DomainError):
            unweighted_knapp_growth(PARABOLA, 1, [1, 2])


class TestFits(unittest.TestCase):
    def test_loglog(self):
        fit = loglog_fit([1.0, 2.0, 4.0], [3.0, 6.0, 12.0])
        self.assertAlmostEqual(fit.slope, 1.0)
        self.assertAlmostEqual(fit.r_squared, 1.0)
        with self.assertRaises(DegenerateDataError):
            loglog_fit([1.0], [1.0])
        with self.assertRaises(DegenerateDataError):
            loglog_fit([1.0, 2.0], [1.0, 0.0])

    def test_stationary_phase_decay(self):
        fit = stationary_decay_fit(PARABOLA, (0.0, 1.0), [64.0, 128.0, 256.0, 512.0])
        self.assertEqual(fit.predicted, -0.5)
        self.assertAlmostEqual(fit.slope, -0.5, delta=0.03)
        with self.assertRaises(DomainError):
            stationary_decay_fit(PARABOLA, (0.0, 0.0), [1.0, 2.0])


class TestNormSearch(unittest.TestCase):
    grid = GridSpec.centered([8.0, 8.0], resolution=16, nodes=64)

    def test_weighted_and_unweighted_ratio(self):
        f = Indicator(0.0, 0.5)
        weighted = norm_ratio(PARABOLA, f, 2, 6, self.grid)
        unweighted = norm_ratio(PARABOLA, f, 2, 6, self.grid, weighted=False)
        self.assertAlmostEqual(weighted / unweighted, 2.0 ** (1.0 / 3.0 - 1.0 / 6.0), places=8)

    def test_search_respects_budget(self):
        result = norm_ratio_search(PARABOLA, 2, 6, family("indicator"), 5, self.grid)
        self.assertLessEqual(result.evaluations, 5)
        self.assertGreater(result.lower_bound, 0.0)
        values = [value for _, value in result.history]
        self.assertEqual(values, sorted(values))
        self.assertEqual(set(result.parameters), {"left", "log2_length"})


if __name__ == "__main__":
    unittest.main()
