import unittest
from fractions import Fraction

from hypothesis import given
from sympy import Rational, oo

from services.curve.curve import PolyCurve
from services.exponents.admissibility import (
    christ_range,
    christ_range_complement,
    dual_consistent,
    extension_admissible,
    reduced_range,
    restriction_admissible,
    restriction_endpoint,
)
from services.exponents.drury import drury_iterate, drury_step, interp_region_check
from services.exponents.pairs import ExponentPair, as_exponent, conjugate, duality_map
from services.exponents.profile import (
    TorsionProfile,
    level_sum_exponents,
    torsion_profile,
    unweighted_range,
    weight_exponent,
)
from services.exponents.table import exponent_table
from tests.hypothesis_strategies import rationals
from utils.errors import OutOfRangeError, UsageError

at_least_one = rationals.filter(lambda r: r >= 1)


class TestExponentArithmetic(unittest.TestCase):
    def test_as_exponent(self):
        self.assertEqual(as_exponent("7/6"), Rational(7, 6))
        self.assertEqual(as_exponent(0.1), Rational(1, 10))
        self.assertEqual(as_exponent(Fraction(3, 4)), Rational(3, 4))
        self.assertEqual(as_exponent("inf"), oo)
        with self.assertRaises(UsageError):
            as_exponent("seven")

    def test_conjugate(self):
        self.assertEqual(conjugate(2), 2)
        self.assertEqual(conjugate(1), oo)
        self.assertEqual(conjugate(oo), 1)
        self.assertEqual(conjugate("4/3"), 4)
        with self.assertRaises(OutOfRangeError):
            conjugate(Rational(1, 2))

    @given(at_least_one)
    def test_conjugate_is_involution(self, p):
        self.assertEqual(conjugate(conjugate(p)), p)

    def test_pair_bounds(self):
        with self.assertRaises(OutOfRangeError):
            ExponentPair(Rational(1, 2), 1)
        with self.assertRaises(OutOfRangeError):
            ExponentPair(2, 0)

    def test_duality_map(self):
        self.assertEqual(duality_map(ExponentPair(4, 8)), ExponentPair(Rational(8, 7), Rational(4, 3)))
        with self.assertRaises(OutOfRangeError):
            duality_map(ExponentPair(2, Rational(1, 2)))

    @given(at_least_one, at_least_one)
    def test_duality_is_involution(self, p, q):
        pair = ExponentPair(p, q)
        self.assertEqual(duality_map(duality_map(pair)), pair)


class TestAdmissibility(unittest.TestCase):
    def test_restriction(self):
        self.assertTrue(restriction_admissible(3, ExponentPair.from_p_prime(12, 2)))
        self.assertFalse(restriction_admissible(3, ExponentPair.from_p_prime(7, Rational(7, 6))))
        self.assertFalse(restriction_admissible(3, ExponentPair.from_p_prime(10, 2)))

    def test_endpoints(self):
        self.assertEqual(restriction_endpoint(3), Rational(7, 6))
        self.assertEqual(restriction_endpoint(2), Rational(4, 3))

    def test_extension(self):
        self.assertTrue(extension_admissible(3, ExponentPair.from_p_prime(Rational(4, 3), 8)))
        self.assertFalse(extension_admissible(3, ExponentPair.from_p_prime(Rational(7, 6), 7)))

    @given(at_least_one, at_least_one)
    def test_dual_consistent(self, p, q):
        for d in (2, 3, 4):
            self.assertTrue(dual_consistent(d, ExponentPair(p, q)))

    def test_dual_consistent_on_the_line(self):
        self.assertTrue(dual_consistent(3, ExponentPair(4, 8)))
        self.assertTrue(restriction_admissible(3, duality_map(ExponentPair(4, 8))))

    def test_named_ranges(self):
        self.assertTrue(christ_range(3, Rational(15, 2)))
        self.assertFalse(christ_range(3, 7))
        self.assertTrue(christ_range_complement(3, Rational(29, 4)))
        self.assertTrue(reduced_range(3, 12))
        self.assertFalse(reduced_range(3, 13))
        self.assertFalse(reduced_range(3, oo))
        with self.assertRaises(OutOfRangeError):
            christ_range(1, 2)


class TestDrury(unittest.TestCase):
    def test_sequence(self):
        self.assertEqual(drury_step(3, 1), 5)
        self.assertEqual(drury_step(3, 5), Rational(75, 11))
        self.assertEqual(drury_iterate(3, 1, 3), [5, Rational(75, 11), Rational(1125, 161)])

    def test_fixed_point(self):
        self.assertEqual(drury_step(3, 7), 7)
        self.assertEqual(drury_step(2, 1), 4)
        with self.assertRaises(OutOfRangeError):
            drury_step(3, 8)

    def test_increases_towards_fixed_point(self):
        sequence = drury_iterate(4, 1, 8)
        self.assertTrue(all(a < b for a, b in zip(sequence, sequence[1:])))
        self.assertTrue(all(p < 11 for p in sequence))

    def test_interp_region(self):
        vertex, inside = interp_region_check(3, 7)
        self.assertEqual(vertex, (Rational(3, 5), Rational(3, 7)))
        self.assertFalse(inside)
        self.assertTrue(interp_region_check(3, 1)[1])


class TestProfile(unittest.TestCase):
    def test_profiles(self):
        moment = torsion_profile(PolyCurve.moment(3))
        self.assertEqual((moment.K_min, moment.K_max, moment.N_min), (0, 0, 6))
        flat = torsion_profile(PolyCurve.from_exprs(["t", "t^2", "t^4"]))
        self.assertEqual((flat.K_min, flat.K_max, flat.N_max), (1, 1, 7))
        with self.assertRaises(OutOfRangeError):
            TorsionProfile(3, 2, 1)

    def test_weight_exponent(self):
        self.assertEqual(weight_exponent(3, ExponentPair.from_p_prime(12, 1)), Rational(-1, 2))
        self.assertEqual(weight_exponent(3, ExponentPair.from_p_prime(12, 2)), 0)
        with self.assertRaises(OutOfRangeError):
            weight_exponent(3, ExponentPair.from_p_prime(8, 2))

    def test_unweighted_range(self):
        pair = ExponentPair.from_p_prime(12, 2)
        self.assertTrue(unweighted_range(TorsionProfile(3, 0, 0), 3, pair))
        self.assertFalse(unweighted_range(TorsionProfile(3, 1, 1), 3, pair))
        self.assertTrue(unweighted_range(TorsionProfile(3, 0, 1), 3, pair))
        with self.assertRaises(OutOfRangeError):
            unweighted_range(TorsionProfile(2, 0, 0), 2, pair)

    def test_level_sum_exponents(self):
        pair = ExponentPair.from_p_prime(14, 2)
        self.assertEqual(level_sum_exponents(TorsionProfile(3, 1, 2), 3, pair), (0, Rational(-1, 28)))
        self.assertEqual(level_sum_exponents(TorsionProfile(3, 0, 0), 3, pair), (None, None))


class TestExponentTable(unittest.TestCase):
    def test_rows(self):
        rows = exponent_table(3, ["2", "7/6", "1/12"])
        self.assertEqual(
            rows[0], {"q": "2", "p": "12/11", "p_prime": "12", "admissible": True, "weight_exponent": "0"}
        )
        self.assertEqual(
            rows[1], {"q": "7/6", "p": "7/6", "p_prime": "7", "admissible": False, "weight_exponent": None}
        )
        self.assertIsNone(rows[2]["p"])
        self.assertFalse(rows[2]["admissible"])


if __name__ == "__main__":
    unittest.main()
