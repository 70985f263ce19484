import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from services.poly.determinant import poly_det
from services.poly.parser import format_poly, parse_poly
from services.poly.polynomial import Polynomial
from services.poly.roots import real_roots, roots
from tests.hypothesis_strategies import polynomials
from utils.errors import DomainError, PolynomialParseError

T = Polynomial.monomial(1)


class TestParsePoly(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(parse_poly("t^2 - 1").coeffs, (-1.0, 0.0, 1.0))
        self.assertEqual(parse_poly("0").coeffs, ())
        self.assertEqual(parse_poly("3t - 2t + t^3").coeffs, (0.0, 1.0, 0.0, 1.0))

    def test_fractions_and_products(self):
        self.assertEqual(parse_poly("t^3/6").coeffs, (0.0, 0.0, 0.0, 1.0 / 6.0))
        self.assertEqual(parse_poly("-2*t + 0.5").coeffs, (0.5, -2.0))

    def test_error_positions(self):
        with self.assertRaises(PolynomialParseError) as context:
            parse_poly("t^^2")
        self.assertEqual(context.exception.position, 2)

        with self.assertRaises(PolynomialParseError) as context:
            parse_poly("t + x")
        self.assertEqual(context.exception.position, 4)

        with self.assertRaises(PolynomialParseError):
            parse_poly("")
        with self.assertRaises(PolynomialParseError):
            parse_poly("t/0")

    def test_format(self):
        self.assertEqual(format_poly(parse_poly("1 - t^2 + 3t")), "-t^2 + 3t + 1")
        self.assertEqual(format_poly(Polynomial.zero()), "0")

    @given(polynomials())
    def test_format_is_canonical(self, q):
        text = format_poly(q)
        self.assertEqual(format_poly(parse_poly(text)), text)


class TestPolynomial(unittest.TestCase):
    def test_operations(self):
        self.assertEqual(parse_poly("t^3").derivative(2), Polynomial([0.0, 6.0]))
        self.assertEqual(parse_poly("t^2").compose_affine(2.0, 1.0), Polynomial([1.0, 4.0, 4.0]))
        self.assertEqual(parse_poly("t^2 - 1").evaluate(3.0), 8.0)

    def test_zero_polynomial(self):
        zero = Polynomial([0.0, 0.0])
        self.assertTrue(zero.is_zero())
        self.assertEqual(zero.degree, -1)
        self.assertEqual(zero.derivative(1), Polynomial.zero())

    def test_immutable(self):
        with self.assertRaises(AttributeError):
            T.foo = 1

    def test_non_finite_rejected(self):
        with self.assertRaises(ValueError):
            Polynomial([1.0, float("nan")])


class TestRoots(unittest.TestCase):
    def test_real_pair(self):
        found = roots(parse_poly("t^2 - 1"))
        self.assertEqual(found.multiplicities, (1, 1))
        self.assertAlmostEqual(found.roots[0].real, -1.0, places=12)
        self.assertAlmostEqual(found.roots[1].real, 1.0, places=12)
        self.assertEqual(found.roots[0].imag, 0.0)

    def test_conjugate_pair(self):
        found = roots(parse_poly("t^2 + 1"))
        imaginary = sorted(z.imag for z in found.roots)
        self.assertAlmostEqual(imaginary[0], -1.0, places=12)
        self.assertAlmostEqual(imaginary[1], 1.0, places=12)
        self.assertTrue(found.is_conjugate_closed())

    def test_multiple_root_at_origin(self):
        found = roots(parse_poly("t^5 - t^4 - 2t^3"))
        self.assertEqual(found.total_multiplicity, 5)
        by_value = {round(z.real, 8): m for z, m in found}
        self.assertEqual(by_value, {-1.0: 1, 0.0: 3, 2.0: 1})

    def test_clustered_multiple_root(self):
        found = roots(Polynomial.from_roots([1.5, 1.5, 1.5, -2.0]))
        self.assertEqual(sorted(found.multiplicities), [1, 3])

    def test_repeated_root_is_polished(self):
        q = (T - 1.0).power(4)
        found = roots(q)
        self.assertEqual(found.multiplicities, (4,))
        self.assertLessEqual(abs(found.roots[0] - 1.0), 1e-8)
        self.assertTrue(Polynomial.from_roots(found.multiset()).allclose(q, rtol=1e-8))

    def test_mixed_multiplicities_reconstruct(self):
        q = Polynomial.from_roots([1.5, 1.5, 1.5, -2.0, 0.25, 0.25])
        found = roots(q)
        self.assertEqual(found.total_multiplicity, 6)
        self.assertTrue(Polynomial.from_roots(found.multiset()).allclose(q, rtol=1e-8))

    def test_real_roots(self):
        self.assertEqual(real_roots(Polynomial.constant(3.0)), [])
        values = real_roots(parse_poly("t^3 - t"))
        self.assertEqual([m for _, m in values], [1, 1, 1])
        np.testing.assert_allclose([r for r, _ in values], [-1.0, 0.0, 1.0], atol=1e-12)

    def test_zero_polynomial_rejected(self):
        with self.assertRaises(DomainError):
            roots(Polynomial.zero())

    @settings(max_examples=40, deadline=None)
    @given(polynomials(min_degree=1, max_degree=6))
    def test_roots_account_for_degree(self, q):
        found = roots(q)
        self.assertEqual(found.total_multiplicity, q.degree)
        self.assertTrue(found.is_conjugate_closed(1e-6))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=6, unique=True))
    def test_simple_integer_roots_recovered(self, values):
        found = roots(Polynomial.from_roots(values))
        np.testing.assert_allclose(sorted(z.real for z in found.roots), sorted(values), atol=1e-8)


class TestPolyDet(unittest.TestCase):
    def test_examples(self):
        one = Polynomial.constant(1.0)
        two = Polynomial.constant(2.0)
        self.assertEqual(poly_det([[one]]), one)
        self.assertEqual(poly_det([[one, T], [Polynomial.zero(), two]]), two)
        self.assertEqual(poly_det([[one, T.scaled(2.0)], [T, T.mul(T)]]), Polynomial([0.0, 0.0, -1.0]))

    def test_matches_numpy_at_sample_points(self):
        rng = np.random.default_rng(3)
        matrix = [[Polynomial(rng.uniform(-1, 1, size=3)) for _ in range(4)] for _ in range(4)]
        det = poly_det(matrix)
        for t in (-0.7, 0.1, 1.3):
            numeric = np.linalg.det(np.array([[entry.evaluate(t) for entry in row] for row in matrix]))
            self.assertAlmostEqual(det.evaluate(t), numeric, places=10)

    def test_cancelled_leading_terms_are_dropped(self):
        # components of equal degree 5 in R^3: generic torsion degree is 3 * (5 - 3)
        rng = np.random.default_rng(11)
        components = [Polynomial(rng.uniform(-1.0, 1.0, size=6)) for _ in range(3)]
        matrix = [[component.derivative(order) for order in (1, 2, 3)] for component in components]
        det = poly_det(matrix)
        self.assertEqual(det.degree, 6)
        for t in (-1.2, 0.3, 2.0):
            numeric = np.linalg.det(np.array([[entry.evaluate(t) for entry in row] for row in matrix]))
            self.assertAlmostEqual(det.evaluate(t), numeric, delta=1e-9 * max(1.0, abs(numeric)))

    def test_chopped_and_trimmed(self):
        q = Polynomial([1.0, 2.0, 1e-17, -3e-18])
        self.assertEqual(q.trimmed(1e-15), Polynomial([1.0, 2.0]))
        self.assertEqual(q.chopped([0.0, 0.0, 1e-16, 1e-16]), Polynomial([1.0, 2.0]))
        self.assertEqual(Polynomial([1e-20, 1.0]).chopped([1e-18]), Polynomial([0.0, 1.0]))

    def test_rejects_non_square(self):
        with self.assertRaises(ValueError):
            poly_det([[T, T]])


if __name__ == "__main__":
    unittest.main()
