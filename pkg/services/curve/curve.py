"""
Polynomial curves in R^d and their torsion, affine arclength and Jacobian forms.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

from services.poly.determinant import NOISE_FACTOR, poly_det
from services.poly.parser import parse_poly
from services.poly.polynomial import Polynomial
from utils.errors import CoincidentPointsError, DegenerateTorsionError, DomainError

MIN_DIMENSION = 2
MAX_DIMENSION = 8
MAX_CURVE_DEGREE = 16


@dataclass(frozen=True)
class PolyCurve:
    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        components = tuple(
            c if isinstance(c, Polynomial) else Polynomial(c) for c in self.components
        )
        if not MIN_DIMENSION <= len(components) <= MAX_DIMENSION:
            raise DomainError(
                f"curve dimension must be between {MIN_DIMENSION} and {MAX_DIMENSION}, got {len(components)}"
            )
        degree = max(c.degree for c in components)
        if degree > MAX_CURVE_DEGREE:
            raise DomainError(f"component degree {degree} exceeds the cap {MAX_CURVE_DEGREE}")
        object.__setattr__(self, "components", components)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Sequence[float]]) -> "PolyCurve":
        return cls(tuple(Polynomial(c) for c in coeffs))

    @classmethod
    def from_exprs(cls, exprs: Sequence[str]) -> "PolyCurve":
        return cls(tuple(parse_poly(expr) for expr in exprs))

    @classmethod
    def moment(cls, d: int) -> "PolyCurve":
        """(t, t^2/2!, ..., t^d/d!)"""
        return cls(tuple(Polynomial.monomial(j, 1.0 / math.factorial(j)) for j in range(1, d + 1)))

    @property
    def d(self) -> int:
        return len(self.components)

    @property
    def max_degree(self) -> int:
        return max(0, max(c.degree for c in self.components))

    @cached_property
    def torsion(self) -> Polynomial:
        matrix = [[component.derivative(order) for order in range(1, self.d + 1)] for component in self.components]
        determinant = poly_det(matrix)
        return determinant.trimmed(NOISE_FACTOR * max(determinant.degree, 1) * np.finfo(float).eps)

    @property
    def is_degenerate(self) -> bool:
        return self.torsion.is_zero()

    def require_nondegenerate(self):
        if self.is_degenerate:
            raise DegenerateTorsionError("torsion vanishes identically; the curve is degenerate")

    def derivative(self, order: int) -> "Tuple[Polynomial, ...]":
        return tuple(component.derivative(order) for component in self.components)

    def evaluate(self, t):
        """gamma(t); shape (d,) for scalar t, (len(t), d) for arrays."""
        values = [np.asarray(component.evaluate(t), dtype=float) for component in self.components]
        return np.stack(values, axis=-1)

    def evaluate_derivative(self, t, order: int = 1):
        values = [np.asarray(c.evaluate(t), dtype=float) for c in self.derivative(order)]
        return np.stack(values, axis=-1)

    def derivative_matrix(self, t: float) -> np.ndarray:
        """Columns gamma'(t), ..., gamma^(d)(t)."""
        return np.column_stack([self.evaluate_derivative(t, order) for order in range(1, self.d + 1)])

    def to_dict(self):
        return {"d": self.d, "components": [list(c.coeffs) for c in self.components]}

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def torsion_poly(gamma: PolyCurve) -> Polynomial:
    """L(t) = det(gamma'(t), ..., gamma^(d)(t)); degree <= dN - d(d+1)/2."""
    return gamma.torsion


def arclength_exponent(d: int) -> float:
    return 2.0 / (d * (d + 1))


def affine_arclength(gamma: PolyCurve, t):
    """lambda(t) = |L(t)|^(2/(d(d+1))); vectorized over t."""
    values = np.abs(np.asarray(gamma.torsion.evaluate(t), dtype=float))
    result = values ** arclength_exponent(gamma.d)
    return float(result) if np.ndim(result) == 0 else result


def jacobian_J(gamma: PolyCurve, t: Sequence[float]) -> float:
    """det(gamma'(t_1), ..., gamma'(t_d))."""
    points = np.asarray(t, dtype=float)
    if points.shape != (gamma.d,):
        raise DomainError(f"jacobian_J needs {gamma.d} parameters, got shape {points.shape}")
    columns = gamma.evaluate_derivative(points, 1).T
    return float(np.linalg.det(columns))


def vandermonde(t: Sequence[float]) -> float:
    """prod_{i<j} (t_j - t_i)"""
    points = np.asarray(t, dtype=float)
    product = 1.0
    for j in range(len(points)):
        for i in range(j):
            product *= points[j] - points[i]
    return float(product)


def divided_difference_batch(gamma: PolyCurve, t) -> np.ndarray:
    """
    For each row of t (shape (n, d)) the matrix with columns gamma'[t_1],
    gamma'[t_1,t_2], ..., gamma'[t_1..t_d], by repeated synthetic division.
    Continuous across coincident arguments; det equals J / v for distinct ones.
    """
    points = np.atleast_2d(np.asarray(t, dtype=float))
    n, d = points.shape
    result = np.zeros((n, gamma.d, d))
    for row, component in enumerate(gamma.derivative(1)):
        coeffs = np.array(component.coeffs if not component.is_zero() else (0.0,))
        current = np.tile(coeffs, (n, 1))
        for k in range(d):
            x = points[:, k]
            size = current.shape[1]
            quotient = np.zeros((n, max(size - 1, 1)))
            carry = np.zeros(n)
            for j in range(size - 1, -1, -1):
                carry = carry * x + current[:, j]
                if j > 0:
                    quotient[:, j - 1] = carry
            result[:, row, k] = carry
            current = quotient
    return result


def divided_difference_columns(gamma: PolyCurve, t: Sequence[float]) -> np.ndarray:
    return divided_difference_batch(gamma, np.asarray(t, dtype=float)[None, :])[0]


def j_vandermonde_factor(gamma: PolyCurve, t: Sequence[float]) -> float:
    """
    P(t) = J(t) / v(t), symmetric in t. At s = t_1 = ... = t_d its continuous
    extension is L(s) / prod_{j<d} j!, but coincident arguments are rejected here.
    """
    points = np.asarray(t, dtype=float)
    if points.shape != (gamma.d,):
        raise DomainError(f"j_vandermonde_factor needs {gamma.d} parameters, got shape {points.shape}")
    if len(np.unique(points)) < len(points):
        raise CoincidentPointsError("j_vandermonde_factor requires distinct parameters", points=points.tolist())
    return float(np.linalg.det(divided_difference_columns(gamma, points)))


def diagonal_factor(gamma: PolyCurve, s: float) -> float:
    """Continuous extension of j_vandermonde_factor at (s, ..., s)."""
    return float(gamma.torsion.evaluate(s)) / math.prod(math.factorial(j) for j in range(gamma.d))


def cn_norm(gamma: PolyCurve, lower: float, upper: float, order: int = None, probes: int = 1001) -> float:
    """Observed sup over a probe grid of max_j |gamma^(j)|, 1 <= j <= order."""
    order = order or max(gamma.max_degree, 1)
    grid = np.linspace(lower, upper, probes)
    best = 0.0
    for j in range(1, order + 1):
        values = gamma.evaluate_derivative(grid, j)
        best = max(best, float(np.max(np.linalg.norm(values, axis=-1))))
    return best
