"""
Affine maps x -> Mx + x0 acting on curves, reparametrizations, normalization
and anisotropic rescaling.

@Time ： 2026-10-18
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from services.curve.curve import PolyCurve
from services.poly.polynomial import Polynomial
from utils.errors import DegenerateTorsionError, DomainError


def _frozen(array) -> np.ndarray:
    values = np.array(array, dtype=float)
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class AffineMap:
    matrix: np.ndarray
    translation: np.ndarray
    det: float = field(init=False)

    def __post_init__(self):
        matrix = _frozen(self.matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DomainError(f"affine map needs a square matrix, got shape {matrix.shape}")
        translation = _frozen(self.translation if self.translation is not None else np.zeros(matrix.shape[0]))
        if translation.shape != (matrix.shape[0],):
            raise DomainError("translation length must match the matrix size")
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "translation", translation)
        object.__setattr__(self, "det", float(np.linalg.det(matrix)))

    @classmethod
    def identity(cls, d: int) -> "AffineMap":
        return cls(np.eye(d), np.zeros(d))

    @classmethod
    def linear(cls, matrix) -> "AffineMap":
        matrix = np.asarray(matrix, dtype=float)
        return cls(matrix, np.zeros(matrix.shape[0]))

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_invertible(self) -> bool:
        return abs(self.det) > 0.0

    def __call__(self, x):
        return np.asarray(x, dtype=float) @ self.matrix.T + self.translation

    def compose(self, inner: "AffineMap") -> "AffineMap":
        """self after inner."""
        return AffineMap(self.matrix @ inner.matrix, self.matrix @ inner.translation + self.translation)

    def inverse(self) -> "AffineMap":
        if not self.is_invertible:
            raise DomainError("affine map is singular")
        inverse_matrix = np.linalg.inv(self.matrix)
        return AffineMap(inverse_matrix, -inverse_matrix @ self.translation)

    def scaled(self, factor: float) -> "AffineMap":
        """The map followed by the isotropic dilation x -> factor * x."""
        return AffineMap(factor * self.matrix, factor * self.translation)

    def to_dict(self):
        return {"matrix": self.matrix.tolist(), "translation": self.translation.tolist(), "det": self.det}


def apply_affine(A: AffineMap, gamma: PolyCurve) -> PolyCurve:
    """Components of M gamma(t) + x0."""
    if A.d != gamma.d:
        raise DomainError(f"map dimension {A.d} does not match curve dimension {gamma.d}")
    components = []
    for i in range(gamma.d):
        total = Polynomial.constant(A.translation[i])
        for j, component in enumerate(gamma.components):
            if A.matrix[i, j] != 0.0:
                total = total.add(component.scaled(A.matrix[i, j]))
        components.append(total)
    return PolyCurve(tuple(components))


def reparametrize(gamma: PolyCurve, a: float, b: float) -> PolyCurve:
    """t -> gamma(a t + b); torsion picks up a^(d(d+1)/2)."""
    if a == 0:
        raise DomainError("reparametrization scale a must be nonzero")
    return PolyCurve(tuple(component.compose_affine(a, b) for component in gamma.components))


def normalize_at(gamma: PolyCurve, t0: float) -> Tuple[AffineMap, PolyCurve]:
    """
    A x = D^{-1}(x - gamma(t0)) with D = [gamma'(t0) ... gamma^(d)(t0)].
    Returns A and Gamma(t) = A gamma(t + t0), so Gamma(0) = 0, Gamma^(j)(0) = e_j
    and det A = 1 / L(t0).
    """
    torsion_value = float(gamma.torsion.evaluate(t0))
    if torsion_value == 0.0:
        raise DegenerateTorsionError(f"torsion vanishes at t0={t0}; derivative matrix is singular", t0=t0)
    derivatives = gamma.derivative_matrix(t0)
    inverse = np.linalg.inv(derivatives)
    A = AffineMap(inverse, -inverse @ gamma.evaluate(t0))
    return A, apply_affine(A, reparametrize(gamma, 1.0, t0))


def unimodular_normalize_at(gamma: PolyCurve, t0: float) -> Tuple[AffineMap, PolyCurve]:
    """normalize_at followed by the dilation of ratio |det A|^(-1/d), so |det| = 1."""
    A, _ = normalize_at(gamma, t0)
    factor = abs(A.det) ** (-1.0 / gamma.d)
    unimodular = A.scaled(factor)
    return unimodular, apply_affine(unimodular, reparametrize(gamma, 1.0, t0))


def anisotropic_rescale(gamma: PolyCurve, delta: float) -> PolyCurve:
    """Gamma_j(t) = delta^(-j) gamma_j(delta t); torsion satisfies L_Gamma(t) = L_gamma(delta t)."""
    if delta <= 0:
        raise DomainError(f"rescaling parameter must be positive, got {delta}")
    return PolyCurve(
        tuple(
            component.compose_affine(delta, 0.0).scaled(delta ** (-(j + 1)))
            for j, component in enumerate(gamma.components)
        )
    )
