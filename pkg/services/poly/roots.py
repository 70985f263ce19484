"""
Complex roots by Aberth-Ehrlich simultaneous iteration.

Starting points are deterministic, exact zeros at the origin are split off
before iterating, and multiple roots are recovered by clustering, then polished
by Newton steps on the derivative in which they are simple.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from services.poly.polynomial import Polynomial
from utils.errors import DomainError, RootFindingError
from utils.logger import Logger
from utils.settings import get_settings

logger = Logger(__name__)

MERGE_FLOOR = 1e-6
START_ANGLE = 0.4
MAX_ITERATIONS = 800
POLISH_STEPS = 4


@dataclass(frozen=True)
class ComplexRootSet:
    """Distinct roots with multiplicities, sorted by (real part, imaginary part)."""

    roots: Tuple[complex, ...]
    multiplicities: Tuple[int, ...]
    residual: float = 0.0
    cluster_radii: Tuple[float, ...] = field(default=(), compare=False)

    @property
    def total_multiplicity(self) -> int:
        return sum(self.multiplicities)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(zip(self.roots, self.multiplicities))

    def multiset(self) -> List[complex]:
        values = []
        for root, multiplicity in self:
            values.extend([root] * multiplicity)
        return values

    def real_roots(self) -> List[Tuple[float, int]]:
        return [(root.real, multiplicity) for root, multiplicity in self if root.imag == 0.0]

    def is_conjugate_closed(self, tol: float = 1e-9) -> bool:
        for root, multiplicity in self:
            if root.imag == 0.0:
                continue
            partner = [
                m for other, m in self
                if abs(other - root.conjugate()) <= tol * (1.0 + abs(root)) and m == multiplicity
            ]
            if not partner:
                return False
        return True

    def to_dict(self):
        return {
            "roots": [{"re": root.real, "im": root.imag, "multiplicity": m} for root, m in self],
            "residual": self.residual,
        }


def _horner_with_derivative(coeffs_desc: np.ndarray, z: np.ndarray):
    value = np.full_like(z, coeffs_desc[0])
    derivative = np.zeros_like(z)
    for coefficient in coeffs_desc[1:]:
        derivative = derivative * z + value
        value = value * z + coefficient
    return value, derivative


def _starting_points(monic_desc: np.ndarray) -> np.ndarray:
    degree = len(monic_desc) - 1
    center = -monic_desc[1].real / degree if degree > 0 else 0.0
    shifted = Polynomial(np.real(monic_desc[::-1])).compose_affine(1.0, center)
    coeffs = np.array(shifted.coeffs) if not shifted.is_zero() else np.zeros(1)
    # Fujiwara-style bound on the root radius around the centroid
    radius = 0.0
    for k in range(1, degree + 1):
        index = degree - k
        if index < len(coeffs):
            radius = max(radius, abs(coeffs[index]) ** (1.0 / k))
    if radius == 0.0:
        radius = 1.0
    angles = 2.0 * math.pi * np.arange(degree) / degree + START_ANGLE
    return center + radius * np.exp(1j * angles)


def _aberth(coeffs_asc: Tuple[float, ...], max_iterations: int) -> np.ndarray:
    degree = len(coeffs_asc) - 1
    monic_desc = np.array(coeffs_asc[::-1], dtype=complex) / coeffs_asc[-1]
    if degree == 1:
        return np.array([-monic_desc[1]])
    abs_desc = np.abs(monic_desc)
    z = _starting_points(monic_desc)
    active = np.ones(degree, dtype=bool)
    backward_tol = 8.0 * degree * np.finfo(float).eps

    for iteration in range(max_iterations):
        value, derivative = _horner_with_derivative(monic_desc, z)
        magnitude, _ = _horner_with_derivative(abs_desc.astype(complex), np.abs(z).astype(complex))
        converged = np.abs(value) <= backward_tol * magnitude.real
        active &= ~converged
        if not active.any():
            logger.debug(f"Service: Aberth converged after {iteration} iterations (degree {degree})")
            return z
        for k in np.flatnonzero(active):
            if derivative[k] == 0:
                ratio = value[k]
            else:
                ratio = value[k] / derivative[k]
            differences = z[k] - np.delete(z, k)
            differences[differences == 0] = np.finfo(float).tiny
            repulsion = np.sum(1.0 / differences)
            denominator = 1.0 - ratio * repulsion
            step = ratio / denominator if denominator != 0 else ratio
            z[k] = z[k] - step
    # multiple roots stall at the attainable accuracy; accept that level
    value, _ = _horner_with_derivative(monic_desc, z)
    magnitude, _ = _horner_with_derivative(abs_desc.astype(complex), np.abs(z).astype(complex))
    slack = np.abs(value) / np.maximum(magnitude.real, np.finfo(float).tiny)
    if np.max(slack) > 1e3 * backward_tol:
        raise RootFindingError(
            f"Aberth iteration did not converge within {max_iterations} iterations",
            degree=degree,
            backward_error=float(np.max(slack)),
        )
    return z


def _merge_radius(center: complex, size: int, tol: float) -> float:
    return max(MERGE_FLOOR, tol ** (1.0 / size)) * (1.0 + abs(center))


def _cluster(points: List[complex], tol: float):
    """
    Group approximations of multiple roots. A seed takes the largest m such that
    its m nearest unassigned neighbours all lie within the m-fold merge radius
    of their centroid.
    """
    remaining = sorted(points, key=lambda p: (p.real, p.imag))
    clusters = []
    while remaining:
        seed = remaining[0]
        reach = 2.0 * _merge_radius(seed, len(remaining), tol) + 1e-300
        nearby = sorted((p for p in remaining if abs(p - seed) <= reach), key=lambda p: abs(p - seed))
        candidates = np.array(nearby, dtype=complex)
        prefix = np.cumsum(candidates)
        chosen = [seed]
        for size in range(len(candidates), 1, -1):
            center = complex(prefix[size - 1] / size)
            if np.max(np.abs(candidates[:size] - center)) <= _merge_radius(center, size, tol):
                chosen = nearby[:size]
                break
        for p in chosen:
            remaining.remove(p)
        clusters.append(chosen)
    return clusters


def _snap_conjugates(centers: List[complex], sizes: List[int], tol: float) -> List[complex]:
    snapped = list(centers)
    for index, (center, size) in enumerate(zip(centers, sizes)):
        if abs(center.imag) <= _merge_radius(center, size, tol):
            snapped[index] = complex(center.real, 0.0)
    used = set()
    for i, center in enumerate(snapped):
        if center.imag <= 0.0 or i in used:
            continue
        partner = None
        best = math.inf
        for j, other in enumerate(snapped):
            if j == i or j in used or other.imag >= 0.0 or sizes[j] != sizes[i]:
                continue
            gap = abs(other - center.conjugate())
            if gap < best:
                best, partner = gap, j
        if partner is None:
            logger.warning(f"Service: no conjugate partner found for root {center}")
            continue
        average = 0.5 * (center + snapped[partner].conjugate())
        snapped[i] = average
        snapped[partner] = average.conjugate()
        used.update({i, partner})
    return snapped


def _polish(q: Polynomial, center: complex, size: int, tol: float) -> complex:
    """
    Newton on q^(size-1), where an m-fold root of q is simple. Steps stay inside the
    merge radius and must shrink |q^(size-1)|.
    """
    target = q.derivative(size - 1)
    slope = q.derivative(size)
    if slope.is_zero():
        return center
    radius = _merge_radius(center, size, tol)
    z = center
    value = target.evaluate(z)
    for _ in range(POLISH_STEPS):
        step_denominator = slope.evaluate(z)
        if value == 0 or step_denominator == 0:
            break
        candidate = z - value / step_denominator
        candidate_value = target.evaluate(candidate)
        if abs(candidate - center) > radius or abs(candidate_value) >= abs(value):
            break
        z, value = candidate, candidate_value
    return complex(z)


def _backward_error(q: Polynomial, z: complex) -> float:
    magnitude = q.magnitude().evaluate(abs(z))
    return float(abs(q.evaluate(z)) / max(magnitude, np.finfo(float).tiny))


def roots(q: Polynomial, tol: Optional[float] = None, max_iterations: int = MAX_ITERATIONS) -> ComplexRootSet:
    """
    All complex roots of q with multiplicities.
    :param q: nonzero polynomial
    :param tol: clustering tolerance; roots of an m-fold cluster lie within tol^(1/m) (relative)
    :param max_iterations: Aberth iteration budget
    """
    if q.is_zero():
        raise DomainError("roots of the zero polynomial are undefined")
    if tol is None:
        tol = get_settings().root_tol

    coeffs = q.coeffs
    zero_multiplicity = 0
    while zero_multiplicity < len(coeffs) and coeffs[zero_multiplicity] == 0.0:
        zero_multiplicity += 1
    reduced = coeffs[zero_multiplicity:]

    approximations: List[complex] = []
    if len(reduced) > 1:
        approximations = [complex(z) for z in _aberth(reduced, max_iterations)]

    clusters = _cluster(approximations, tol) if approximations else []
    centers = [complex(np.mean(cluster)) for cluster in clusters]
    sizes = [len(cluster) for cluster in clusters]
    radii = [float(max(abs(p - c) for p in cluster)) for cluster, c in zip(clusters, centers)]
    centers = _snap_conjugates(centers, sizes, tol)
    reduced_poly = Polynomial(reduced)
    centers = _snap_conjugates([_polish(reduced_poly, c, m, tol) for c, m in zip(centers, sizes)], sizes, tol)
    for center, size in zip(centers, sizes):
        error = _backward_error(q, center)
        if error > q.degree * _merge_radius(center, size, tol):
            raise RootFindingError(
                "root does not satisfy the polynomial to working accuracy",
                root=center,
                multiplicity=size,
                backward_error=error,
            )

    if zero_multiplicity:
        centers.append(0j)
        sizes.append(zero_multiplicity)
        radii.append(0.0)

    order = sorted(range(len(centers)), key=lambda i: (centers[i].real, centers[i].imag))
    root_values = tuple(centers[i] for i in order)
    multiplicities = tuple(sizes[i] for i in order)
    residual = max((abs(q.evaluate(root)) for root in root_values), default=0.0)
    logger.debug(f"Service: found {len(root_values)} distinct roots of degree-{q.degree} polynomial")
    return ComplexRootSet(root_values, multiplicities, float(residual), tuple(radii[i] for i in order))


def real_roots(q: Polynomial, tol: Optional[float] = None) -> List[Tuple[float, int]]:
    """Real roots with multiplicities, ascending."""
    if q.is_zero():
        raise DomainError("roots of the zero polynomial are undefined")
    if q.is_constant():
        return []
    return roots(q, tol).real_roots()


