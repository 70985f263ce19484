"""
Density of the pushforward of (f lambda dt) x (f lambda dt) under
Phi(t_1, t_2) = gamma(t_1) + gamma(t_2) for quadratic plane curves
gamma(t) = x0 + u t + w t^2.

With S = t_1 + t_2 and Q = t_1^2 + t_2^2, Phi = 2 x0 + u S + w Q, so every xi has
at most one unordered preimage, real iff 2Q - S^2 = (t_2 - t_1)^2 >= 0.

@Time ： 2026-10-18
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from services.curve.curve import PolyCurve, affine_arclength
from utils.errors import DomainError

INCREASING = "increasing"
ALL = "all"
SINGULAR_TOL = 1e-12


@dataclass(frozen=True)
class DensityValue:
    value: float
    singular: bool
    solutions: Tuple[Tuple[float, float], ...] = ()

    def __float__(self):
        return self.value

    def to_dict(self):
        return {"value": self.value, "singular": self.singular, "solutions": [list(s) for s in self.solutions]}


def quadratic_frame(gamma: PolyCurve) -> Tuple[np.ndarray, np.ndarray, np.ndarray, float]:
    """(x0, u, w, det[u w]) for a plane curve of degree <= 2 with det[u w] != 0."""
    if gamma.d != 2:
        raise DomainError(f"convolution densities are implemented for d = 2, got d = {gamma.d}")
    if gamma.max_degree > 2:
        raise DomainError("convolution densities need a quadratic curve (affine image of a parabola)")
    coeffs = np.zeros((2, 3))
    for row, component in enumerate(gamma.components):
        coeffs[row, : len(component.coeffs)] = component.coeffs
    x0, u, w = coeffs[:, 0], coeffs[:, 1], coeffs[:, 2]
    det = float(u[0] * w[1] - u[1] * w[0])
    if det == 0.0:
        raise DomainError("u and w are parallel; the curve is a line or degenerate parabola")
    return x0, u, w, det


def convolution_density_2d(gamma: PolyCurve, f, xi, ordering: str = INCREASING) -> DensityValue:
    """
    sum over real solutions of f(t_1) f(t_2) lambda(t_1) lambda(t_2) / |J(t_1, t_2)|,
    |J| = 2 |t_2 - t_1| |det[u w]|. `increasing` counts t_1 < t_2 only, `all` both orders.
    Outside the image the density is 0; on the fold (t_1 = t_2) it is flagged singular.
    """
    if ordering not in (INCREASING, ALL):
        raise DomainError(f"ordering must be {INCREASING!r} or {ALL!r}, got {ordering!r}")
    x0, u, w, det = quadratic_frame(gamma)
    target = np.asarray(xi, dtype=float) - 2.0 * x0
    S, Q = np.linalg.solve(np.column_stack([u, w]), target)
    discriminant = 2.0 * Q - S * S
    if abs(discriminant) <= SINGULAR_TOL * max(1.0, S * S):
        return DensityValue(float("inf"), True, ((S / 2.0, S / 2.0),))
    if discriminant < 0:
        return DensityValue(0.0, False, ())
    root = float(np.sqrt(discriminant))
    t1, t2 = (S - root) / 2.0, (S + root) / 2.0
    jacobian = 2.0 * abs(t2 - t1) * abs(det)
    weight = f(t1) * f(t2) * affine_arclength(gamma, t1) * affine_arclength(gamma, t2)
    value = float(np.real(weight)) / jacobian
    if ordering == ALL:
        return DensityValue(2.0 * value, False, ((t1, t2), (t2, t1)))
    return DensityValue(value, False, ((t1, t2),))


def convolution_mass(gamma: PolyCurve, f, support: Tuple[float, float], resolution: int = 256) -> float:
    """
    int density(xi) d xi over the image of support^2, computed in the fold-free
    coordinates (S, r) with r = t_2 - t_1 > 0, where d xi = |det[u w]| r dS dr.
    """
    x0, u, w, det = quadratic_frame(gamma)
    lower, upper = float(support[0]), float(support[1])
    width = upper - lower
    s_step = 2.0 * width / resolution
    r_step = width / resolution
    s_values = 2.0 * lower + (np.arange(resolution) + 0.5) * s_step
    r_values = (np.arange(resolution) + 0.5) * r_step
    total = 0.0
    for S in s_values:
        for r in r_values:
            t1, t2 = (S - r) / 2.0, (S + r) / 2.0
            if t1 < lower or t2 > upper:
                continue
            xi = 2.0 * x0 + u * S + w * (t1 * t1 + t2 * t2)
            density = convolution_density_2d(gamma, f, xi, ALL)
            if density.singular:
                continue
            total += density.value * abs(det) * r
    return float(total * s_step * r_step)
