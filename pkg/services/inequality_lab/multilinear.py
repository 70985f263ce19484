"""
The multilinear forms
    T_l(g_1, ..., g_l) = int prod_i g_i(t_i)^((d+1)/d) lambda(t_i)^((d+1)/(2d)) prod_{i<j} |t_i - t_j|^(-1/d) dt
for l <= 3, by nested quadrature over the ordered simplex of every ordering.

Each variable ranges over its support above the previous one; every level is split
at all support endpoints and integrated with Gauss-Legendre nodes pushed through the
two-sided grading u -> u^m / (u^m + (1-u)^m), m = d, which absorbs the
|t_i - t_j|^(-1/d) singularity at the lower limit and the power behavior at the ends.

@Time ： 2026-10-18
"""
from __future__ import annotations

import itertools
import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from services.curve.curve import PolyCurve, affine_arclength
from utils.errors import DomainError
from utils.logger import Logger

logger = Logger(__name__)

MAX_FORM_ORDER = 3


def graded_rule(nodes: int, m: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights on (0, 1) clustered at both ends with grading exponent m."""
    x, w = np.polynomial.legendre.leggauss(nodes)
    u = 0.5 * (x + 1.0)
    w = 0.5 * w
    numerator = u ** m
    denominator = u ** m + (1.0 - u) ** m
    phi = numerator / denominator
    derivative = m * u ** (m - 1) * (1.0 - u) ** (m - 1) / denominator ** 2
    return phi, w * derivative


class _FormIntegrator:
    def __init__(self, gamma: PolyCurve, g: Sequence, supports: List[Tuple[float, float]], quad_nodes: int):
        self.gamma = gamma
        self.d = gamma.d
        self.g = list(g)
        self.supports = supports
        self.rule = graded_rule(quad_nodes, self.d)
        self.edges = sorted({edge for support in supports for edge in support})

    def density(self, index: int, t: np.ndarray) -> np.ndarray:
        values = np.abs(np.asarray(self.g[index](t), dtype=complex)) ** ((self.d + 1) / self.d)
        return values * affine_arclength(self.gamma, t) ** ((self.d + 1) / (2 * self.d))

    def level_rule(self, index: int, lower_limit: float) -> Tuple[np.ndarray, np.ndarray]:
        a, b = self.supports[index]
        nodes, weights = [], []
        for left, right in zip(self.edges[:-1], self.edges[1:]):
            if left < a or right > b:
                continue
            left = max(left, lower_limit)
            if left >= right:
                continue
            phi, w = self.rule
            nodes.append(left + (right - left) * phi)
            weights.append((right - left) * w)
        if not nodes:
            return np.zeros(0), np.zeros(0)
        return np.concatenate(nodes), np.concatenate(weights)

    def nested(self, order: Tuple[int, ...], level: int, prefix: Tuple[float, ...]) -> float:
        lower_limit = prefix[-1] if prefix else -math.inf
        nodes, weights = self.level_rule(order[level], lower_limit)
        if nodes.size == 0:
            return 0.0
        values = self.density(order[level], nodes)
        for y in prefix:
            values = values * np.abs(nodes - y) ** (-1.0 / self.d)
        if level == len(order) - 1:
            return float(np.sum(weights * values))
        inner = np.array(
            [self.nested(order, level + 1, prefix + (y,)) if v != 0.0 else 0.0 for y, v in zip(nodes, values)]
        )
        return float(np.sum(weights * values * inner))


def multilinear_T(gamma: PolyCurve, g: Sequence, supports: Optional[Sequence[Tuple[float, float]]] = None, quad_nodes: int = 32) -> float:
    """
    :param g: l nonnegative test functions (callables)
    :param supports: bounded supports; taken from the functions when omitted
    :param quad_nodes: Gauss-Legendre nodes per elementary interval and level
    """
    l = len(g)
    if not 1 <= l <= MAX_FORM_ORDER:
        raise DomainError(f"forms are implemented for 1 <= l <= {MAX_FORM_ORDER}, got {l}")
    if supports is None:
        supports = [tuple(f.support) for f in g]
    supports = [(float(a), float(b)) for a, b in supports]
    if len(supports) != l:
        raise DomainError(f"{l} functions but {len(supports)} supports")
    for a, b in supports:
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"support [{a}, {b}] must be bounded")
        if not a < b:
            raise DomainError(f"support [{a}, {b}] is empty")
    integrator = _FormIntegrator(gamma, g, supports, quad_nodes)
    total = sum(integrator.nested(order, 0, ()) for order in itertools.permutations(range(l)))
    logger.debug(f"Service: T_{l} = {total:.8g} with {quad_nodes} nodes")
    return float(total)
