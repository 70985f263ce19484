"""
Offspring curves gamma_h(t) = (1/K) sum_j gamma(t + h_j) and their intervals.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import portion as P

from services.curve.curve import PolyCurve
from services.poly.polynomial import Polynomial
from utils.errors import DomainError


def shift_interval(interval: P.Interval, h: float) -> P.Interval:
    """I - h, atom by atom."""
    return interval.apply(lambda atom: atom.replace(lower=lambda v: v - h, upper=lambda v: v - h))


@dataclass(frozen=True)
class OffspringSpec:
    shifts: Tuple[float, ...]
    interval: P.Interval

    def __post_init__(self):
        shifts = tuple(float(h) for h in self.shifts)
        if not shifts:
            raise DomainError("offspring needs at least one shift (K >= 1)")
        object.__setattr__(self, "shifts", shifts)

    @property
    def K(self) -> int:
        return len(self.shifts)

    @property
    def offspring_interval(self) -> P.Interval:
        """I_h = intersection over j of (I - h_j); possibly empty."""
        result = shift_interval(self.interval, self.shifts[0])
        for h in self.shifts[1:]:
            result = result & shift_interval(self.interval, h)
        return result


def offspring(gamma: PolyCurve, spec: OffspringSpec) -> Tuple[PolyCurve, P.Interval]:
    components = []
    for component in gamma.components:
        total = Polynomial.zero()
        for h in spec.shifts:
            total = total.add(component.compose_affine(1.0, h))
        components.append(total.scaled(1.0 / spec.K))
    return PolyCurve(tuple(components)), spec.offspring_interval


def offspring_correction_matrix(h, d: int) -> np.ndarray:
    """
    (A_h)_{ij} = (1/K) sum_k h_k^(i-j) / (i-j)!  for i >= j, zero above the diagonal.
    For the moment curve M, offspring(M) = A_h M + const.
    """
    shifts = np.asarray(h, dtype=float).ravel()
    if shifts.size == 0:
        raise DomainError("offspring needs at least one shift (K >= 1)")
    matrix = np.zeros((d, d))
    for i in range(d):
        for j in range(i + 1):
            power = i - j
            matrix[i, j] = np.mean(shifts ** power) / math.factorial(power)
    return matrix
