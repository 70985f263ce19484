"""
Test functions on the parameter line and the parametric families searched over.

Every function is a picklable callable with a bounded `support`.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np
from scipy import integrate

from services.curve.curve import PolyCurve, affine_arclength
from utils.errors import DomainError

GAUSSIAN_CUTOFF = 6.0


@dataclass(frozen=True)
class Indicator:
    left: float
    length: float
    amplitude: float = 1.0

    def __post_init__(self):
        if self.length <= 0:
            raise DomainError(f"indicator length must be positive, got {self.length}")

    @property
    def support(self) -> Tuple[float, float]:
        return self.left, self.left + self.length

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return self.support

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        inside = (t >= self.left) & (t < self.left + self.length)
        return self.amplitude * inside.astype(float)


@dataclass(frozen=True)
class GaussianBump:
    """amplitude * exp(-(t-center)^2 / (2 width^2)) * exp(i frequency t), cut at 6 widths."""

    center: float
    width: float
    frequency: float = 0.0
    amplitude: float = 1.0

    def __post_init__(self):
        if self.width <= 0:
            raise DomainError(f"gaussian width must be positive, got {self.width}")

    @property
    def support(self) -> Tuple[float, float]:
        reach = GAUSSIAN_CUTOFF * self.width
        return self.center - reach, self.center + reach

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return ()

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        envelope = np.exp(-0.5 * ((t - self.center) / self.width) ** 2)
        envelope = np.where(np.abs(t - self.center) <= GAUSSIAN_CUTOFF * self.width, envelope, 0.0)
        if self.frequency == 0.0:
            return self.amplitude * envelope
        return self.amplitude * envelope * np.exp(1j * self.frequency * t)


def knapp_function(delta: float) -> Indicator:
    """chi_[0, delta]"""
    return Indicator(0.0, delta)


def weighted_lp_norm(gamma: PolyCurve, f, p: float) -> float:
    """||f||_{L^p(lambda dt)} by adaptive quadrature over the support of f."""
    p = float(p)
    if p <= 0:
        raise DomainError(f"norm exponent must be positive, got {p}")
    lower, upper = f.support
    inner = [b for b in getattr(f, "breakpoints", ()) if lower < b < upper]

    if math.isinf(p):
        # lambda > 0 almost everywhere, so this is the sup of |f|
        t = np.linspace(lower, upper, 4097, endpoint=False)
        return float(np.max(np.abs(f(t))))

    def integrand(t):
        return float(np.abs(f(t)) ** p * affine_arclength(gamma, t))

    value, _ = integrate.quad(integrand, lower, upper, points=inner or None, limit=200)
    return float(value ** (1.0 / p))


def lp_norm(f, p: float) -> float:
    """||f||_{L^p(dt)}"""
    p = float(p)
    lower, upper = f.support
    inner = [b for b in getattr(f, "breakpoints", ()) if lower < b < upper]
    value, _ = integrate.quad(lambda t: float(np.abs(f(t)) ** p), lower, upper, points=inner or None, limit=200)
    return float(value ** (1.0 / p))


@dataclass(frozen=True)
class FunctionFamily:
    """A named family with box-bounded real parameters and a builder."""

    name: str
    parameters: Tuple[str, ...]
    bounds: Tuple[Tuple[float, float], ...]
    build: Callable[[Sequence[float]], object]

    def start(self) -> List[float]:
        return [0.5 * (lo + hi) for lo, hi in self.bounds]

    def clip(self, values: Sequence[float]) -> List[float]:
        return [min(max(v, lo), hi) for v, (lo, hi) in zip(values, self.bounds)]


def _gaussian(values):
    center, log_width, frequency = values
    return GaussianBump(center, 2.0 ** log_width, frequency)


def _indicator(values):
    left, log_length = values
    return Indicator(left, 2.0 ** log_length)


def _knapp(values):
    (log_delta,) = values
    return knapp_function(2.0 ** log_delta)


def family(name: str, support: Tuple[float, float] = (0.0, 1.0), max_frequency: float = 8.0) -> FunctionFamily:
    """
    gaussian: (center, log2 width, frequency); indicator: (left, log2 length); knapp: (log2 delta,).
    :param support: interval the centers and left endpoints range over
    """
    lower, upper = support
    span = upper - lower
    families: Dict[str, FunctionFamily] = {
        "gaussian": FunctionFamily(
            "gaussian",
            ("center", "log2_width", "frequency"),
            ((lower, upper), (math.log2(span) - 6.0, math.log2(span) - 2.0), (-max_frequency, max_frequency)),
            _gaussian,
        ),
        "indicator": FunctionFamily(
            "indicator",
            ("left", "log2_length"),
            ((lower, upper), (math.log2(span) - 7.0, math.log2(span) - 1.0)),
            _indicator,
        ),
        "knapp": FunctionFamily("knapp", ("log2_delta",), ((-7.0, -1.0),), _knapp),
    }
    if name not in families:
        raise DomainError(f"unknown function family {name!r}; expected one of {sorted(families)}")
    return families[name]
