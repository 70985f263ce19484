"""
Decomposition pieces, their comparability certificates and probe-grid measurement.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np
import portion as P

from services.poly.polynomial import Polynomial
from utils import intervals
from utils.settings import get_settings

TAIL_SPAN = (1e-3, 1e6)


@dataclass(frozen=True)
class DecompositionPiece:
    """
    On `interval`, |Q(t)| is comparable to A * |t - center|^k; ratio_bound is the
    measured sup/inf of |Q(t)| / (A |t - center|^k).
    """

    interval: P.Interval
    center: complex
    k: int
    A: float
    ratio_bound: float = 1.0
    center_interior: Optional[bool] = None

    @property
    def has_real_center(self) -> bool:
        return complex(self.center).imag == 0.0

    def with_ratio(self, q: Polynomial, probes: Optional[int] = None) -> "DecompositionPiece":
        return replace(self, ratio_bound=measure_ratio(q, self.interval, self.center, self.k, self.A, probes))

    def to_dict(self):
        center = complex(self.center)
        record = {
            "interval": intervals.to_json(self.interval),
            "closed": intervals.closedness(self.interval),
            "center": {"re": center.real, "im": center.imag},
            "k": self.k,
            "A": self.A,
            "ratio_bound": self.ratio_bound,
        }
        if self.center_interior is not None:
            record["center_interior"] = self.center_interior
        return record


@dataclass(frozen=True)
class FirstCoordCertificate:
    """|gamma_1'(t)| ~ B |t - center|^ell on the piece."""

    center: complex
    ell: int
    B: float
    ratio_bound: float = 1.0


@dataclass
class CurveDecomposition:
    pieces: List[DecompositionPiece]
    first_coord: List[FirstCoordCertificate]
    injectivity_report: Optional[dict] = field(default=None)

    def __len__(self):
        return len(self.pieces)

    def to_dict(self):
        records = []
        for piece, certificate in zip(self.pieces, self.first_coord):
            record = piece.to_dict()
            first_center = complex(certificate.center)
            record.update(
                {
                    "ell": certificate.ell,
                    "B": certificate.B,
                    "first_coord_center": {"re": first_center.real, "im": first_center.imag},
                    "first_coord_ratio_bound": certificate.ratio_bound,
                }
            )
            records.append(record)
        return {"pieces": records, "injectivity": self.injectivity_report}


def probe_grid(interval: P.Interval, count: Optional[int] = None) -> np.ndarray:
    """
    Sample points inside an interval: a uniform grid on bounded atoms, a geometric
    one on unbounded tails.
    """
    count = count or get_settings().probe_points
    samples = []
    for atom in intervals.atoms(interval):
        lower, upper = intervals.to_float(atom.lower), intervals.to_float(atom.upper)
        if lower == upper:
            samples.append(np.array([lower]))
            continue
        if math.isfinite(lower) and math.isfinite(upper):
            points = lower + (upper - lower) * (np.arange(count) + 0.5) / count
            edges = [lower] if atom.left == P.CLOSED else []
            edges += [upper] if atom.right == P.CLOSED else []
            samples.append(np.concatenate([points, edges]))
            continue
        tail = np.geomspace(*TAIL_SPAN, count)
        if math.isfinite(lower):
            scale = max(1.0, abs(lower))
            samples.append(lower + scale * tail)
            if atom.left == P.CLOSED:
                samples.append(np.array([lower]))
        elif math.isfinite(upper):
            scale = max(1.0, abs(upper))
            samples.append(upper - scale * tail)
            if atom.right == P.CLOSED:
                samples.append(np.array([upper]))
        else:
            samples.append(np.concatenate([-tail[::-1], [0.0], tail]))
    if not samples:
        return np.zeros(0)
    return np.sort(np.concatenate(samples))


def measure_ratio(q: Polynomial, interval: P.Interval, center: complex, k: int, A: float, probes: Optional[int] = None) -> float:
    """sup / inf over the probe grid of |q(t)| / (A |t - center|^k); 1.0 when nothing is measurable."""
    points = probe_grid(interval, probes)
    if points.size == 0:
        return 1.0
    distance = np.abs(points - complex(center))
    mask = distance > 0 if k > 0 else np.ones_like(points, dtype=bool)
    if not mask.any():
        return 1.0
    values = np.abs(np.asarray(q.evaluate(points[mask]))) / (A * distance[mask] ** k)
    smallest, largest = float(np.min(values)), float(np.max(values))
    if smallest <= 0.0:
        return math.inf
    return max(1.0, largest / smallest)
