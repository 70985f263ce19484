"""
Gaps and dyadic intervals around a real center b.

Every root z of p at distance rho = |b - z| > 0 claims the shell rho/2 < |t - b| <= 2 rho;
overlapping shells are merged into dyadic intervals, the rest of R is made of gaps.
On a gap |p(t)| ~ A |t - b|^k; on a dyadic interval |t - b| ~ A.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import portion as P

from services.decompose.cells import radial_set
from services.decompose.pieces import measure_ratio, probe_grid
from services.poly.polynomial import Polynomial
from services.poly.roots import roots
from utils import intervals
from utils.errors import DomainError

GAP = "gap"
DYADIC = "dyadic"


@dataclass(frozen=True)
class D2Piece:
    interval: P.Interval
    kind: str
    k: int
    A: float
    ratio_bound: float = 1.0

    def to_dict(self):
        return {
            "interval": intervals.to_json(self.interval),
            "closed": intervals.closedness(self.interval),
            "kind": self.kind,
            "k": self.k,
            "A": self.A,
            "ratio_bound": self.ratio_bound,
        }


def _shells(distances: List[Tuple[float, int]]) -> List[Tuple[float, float]]:
    merged: List[Tuple[float, float]] = []
    for rho, _ in distances:
        lower, upper = rho / 2.0, 2.0 * rho
        if merged and lower <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], upper))
        else:
            merged.append((lower, upper))
    return merged


def _dyadic_ratio(interval: P.Interval, b: float, probes: Optional[int]) -> float:
    distance = abs(probe_grid(interval, probes) - b)
    distance = distance[distance > 0]
    if distance.size == 0:
        return 1.0
    return float(distance.max() / distance.min())


def d2_gaps_dyadic(p: Polynomial, b: float, probes: Optional[int] = None) -> List[D2Piece]:
    """
    :param p: nonzero polynomial
    :param b: real center
    :return: at most 4 deg p + 2 pieces covering R, sorted left to right
    """
    if p.is_zero():
        raise DomainError("gaps of the zero polynomial are undefined")
    b = float(b)
    if p.is_constant():
        return [D2Piece(intervals.real_line(), GAP, 0, abs(p.leading), 1.0)]

    root_set = roots(p)
    at_center = 0
    distances: List[Tuple[float, int]] = []
    for (z, multiplicity), radius in zip(root_set, root_set.cluster_radii):
        rho = abs(z - b)
        if rho <= max(radius, 1e-12 * (1.0 + abs(b))):
            at_center += multiplicity
        else:
            distances.append((rho, multiplicity))
    distances.sort()
    shells = _shells(distances)

    pieces: List[D2Piece] = []
    gap_bounds = [None] + [upper for _, upper in shells]
    gap_ends = [lower for lower, _ in shells] + [math.inf]
    for r_lower, r_upper in zip(gap_bounds, gap_ends):
        reach = 0.0 if r_lower is None else r_lower
        near = [(rho, m) for rho, m in distances if 2.0 * rho <= reach]
        far = [(rho, m) for rho, m in distances if 2.0 * rho > reach]
        k = at_center + sum(m for _, m in near)
        A = abs(p.leading) * math.prod(rho ** m for rho, m in far)
        for part in intervals.atoms(radial_set(complex(b), r_lower, r_upper)):
            pieces.append(D2Piece(part, GAP, k, A, measure_ratio(p, part, b, k, A, probes)))
    for lower, upper in shells:
        for part in intervals.atoms(radial_set(complex(b), lower, upper)):
            pieces.append(D2Piece(part, DYADIC, 0, upper, _dyadic_ratio(part, b, probes)))
    pieces.sort(key=lambda piece: (intervals.to_float(piece.interval.lower), piece.interval.left == P.OPEN))
    return pieces
