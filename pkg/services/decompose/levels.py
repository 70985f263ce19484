"""
Dyadic level sets of the torsion and dyadic pieces around a real center.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from typing import Iterable, List, Optional, Tuple

import numpy as np
import portion as P

from services.curve.curve import PolyCurve
from services.decompose.pieces import DecompositionPiece
from services.poly.polynomial import Polynomial
from services.poly.roots import real_roots
from utils import intervals
from utils.errors import DomainError
from utils.logger import Logger

logger = Logger(__name__)


def _crossings(L: Polynomial, level: float) -> List[float]:
    """Real t with |L(t)| = level, from L - level and L + level (the factors of L^2 - level^2)."""
    points = set()
    for shifted in (L - level, L + level):
        if shifted.is_constant():
            continue
        points.update(root for root, _ in real_roots(shifted))
    return sorted(points)


def level_set(L: Polynomial, lower: float, upper: float) -> P.Interval:
    """{t : lower <= |L(t)| < upper} as a finite union of intervals."""
    closed_points = _crossings(L, lower)
    open_points = _crossings(L, upper)
    breakpoints = sorted(set(closed_points) | set(open_points))

    def member(t: float) -> bool:
        value = abs(float(L.evaluate(t)))
        return lower <= value < upper

    result = P.empty()
    edges = [-math.inf] + breakpoints + [math.inf]
    for left, right in zip(edges[:-1], edges[1:]):
        if math.isinf(left) and math.isinf(right):
            probe = 0.0
        elif math.isinf(left):
            probe = right - 1.0
        elif math.isinf(right):
            probe = left + 1.0
        else:
            probe = 0.5 * (left + right)
        if member(probe):
            result = result | intervals.make_interval(left, right, False, False)
    # |L| = lower belongs to the set, |L| = upper does not
    closed = set(closed_points) - set(open_points)
    for point in closed:
        result = result | P.singleton(point)
    for point in open_points:
        result = result - P.singleton(point)
    return result


def torsion_level_sets(gamma: PolyCurve, n: int) -> List[P.Interval]:
    """
    I_n = {t : 2^n <= |L(t)| < 2^(n+1)}, one atomic interval per list entry.
    """
    gamma.require_nondegenerate()
    level = level_set(gamma.torsion, 2.0 ** n, 2.0 ** (n + 1))
    return intervals.atoms(level)


def level_set_measure(gamma: PolyCurve, n: int) -> float:
    return float(sum(intervals.length(atom) for atom in torsion_level_sets(gamma, n)))


def _slope(ns: List[int], measures: List[float]) -> Optional[float]:
    usable = [(n, m) for n, m in zip(ns, measures) if 0.0 < m < math.inf]
    if len(usable) < 2:
        return None
    x = np.array([n for n, _ in usable], dtype=float)
    y = np.log2([m for _, m in usable])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def level_set_growth(gamma: PolyCurve, ns: Iterable[int]) -> Tuple[Optional[float], Optional[float]]:
    """
    Least-squares slopes of log2 |I_n| against n on n <= 0 and on n >= 0.
    For large |n| they approach 1 / (largest real vanishing order of L) and 1 / deg L.
    """
    ns = sorted(set(int(n) for n in ns))
    measures = [level_set_measure(gamma, n) for n in ns]
    low = [(n, m) for n, m in zip(ns, measures) if n <= 0]
    high = [(n, m) for n, m in zip(ns, measures) if n >= 0]
    slope_low = _slope([n for n, _ in low], [m for _, m in low])
    slope_high = _slope([n for n, _ in high], [m for _, m in high])
    logger.debug(f"Service: level-set growth slopes {slope_low} / {slope_high}")
    return slope_low, slope_high


def dyadic_pieces(piece: DecompositionPiece, n: int) -> P.Interval:
    """I_{j,n} = {t in I_j : 2^n <= |t - b_j| < 2^(n+1)}, possibly empty."""
    if not piece.has_real_center:
        raise DomainError(
            "dyadic pieces need a real center; project the piece first", center=str(piece.center)
        )
    b = complex(piece.center).real
    lower, upper = 2.0 ** n, 2.0 ** (n + 1)
    shell = intervals.make_interval(b + lower, b + upper, True, False) | intervals.make_interval(
        b - upper, b - lower, False, True
    )
    return piece.interval & shell
