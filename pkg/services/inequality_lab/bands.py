"""
Frequency bands of the first coordinate on dyadic pieces.

@Time ： 2026-10-18
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from services.curve.curve import PolyCurve
from services.decompose.levels import dyadic_pieces
from services.decompose.pieces import DecompositionPiece, probe_grid
from services.poly.polynomial import Polynomial
from services.poly.roots import real_roots
from utils import intervals
from utils.errors import EmptyPieceError

VANISHING_TOL = 1e-12


@dataclass(frozen=True)
class FrequencyBand:
    band: Tuple[float, float]
    comparability: float
    ell: int

    def to_dict(self):
        return {"band": list(self.band), "comparability": self.comparability, "ell": self.ell}


def vanishing_order(q: Polynomial, point: float, tol: float = VANISHING_TOL) -> int:
    """Order of vanishing at a point, from the Taylor coefficients of q(t + point)."""
    coeffs = q.compose_affine(1.0, point).coeffs
    scale = max((abs(c) for c in coeffs), default=0.0)
    for order, coefficient in enumerate(coeffs):
        if abs(coefficient) > tol * scale:
            return order
    return len(coeffs)


def _anchor(piece: DecompositionPiece, b: float) -> float:
    """Point of the closure of the piece nearest to b."""
    lower, upper = intervals.bounds(piece.interval)
    return float(min(max(b, lower), upper))


def _range_on(g: Polynomial, atom) -> Tuple[float, float]:
    """Exact min and max of |g| on the closure of a bounded atom."""
    lower, upper = intervals.to_float(atom.lower), intervals.to_float(atom.upper)
    candidates = [lower, upper]
    derivative = g.derivative(1)
    if not derivative.is_zero() and not derivative.is_constant():
        candidates += [root for root, _ in real_roots(derivative) if lower < root < upper]
    values = [abs(float(g.evaluate(t))) for t in candidates]
    crosses_zero = not g.is_constant() and any(lower <= root <= upper for root, _ in real_roots(g))
    return (0.0 if crosses_zero else min(values)), max(values)


def freq_band_check(gamma: PolyCurve, piece: DecompositionPiece, n: int, ell: Optional[int] = None) -> FrequencyBand:
    """
    Normalizes the piece to center 0 with gamma_1 vanishing at the piece end nearest
    the center, then returns the range of |gamma_1| over I_{j,n} and the measured
    max/min of |gamma_1(t)| / |t|^(ell+1) there.
    :param ell: vanishing order of gamma_1' at the center; computed when omitted
    """
    b = complex(piece.center).real
    real_piece = replace(piece, center=complex(b, 0.0))
    dyadic = dyadic_pieces(real_piece, n)
    if dyadic.empty:
        raise EmptyPieceError(f"dyadic piece n={n} of {intervals.to_json(piece.interval)} is empty", n=n)
    first = gamma.components[0]
    if ell is None:
        ell = vanishing_order(first.derivative(1), b)
    anchor = _anchor(piece, b)
    # gamma_1 measured from its value at the anchor, in the variable t - b
    g = (first - float(first.evaluate(anchor))).compose_affine(1.0, b)
    shifted = dyadic.apply(lambda atom: atom.replace(lower=lambda v: v - b, upper=lambda v: v - b))

    lows, highs = [], []
    for atom in intervals.atoms(shifted):
        low, high = _range_on(g, atom)
        lows.append(low)
        highs.append(high)
    points = probe_grid(shifted)
    points = points[points != 0]
    ratios = np.abs(np.asarray(g.evaluate(points))) / np.abs(points) ** (ell + 1)
    comparability = float(ratios.max() / ratios.min()) if ratios.size and ratios.min() > 0 else float("inf")
    return FrequencyBand((min(lows), max(highs)), comparability, ell)
