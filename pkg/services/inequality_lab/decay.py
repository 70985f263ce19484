"""
Multilinear decay across separated dyadic scales in the plane (D = 3 factors).

For a top scale n_top and a step s the pieces are taken at
n_1 = n_top - 2s, n_2 = n_top - s, n_3 = n_top, and the fitted quantity is log2 of
    || prod_j E chi_{I_{n_j}} ||_{L^{q/D}} / prod_j ||chi_{I_{n_j}}||_{L^p(lambda)},  p' = q/D,
against the separation n_3 - n_1 = 2s, on the dual box of the top piece.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats
from sympy import Rational

from services.curve.curve import PolyCurve
from services.decompose.levels import dyadic_pieces
from services.decompose.pieces import DecompositionPiece
from services.exponents.pairs import conjugate
from services.oscillatory.extension import extension_field, grid_norm
from services.oscillatory.functions import Indicator, weighted_lp_norm
from services.oscillatory.grid import GridSpec, check_cell_phase, dual_box, required_nodes
from utils import intervals
from utils.errors import DomainError, EmptyPieceError
from utils.logger import Logger

logger = Logger(__name__)

FACTORS = 3
MIN_FIT_POINTS = 4
NODE_HEADROOM = 1.25


@dataclass
class DecayFit:
    epsilon: float
    intercept: float
    r_squared: float
    points: List[Tuple[float, float]]
    product_norms: List[float] = field(default_factory=list)
    piece_norms: List[List[float]] = field(default_factory=list)
    split_index: Optional[int] = None
    predicted_epsilon: Optional[str] = None

    def to_dict(self):
        return {
            "epsilon": self.epsilon,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "points": [list(p) for p in self.points],
            "product_norms": self.product_norms,
            "piece_norms": self.piece_norms,
            "split_index": self.split_index,
            "predicted_epsilon": self.predicted_epsilon,
        }


def pigeonhole_split_index(ns: Sequence[int]) -> int:
    """Smallest k (1-based) with n_{k+1} - n_k >= (n_last - n_first) / len(ns), after sorting."""
    values = sorted(int(n) for n in ns)
    if len(values) < 2:
        raise DomainError("the split index needs at least two scales")
    threshold = Rational(values[-1] - values[0], len(values))
    for k in range(len(values) - 1):
        if values[k + 1] - values[k] >= threshold:
            return k + 1
    # unreachable: the gaps sum to n_last - n_first
    raise DomainError("no gap reaches the pigeonhole threshold")


def predicted_decay_exponent(d: int, k: int) -> Rational:
    """k(d-k)/(2d) * 1/d"""
    if not 1 <= k < d:
        raise DomainError(f"split index must satisfy 1 <= k < d, got k={k}, d={d}")
    return Rational(k * (d - k), 2 * d) * Rational(1, d)


def split_for_scales(d: int, scales: Sequence[int]) -> Tuple[int, Rational]:
    """Pigeonhole split of the factor scales and the decay exponent it predicts."""
    k = pigeonhole_split_index(scales)
    # the lower group carries at most d - 1 curve variables
    return k, predicted_decay_exponent(d, min(k, d - 1))


def _piece_support(piece: DecompositionPiece, n: int) -> Tuple[float, float]:
    atoms = intervals.atoms(dyadic_pieces(piece, n))
    if not atoms:
        raise EmptyPieceError(f"dyadic piece n={n} is empty", n=n)
    if len(atoms) > 1:
        raise DomainError("the piece straddles its center; use a one-sided piece")
    return intervals.bounds(atoms[0])


def _factor_field(gamma: PolyCurve, support: Tuple[float, float], grid: GridSpec, workers) -> np.ndarray:
    local = grid.with_support(support)
    needed = required_nodes(gamma, support, local.corners())
    if needed > local.nodes:
        local = local.model_copy(update={"nodes": int(math.ceil(needed * NODE_HEADROOM))})
    indicator = Indicator(support[0], support[1] - support[0])
    return extension_field(gamma, indicator, True, local, workers).values


def multilinear_decay_fit(
    gamma: PolyCurve,
    piece: DecompositionPiece,
    n_top: int,
    steps: Sequence[int] = (0, 1, 2, 3),
    q: float = 6.0,
    resolution: int = 64,
    nodes: int = 256,
    box_factor: float = 16.0,
    workers: Optional[int] = None,
) -> DecayFit:
    """
    :param piece: one-sided decomposition piece with a real center
    :param n_top: scale of the top factor; the grid is its dual box
    :param steps: values of s, at least four distinct nonnegative ones
    :param q: the product is measured in L^{q/3}; q/3 >= 1 is required
    """
    if gamma.d != 2:
        raise DomainError(f"the decay experiment runs in the plane, got d={gamma.d}")
    steps = sorted({int(s) for s in steps})
    if len(steps) < MIN_FIT_POINTS or steps[0] < 0:
        raise DomainError(f"need at least {MIN_FIT_POINTS} distinct nonnegative steps", steps=steps)
    p = float(conjugate(Rational(q) / FACTORS))

    top_support = _piece_support(piece, n_top)
    grid = GridSpec.centered(dual_box(gamma, top_support, box_factor), resolution=resolution, nodes=nodes)
    lowest = _piece_support(piece, n_top - 2 * steps[-1])
    check_cell_phase(gamma, (min(lowest[0], top_support[0]), max(lowest[1], top_support[1])), grid)
    logger.info(f"Service: multilinear decay fit at n_top={n_top} over steps {steps}")

    cache = {}

    def factor(n: int):
        if n not in cache:
            support = _piece_support(piece, n)
            values = _factor_field(gamma, support, grid, workers)
            cache[n] = (values, weighted_lp_norm(gamma, Indicator(support[0], support[1] - support[0]), p))
        return cache[n]

    points, product_norms, piece_norms = [], [], []
    for s in steps:
        scales = (n_top - 2 * s, n_top - s, n_top)
        product = np.ones(grid.shape, dtype=complex)
        denominator = 1.0
        for n in scales:
            values, norm = factor(n)
            product = product * values
            denominator *= norm
        product_norm = grid_norm(product, q / FACTORS, grid)
        product_norms.append(product_norm)
        piece_norms.append([factor(n)[1] for n in scales])
        points.append((float(2 * s), float(np.log2(product_norm / denominator))))

    result = stats.linregress([x for x, _ in points], [y for _, y in points])
    k, predicted = split_for_scales(gamma.d, (n_top - 2 * steps[-1], n_top - steps[-1], n_top))
    return DecayFit(
        epsilon=-float(result.slope),
        intercept=float(result.intercept),
        r_squared=float(result.rvalue ** 2),
        points=points,
        product_norms=product_norms,
        piece_norms=piece_norms,
        split_index=k,
        predicted_epsilon=str(predicted),
    )
