"""
Extension operators
    E f(x) = int e^{i x . gamma(t)} f(t) lambda(t) dt   (weighted)
    F f(x) = int e^{i x . gamma(t)} f(t) dt             (unweighted)
by the composite midpoint rule, and truncated L^q norms of the resulting fields.

@Time ： 2026-10-18
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from services.curve.curve import PolyCurve, affine_arclength
from services.oscillatory.grid import GridSpec, check_aliasing
from utils.errors import DomainError
from utils.logger import Logger
from utils.parallel import ordered_map, worker_count

logger = Logger(__name__)

# entries of one x-chunk by t-node phase matrix
CHUNK_ENTRIES = 1 << 22


@dataclass(frozen=True)
class ExtensionField:
    grid: GridSpec
    values: np.ndarray
    weighted: bool
    tail: float

    def norm(self, q) -> float:
        return grid_norm(self.values, q, self.grid)


def quadrature(gamma: PolyCurve, f, weighted: bool, nodes: int, support: Optional[Tuple[float, float]] = None):
    """Midpoint nodes, curve points and complex weights f(t) lambda(t) dt."""
    lower, upper = support if support is not None else f.support
    step = (upper - lower) / nodes
    t = lower + (np.arange(nodes) + 0.5) * step
    weights = np.asarray(f(t), dtype=complex) * step
    if weighted:
        weights = weights * affine_arclength(gamma, t)
    return t, gamma.evaluate(t), weights


def _evaluate_chunk(args):
    x, curve_points, weights = args
    return np.exp(1j * (x @ curve_points.T)) @ weights


def _evaluate(x: np.ndarray, curve_points: np.ndarray, weights: np.ndarray, workers: Optional[int]) -> np.ndarray:
    rows = max(1, CHUNK_ENTRIES // max(1, len(weights)))
    chunks = [(x[i:i + rows], curve_points, weights) for i in range(0, len(x), rows)]
    if worker_count(workers) > 1 and len(chunks) == 1 and len(x) > 1:
        # split one large chunk so every worker gets a share
        share = -(-len(x) // worker_count(workers))
        chunks = [(x[i:i + share], curve_points, weights) for i in range(0, len(x), share)]
    return np.concatenate(ordered_map(_evaluate_chunk, chunks, workers)) if chunks else np.zeros(0, dtype=complex)


def extension_eval(gamma: PolyCurve, f, weighted: bool, x, nodes: int = 2048, support=None) -> complex:
    """
    :param f: test function with a bounded support
    :param x: point in R^d
    :param nodes: midpoint nodes on the support
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (gamma.d,):
        raise DomainError(f"x must have shape ({gamma.d},), got {x.shape}")
    support = tuple(support) if support is not None else tuple(f.support)
    check_aliasing(gamma, support, nodes, x[None, :])
    _, curve_points, weights = quadrature(gamma, f, weighted, nodes, support)
    return complex(_evaluate_chunk((x[None, :], curve_points, weights))[0])


def extension_field(gamma: PolyCurve, f, weighted: bool, grid: GridSpec, workers: Optional[int] = None) -> ExtensionField:
    """
    The extension on every grid point, shaped like the grid, with the tail indicator
    max |E| on the outer cell shell / max |E|.
    """
    if grid.d != gamma.d:
        raise DomainError(f"grid dimension {grid.d} does not match curve dimension {gamma.d}")
    support = grid.support if grid.support is not None else tuple(f.support)
    check_aliasing(gamma, support, grid.nodes, grid.corners())
    _, curve_points, weights = quadrature(gamma, f, weighted, grid.nodes, support)
    logger.debug(f"Service: extension field on {grid.shape} with {grid.nodes} nodes")
    values = _evaluate(grid.points(), curve_points, weights, workers).reshape(grid.shape)
    magnitude = np.abs(values)
    peak = float(magnitude.max()) if magnitude.size else 0.0
    tail = float(magnitude[grid.boundary_mask()].max() / peak) if peak > 0 else 0.0
    return ExtensionField(grid, values, weighted, tail)


def grid_norm(values, q, grid: Optional[GridSpec] = None, cell_volume: Optional[float] = None) -> float:
    """(sum |v|^q * cell volume)^(1/q); q < 1 gives the quasi-norm."""
    q = float(q)
    if q <= 0:
        raise DomainError(f"norm exponent must be positive, got {q}")
    volume = cell_volume if cell_volume is not None else (grid.cell_volume if grid is not None else 1.0)
    magnitude = np.abs(np.asarray(values)).ravel()
    if np.isinf(q):
        return float(magnitude.max()) if magnitude.size else 0.0
    return float((np.sum(magnitude ** q) * volume) ** (1.0 / q))
