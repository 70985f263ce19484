"""
Sampling scans for the geometric inequality, offspring torsion and injectivity
of the sum map Phi(t) = gamma(t_1) + ... + gamma(t_d).

Sample batches are drawn from counter-based streams keyed by (seed, batch), so a
scan gives the same numbers for any worker count.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from services.curve.curve import PolyCurve, divided_difference_batch
from services.curve.offspring import OffspringSpec, offspring
from services.decompose.pieces import CurveDecomposition, DecompositionPiece
from services.poly.roots import real_roots
from utils import intervals
from utils.errors import DegenerateTorsionError, DomainError, EmptyPieceError, NotNormalizedError
from utils.logger import Logger
from utils.parallel import ordered_map
from utils.rng import stream

logger = Logger(__name__)

FIRST_BATCH = 1000
NORMALIZATION_TOL = 1e-9
OFFSPRING_MAX_K = 4
OFFSPRING_T_SAMPLES = 16


@dataclass
class RatioScanReport:
    min_ratio: float
    argmin: List[float]
    samples: int
    history: List[Tuple[int, float]] = field(default_factory=list)

    def to_dict(self):
        return {
            "min_ratio": self.min_ratio,
            "argmin": list(self.argmin),
            "samples": self.samples,
            "history": [list(item) for item in self.history],
        }


@dataclass
class InjectivityReport:
    min_image_gap: float
    witness: Tuple[List[float], List[float]]
    samples: int

    def to_dict(self):
        return {"min_image_gap": self.min_image_gap, "witness": [list(w) for w in self.witness], "samples": self.samples}


def piece_bounds(piece) -> Tuple[float, float]:
    """(lower, upper) of a bounded piece given as a tuple, portion interval or DecompositionPiece."""
    if isinstance(piece, DecompositionPiece):
        piece = piece.interval
    if isinstance(piece, (tuple, list)):
        lower, upper = float(piece[0]), float(piece[1])
    else:
        if piece.empty:
            raise EmptyPieceError("the piece is empty")
        lower, upper = intervals.bounds(piece)
    if not (math.isfinite(lower) and math.isfinite(upper)):
        raise DomainError(f"the piece [{lower}, {upper}] must be bounded")
    if not lower < upper:
        raise EmptyPieceError(f"the piece [{lower}, {upper}] has no interior")
    return lower, upper


def _batches(samples: int) -> List[int]:
    """Doubling batch sizes summing to samples."""
    sizes, size, total = [], FIRST_BATCH, 0
    while total < samples:
        size = min(size, samples - total)
        sizes.append(size)
        total += size
        size *= 2
    return sizes


def _require_no_torsion_zero(gamma: PolyCurve, lower: float, upper: float):
    gamma.require_nondegenerate()
    torsion = gamma.torsion
    if torsion.is_constant():
        return
    inside = [root for root, _ in real_roots(torsion) if lower < root < upper]
    if inside:
        raise DegenerateTorsionError(
            f"torsion vanishes inside the piece at {inside}", lower=lower, upper=upper
        )


def _ratio_batch(args):
    gamma, lower, upper, size, seed, index = args
    rng = stream(seed, index)
    t = np.sort(rng.uniform(lower, upper, size=(size, gamma.d)), axis=1)
    distinct = np.all(np.diff(t, axis=1) > 0, axis=1)
    t = t[distinct]
    if t.size == 0:
        return math.inf, []
    factor = np.abs(np.linalg.det(divided_difference_batch(gamma, t)))
    torsion = np.abs(np.asarray(gamma.torsion.evaluate(t)))
    ratios = factor / np.prod(torsion ** (1.0 / gamma.d), axis=1)
    best = int(np.argmin(ratios))
    return float(ratios[best]), t[best].tolist()


def geometric_ratio_scan(gamma: PolyCurve, piece, samples: int, seed: int, workers: Optional[int] = None) -> RatioScanReport:
    """
    min over sampled increasing tuples of |J(t)| / (prod |L(t_j)|^(1/d) * prod_{i<j} |t_j - t_i|),
    computed as |det of the divided-difference columns| / prod |L(t_j)|^(1/d).
    """
    lower, upper = piece_bounds(piece)
    if samples < gamma.d:
        raise DomainError(f"need at least d={gamma.d} samples, got {samples}")
    _require_no_torsion_zero(gamma, lower, upper)
    sizes = _batches(samples)
    results = ordered_map(
        _ratio_batch, [(gamma, lower, upper, size, seed, index) for index, size in enumerate(sizes)], workers
    )
    best, argmin, drawn, history = math.inf, [], 0, []
    for size, (ratio, point) in zip(sizes, results):
        drawn += size
        if ratio < best:
            best, argmin = ratio, point
        history.append((drawn, best))
    logger.info(f"Service: geometric ratio scan on [{lower}, {upper}] with {samples} samples: min {best:.6g}")
    return RatioScanReport(best, argmin, samples, history)


def require_normalized(gamma: PolyCurve, tol: float = NORMALIZATION_TOL):
    """gamma(0) = 0 and gamma^(j)(0) = e_j."""
    origin = gamma.evaluate(0.0)
    frame = gamma.derivative_matrix(0.0)
    if np.max(np.abs(origin)) > tol or np.max(np.abs(frame - np.eye(gamma.d))) > tol:
        raise NotNormalizedError("curve is not normalized at 0; apply normalize_at first")


def offspring_torsion_check(gamma: PolyCurve, delta: float, trials: int, seed: int) -> float:
    """
    max over random K <= 4, h in [0, 2 delta]^K and t in I_h cap [-delta, delta] of
    |L_{gamma_h}(t) - 1|, with I = [-delta, delta]. Samples are drawn on the unit
    scale and multiplied by delta, so one seed gives comparable scans across deltas.
    """
    if not 0.0 < delta < 1.0:
        raise DomainError(f"delta must lie in (0, 1), got {delta}")
    require_normalized(gamma)
    base = intervals.make_interval(-delta, delta)
    worst = 0.0
    for trial in range(trials):
        rng = stream(seed, trial)
        K = int(rng.integers(1, OFFSPRING_MAX_K + 1))
        shifts = tuple(2.0 * delta * rng.uniform(0.0, 1.0, size=K))
        unit_t = rng.uniform(0.0, 1.0, size=OFFSPRING_T_SAMPLES)
        child, child_interval = offspring(gamma, OffspringSpec(shifts, base))
        window = child_interval & base
        if window.empty:
            continue
        lower, upper = intervals.bounds(window)
        t = lower + (upper - lower) * unit_t
        deviation = float(np.max(np.abs(np.asarray(child.torsion.evaluate(t)) - 1.0)))
        worst = max(worst, deviation)
    logger.debug(f"Service: offspring torsion deviation {worst:.3g} at delta={delta}")
    return worst


def _injectivity_batch(args):
    gamma, lower, upper, size, seed, index = args
    rng = stream(seed, index)
    s = np.sort(rng.uniform(lower, upper, size=(size, gamma.d)), axis=1)
    t = np.sort(rng.uniform(lower, upper, size=(size, gamma.d)), axis=1)
    # half of the pairs are local perturbations, where collisions would show first
    local = size // 2
    scale = (upper - lower) * 10.0 ** rng.uniform(-6, -1, size=(local, 1))
    t[:local] = np.sort(np.clip(s[:local] + scale * rng.standard_normal((local, gamma.d)), lower, upper), axis=1)
    gap = np.linalg.norm(s - t, axis=1)
    keep = gap > 0
    s, t, gap = s[keep], t[keep], gap[keep]
    if gap.size == 0:
        return math.inf, ([], [])
    image_s = gamma.evaluate(s).sum(axis=1)
    image_t = gamma.evaluate(t).sum(axis=1)
    ratios = np.linalg.norm(image_s - image_t, axis=1) / gap
    best = int(np.argmin(ratios))
    return float(ratios[best]), (s[best].tolist(), t[best].tolist())


def injectivity_probe(gamma: PolyCurve, piece, samples: int, seed: int, workers: Optional[int] = None) -> InjectivityReport:
    """
    min over sampled pairs of increasing tuples s != t of |Phi(s) - Phi(t)| / |s - t|;
    a value near zero flags a suspected collision, returned as the witness.
    """
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    lower, upper = piece_bounds(piece)
    sizes = _batches(samples)
    results = ordered_map(
        _injectivity_batch, [(gamma, lower, upper, size, seed, index) for index, size in enumerate(sizes)], workers
    )
    best, witness = math.inf, ([], [])
    for ratio, pair in results:
        if ratio < best:
            best, witness = ratio, pair
    return InjectivityReport(best, witness, samples)


def attach_injectivity(decomposition: CurveDecomposition, gamma: PolyCurve, samples: int, seed: int, workers: Optional[int] = None) -> CurveDecomposition:
    """Probe every bounded piece and record the smallest floor on the decomposition."""
    floor, witness, probed = math.inf, None, 0
    for index, piece in enumerate(decomposition.pieces):
        if not intervals.is_bounded(piece.interval) or intervals.length(piece.interval) <= 0:
            continue
        report = injectivity_probe(gamma, piece, samples, seed + index, workers)
        probed += 1
        if report.min_image_gap < floor:
            floor, witness = report.min_image_gap, {"piece": index, "pair": [list(w) for w in report.witness]}
    decomposition.injectivity_report = {
        "min_floor": floor if probed else None,
        "pieces_probed": probed,
        "witness": witness,
        "samples": samples,
    }
    return decomposition
