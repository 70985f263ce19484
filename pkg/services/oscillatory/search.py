"""
Lower bounds on the truncated operator norm of E from L^p(lambda) to L^q(box)
by coordinate ascent over a parametric family of test functions.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from services.curve.curve import PolyCurve
from services.oscillatory.extension import extension_field
from services.oscillatory.functions import FunctionFamily, lp_norm, weighted_lp_norm
from services.oscillatory.grid import GridSpec, required_nodes
from utils.errors import TorsionLabError
from utils.logger import Logger

logger = Logger(__name__)

MIN_STEP_FRACTION = 1e-3


@dataclass
class SearchResult:
    lower_bound: float
    parameters: Dict[str, float]
    evaluations: int
    history: List[Tuple[int, float]] = field(default_factory=list)

    def to_dict(self):
        return {
            "lower_bound": self.lower_bound,
            "parameters": self.parameters,
            "evaluations": self.evaluations,
            "history": [list(item) for item in self.history],
        }


def norm_ratio(gamma: PolyCurve, f, p, q, grid: GridSpec, workers: Optional[int] = None, weighted: bool = True) -> float:
    """
    grid_norm(E f, q) / ||f||_{L^p(lambda)}, or grid_norm(F f, q) / ||f||_{L^p(dt)} when
    unweighted; nodes are raised to the anti-aliasing minimum.
    """
    support = tuple(f.support)
    local = grid.with_support(support)
    needed = required_nodes(gamma, support, local.corners())
    if needed > local.nodes:
        local = local.model_copy(update={"nodes": int(math.ceil(needed * 1.25))})
    denominator = weighted_lp_norm(gamma, f, p) if weighted else lp_norm(f, p)
    if denominator == 0.0:
        return 0.0
    return extension_field(gamma, f, weighted, local, workers).norm(q) / denominator


def norm_ratio_search(
    gamma: PolyCurve,
    p,
    q,
    family: FunctionFamily,
    budget: int,
    grid: GridSpec,
    workers: Optional[int] = None,
    weighted: bool = True,
) -> SearchResult:
    """
    Coordinate ascent: try +-step on each parameter, keep improvements, halve the
    steps after a sweep without one. Stops when the budget of ratio evaluations is
    spent or the steps are negligible; both are normal terminations.
    """
    current = family.start()
    steps = [0.25 * (hi - lo) for lo, hi in family.bounds]

    evaluations = 0

    def evaluate(values) -> float:
        nonlocal evaluations
        evaluations += 1
        try:
            return norm_ratio(gamma, family.build(values), p, q, grid, workers, weighted)
        except TorsionLabError as e:
            logger.debug(f"Service: family point {values} rejected: {e}")
            return -math.inf

    best = evaluate(current)
    history = [(evaluations, best)]
    logger.info(f"Service: norm search over {family.name} with budget {budget}")
    while evaluations < budget:
        improved = False
        for index in range(len(current)):
            for sign in (1.0, -1.0):
                if evaluations >= budget:
                    break
                candidate = list(current)
                candidate[index] += sign * steps[index]
                candidate = family.clip(candidate)
                if candidate == current:
                    continue
                value = evaluate(candidate)
                if value > best:
                    best, current, improved = value, candidate, True
                    history.append((evaluations, best))
                    break
        if not improved:
            steps = [s / 2.0 for s in steps]
            if all(s <= MIN_STEP_FRACTION * (hi - lo) for s, (lo, hi) in zip(steps, family.bounds)):
                break
    return SearchResult(best, dict(zip(family.parameters, current)), evaluations, history)
