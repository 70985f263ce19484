"""
Uniformity sweep: the best weighted and unweighted norm ratios found for each
member of a random curve family, on matched grids.

@Time ： 2026-10-18
"""
import math
from typing import List, Optional

from services.curve.curve import PolyCurve
from services.exponents.pairs import as_exponent
from services.experiments.curves import leading_torsion_ratio
from services.experiments.validation import SweepParams
from services.oscillatory.functions import family as function_family
from services.oscillatory.grid import DEFAULT_AXIS_POINTS, MAX_AXIS_POINTS, GridSpec
from services.oscillatory.search import norm_ratio_search
from services.poly.parser import format_poly
from utils.errors import TorsionLabError
from utils.logger import Logger
from utils.parallel import ordered_map

logger = Logger(__name__)

SWEEP_HEADER = ["index", "curve", "leading_torsion_ratio", "weighted_ratio", "unweighted_ratio", "evaluations", "status"]


def sweep_grid(d: int, params: SweepParams) -> GridSpec:
    resolution = min(params.resolution, MAX_AXIS_POINTS.get(d, DEFAULT_AXIS_POINTS))
    return GridSpec.centered([params.half_width] * d, resolution=resolution, nodes=params.nodes)


def _exponent(value) -> float:
    return float(as_exponent(value))


def _sweep_row(args):
    index, gamma, params = args
    row = {
        "index": index,
        "curve": "; ".join(format_poly(c) for c in gamma.components),
        "leading_torsion_ratio": leading_torsion_ratio(gamma),
        "weighted_ratio": None,
        "unweighted_ratio": None,
        "evaluations": 0,
        "status": "ok",
    }
    grid = sweep_grid(gamma.d, params)
    tests = function_family(params.family)
    p, q = _exponent(params.p), _exponent(params.q)
    try:
        weighted = norm_ratio_search(gamma, p, q, tests, params.budget, grid, workers=1, weighted=True)
        unweighted = norm_ratio_search(gamma, p, q, tests, params.budget, grid, workers=1, weighted=False)
    except TorsionLabError as e:
        # per-curve failures are recorded, not fatal
        row["status"] = type(e).__name__
        return row
    row["weighted_ratio"] = weighted.lower_bound
    row["unweighted_ratio"] = unweighted.lower_bound
    row["evaluations"] = weighted.evaluations + unweighted.evaluations
    return row


def _family_max(rows, key) -> Optional[float]:
    values = [row[key] for row in rows if row[key] is not None and math.isfinite(row[key])]
    return max(values) if values else None


def uniformity_sweep(curves: List[PolyCurve], params: SweepParams, workers: Optional[int] = None) -> dict:
    """
    :param curves: the family, in report order
    :param params: exponents, test-function family, search budget and the shared grid
    :return: {"rows": [...], "family_max": ..., "unweighted_family_max": ..., "failures": ...}
    """
    logger.info(f"Service: uniformity sweep over {len(curves)} curves at (p, q) = ({params.p}, {params.q})")
    rows = ordered_map(_sweep_row, [(i, gamma, params) for i, gamma in enumerate(curves)], workers)
    failures = sum(1 for row in rows if row["status"] != "ok")
    if failures:
        logger.warning(f"Service: {failures} sweep rows failed")
    return {
        "rows": rows,
        "family_max": _family_max(rows, "weighted_ratio"),
        "unweighted_family_max": _family_max(rows, "unweighted_ratio"),
        "failures": failures,
        "grid": sweep_grid(curves[0].d, params).model_dump() if curves else None,
    }
