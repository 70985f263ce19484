"""
Curve report: torsion polynomial, profile, decomposition and level-set table.

@Time ： 2026-10-18
"""
from typing import Optional, Tuple

from services.curve.curve import PolyCurve
from services.decompose.dw import dw_decompose
from services.decompose.levels import level_set_growth, torsion_level_sets
from services.exponents.profile import torsion_profile
from services.inequality_lab.scans import attach_injectivity
from services.poly.parser import format_poly
from utils import intervals
from utils.logger import Logger

logger = Logger(__name__)


def level_set_table(gamma: PolyCurve, levels: Tuple[int, int]):
    rows = []
    for n in range(levels[0], levels[1] + 1):
        atoms = torsion_level_sets(gamma, n)
        rows.append(
            {
                "n": n,
                "intervals": [intervals.to_json(atom) for atom in atoms],
                "measure": float(sum(intervals.length(atom) for atom in atoms)),
            }
        )
    return rows


def analyze_curve(
    gamma: PolyCurve,
    levels: Tuple[int, int] = (-4, 4),
    injectivity_samples: int = 0,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> dict:
    """
    :param levels: inclusive range of n for the table of {2^n <= |L| < 2^(n+1)}
    :param injectivity_samples: pairs per bounded piece for the injectivity probe; 0 skips it
    """
    gamma.require_nondegenerate()
    logger.info(f"Service: analyzing curve {gamma}")
    torsion = gamma.torsion
    decomposition = dw_decompose(gamma, workers=workers)
    if injectivity_samples:
        attach_injectivity(decomposition, gamma, injectivity_samples, seed or 0, workers)
    slope_low, slope_high = level_set_growth(gamma, range(levels[0], levels[1] + 1))
    return {
        "curve": gamma.to_dict(),
        "torsion": {
            "text": format_poly(torsion),
            "coefficients": list(torsion.coeffs),
            "degree": torsion.degree,
        },
        "profile": torsion_profile(gamma).to_dict(),
        "decomposition": decomposition.to_dict(),
        "level_sets": level_set_table(gamma, levels),
        "growth": {"slope_low": slope_low, "slope_high": slope_high},
    }
