"""
Curve sources for experiments: inline, from a JSON file, or a seeded random family.

@Time ： 2026-10-18
"""
from typing import List, Tuple

import numpy as np

from daos.curve_dao import load_curve
from services.curve.curve import PolyCurve
from services.experiments.validation import CurveSource, RandomFamily
from utils.errors import ConfigError, DegenerateTorsionError
from utils.logger import Logger
from utils.rng import stream

logger = Logger(__name__)

MAX_ATTEMPTS = 1000


def leading_torsion_ratio(gamma: PolyCurve) -> float:
    """|leading coefficient of L| / max |coefficient of L|; 0 for degenerate curves."""
    if gamma.is_degenerate:
        return 0.0
    coeffs = np.abs(np.asarray(gamma.torsion.coeffs, dtype=float))
    return float(coeffs[-1] / coeffs.max())


def random_curve(family: RandomFamily, seed: int, index: int) -> PolyCurve:
    """
    The index-th member: coefficients uniform in [-box, box], degree <= N per
    component, redrawn while the torsion is degenerate or its leading coefficient
    falls under the family threshold.
    """
    for attempt in range(MAX_ATTEMPTS):
        rng = stream(seed, index, attempt)
        coeffs = rng.uniform(-family.box, family.box, size=(family.d, family.N + 1))
        gamma = PolyCurve.from_coeffs(coeffs.tolist())
        ratio = leading_torsion_ratio(gamma)
        if ratio > 0.0 and ratio >= family.min_leading_torsion:
            return gamma
        logger.info(f"Service: rejected random curve {index}/{attempt} with leading torsion ratio {ratio:.3g}")
    raise DegenerateTorsionError(
        f"no acceptable curve after {MAX_ATTEMPTS} draws", index=index, threshold=family.min_leading_torsion
    )


def random_curve_family(family: RandomFamily, seed: int) -> List[PolyCurve]:
    return [random_curve(family, seed, index) for index in range(family.count)]


def resolve_curves(source: CurveSource, seed=None) -> List[Tuple[str, PolyCurve]]:
    """(label, curve) pairs for a configured source."""
    if source is None:
        raise ConfigError("the experiment needs a curve source")
    if source.random is not None:
        if seed is None:
            raise ConfigError("a seed is required for a random curve family")
        return [(f"random-{i}", gamma) for i, gamma in enumerate(random_curve_family(source.random, seed))]
    if source.path is not None:
        gamma = load_curve(source.path)
        return [(source.path, gamma)]
    gamma = source.inline().to_curve()
    return [(str(gamma), gamma)]
