"""
@Time ： 2026-10-18
"""
import math
from typing import Optional, Sequence

import numpy as np

from services.curve.curve import PolyCurve
from services.oscillatory.extension import extension_eval
from services.oscillatory.fits import LogLogFit, loglog_fit
from services.oscillatory.functions import GaussianBump
from services.oscillatory.grid import required_nodes
from utils.errors import DegenerateDataError, DomainError
from utils.logger import Logger

logger = Logger(__name__)


def stationary_decay_fit(
    gamma: PolyCurve,
    direction: Sequence[float],
    radii: Sequence[float],
    f=None,
    weighted: bool = True,
    min_nodes: int = 1024,
    oversampling: float = 1.25,
) -> LogLogFit:
    """
    Fit |E f(r * direction)| ~ r^a over the radii; a = -1/2 at a nondegenerate
    stationary point in d = 2.
    :param f: test function, a unit Gaussian bump of width 1/4 by default
    :param oversampling: node count relative to the anti-aliasing minimum at each radius
    """
    direction = np.asarray(direction, dtype=float)
    if direction.shape != (gamma.d,) or not np.any(direction):
        raise DomainError(f"direction must be a nonzero vector in R^{gamma.d}")
    direction = direction / np.linalg.norm(direction)
    f = f if f is not None else GaussianBump(0.0, 0.25)
    support = tuple(f.support)
    values = []
    for r in radii:
        x = float(r) * direction
        nodes = max(min_nodes, int(math.ceil(oversampling * required_nodes(gamma, support, x[None, :]))))
        values.append(abs(extension_eval(gamma, f, weighted, x, nodes=nodes, support=support)))
    if not any(values):
        raise DegenerateDataError("the extension vanishes at every radius; nothing to fit")
    logger.debug(f"Service: stationary decay magnitudes {values}")
    return loglog_fit([float(r) for r in radii], values, -0.5 if gamma.d == 2 else None)
