"""
@Time ： 2026-10-18
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import stats

from utils.errors import DegenerateDataError


@dataclass(frozen=True)
class LogLogFit:
    """Least-squares line through (log2 x, log2 y)."""

    slope: float
    intercept: float
    r_squared: float
    points: List[Tuple[float, float]]
    predicted: Optional[float] = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "r_squared": self.r_squared,
            "points": [list(p) for p in self.points],
            "predicted": self.predicted,
            **self.details,
        }


def loglog_fit(xs: Sequence[float], ys: Sequence[float], predicted: Optional[float] = None, **details) -> LogLogFit:
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.size < 2:
        raise DegenerateDataError("a fit needs at least two points")
    if np.any(ys <= 0) or not np.all(np.isfinite(ys)):
        raise DegenerateDataError("fit values must be positive and finite", values=ys.tolist())
    lx, ly = np.log2(xs), np.log2(ys)
    if np.ptp(lx) == 0:
        raise DegenerateDataError("fit abscissae are all equal")
    result = stats.linregress(lx, ly)
    return LogLogFit(
        float(result.slope),
        float(result.intercept),
        float(result.rvalue ** 2),
        [(float(x), float(y)) for x, y in zip(xs, ys)],
        predicted,
        details,
    )
