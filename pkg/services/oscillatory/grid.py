"""
Box grids in R^d for extension fields and the quadrature contract in t.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from typing import List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from services.curve.curve import PolyCurve
from utils.errors import AliasingError, DomainError, GridTooCoarseError

# phase increment allowed between consecutive t-nodes
MAX_NODE_PHASE = math.pi / 4
# phase change allowed across one x-cell
MAX_CELL_PHASE = math.pi
MAX_AXIS_POINTS = {2: 512, 3: 64}
DEFAULT_AXIS_POINTS = 16
MAX_NODES = 1 << 20


class GridSpec(BaseModel):
    box: List[Tuple[float, float]]
    resolution: Union[int, List[int]] = 64
    nodes: int = 256
    support: Optional[Tuple[float, float]] = None

    @field_validator("box")
    def validate_box(cls, value):
        if not value:
            raise ValueError("box needs at least one axis")
        for lower, upper in value:
            if not (math.isfinite(lower) and math.isfinite(upper) and lower < upper):
                raise ValueError(f"box axis ({lower}, {upper}) must be finite with lower < upper")
        return value

    @field_validator("nodes")
    def validate_nodes(cls, value):
        if not 1 <= value <= MAX_NODES:
            raise ValueError(f"nodes must be between 1 and {MAX_NODES}")
        return value

    @field_validator("support")
    def validate_support(cls, value):
        if value is not None:
            lower, upper = value
            if not (math.isfinite(lower) and math.isfinite(upper) and lower < upper):
                raise ValueError("t-support must be a bounded interval with lower < upper")
        return value

    @model_validator(mode="after")
    def validate_resolution(self):
        d = len(self.box)
        resolution = [self.resolution] * d if isinstance(self.resolution, int) else list(self.resolution)
        if len(resolution) != d:
            raise ValueError(f"resolution has {len(resolution)} entries for a {d}-dimensional box")
        cap = MAX_AXIS_POINTS.get(d, DEFAULT_AXIS_POINTS)
        for points in resolution:
            if not 2 <= points <= cap:
                raise ValueError(f"resolution per axis must be between 2 and {cap} in dimension {d}")
        self.resolution = resolution
        return self

    @classmethod
    def centered(cls, half_widths, resolution=64, nodes: int = 256, support=None) -> "GridSpec":
        return cls(box=[(-w, w) for w in half_widths], resolution=resolution, nodes=nodes, support=support)

    @property
    def d(self) -> int:
        return len(self.box)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.resolution)

    @property
    def spacing(self) -> np.ndarray:
        return np.array([(hi - lo) / n for (lo, hi), n in zip(self.box, self.resolution)])

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def axes(self) -> List[np.ndarray]:
        """Cell centers along every axis."""
        return [lo + (np.arange(n) + 0.5) * (hi - lo) / n for (lo, hi), n in zip(self.box, self.resolution)]

    def points(self) -> np.ndarray:
        """All grid points, shape (prod(resolution), d), last axis fastest."""
        mesh = np.meshgrid(*self.axes(), indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def corners(self) -> np.ndarray:
        mesh = np.meshgrid(*[np.array(axis) for axis in self.box], indexing="ij")
        return np.stack([m.ravel() for m in mesh], axis=-1)

    def boundary_mask(self) -> np.ndarray:
        """True on the outermost shell of grid cells."""
        mask = np.zeros(self.shape, dtype=bool)
        for axis in range(self.d):
            index = [slice(None)] * self.d
            index[axis] = 0
            mask[tuple(index)] = True
            index[axis] = -1
            mask[tuple(index)] = True
        return mask

    def with_support(self, support) -> "GridSpec":
        return self.model_copy(update={"support": tuple(support)})


def _require_dimension(gamma: PolyCurve, points: np.ndarray):
    if points.shape[-1] != gamma.d:
        raise DomainError(f"points of dimension {points.shape[-1]} for a curve in R^{gamma.d}")


def max_phase_speed(gamma: PolyCurve, support: Tuple[float, float], points: np.ndarray, samples: int = 257) -> float:
    """max over t in support and the given x of |x . gamma'(t)|."""
    _require_dimension(gamma, points)
    t = np.linspace(support[0], support[1], samples)
    velocity = gamma.evaluate_derivative(t, 1)
    return float(np.max(np.abs(np.atleast_2d(points) @ velocity.T)))


def required_nodes(gamma: PolyCurve, support: Tuple[float, float], points: np.ndarray) -> int:
    """Smallest midpoint-rule node count meeting the per-node phase limit on the given x."""
    speed = max_phase_speed(gamma, support, points)
    return max(1, int(math.ceil((support[1] - support[0]) * speed / MAX_NODE_PHASE)))


def check_aliasing(gamma: PolyCurve, support: Tuple[float, float], nodes: int, points: np.ndarray):
    step = (support[1] - support[0]) / nodes
    speed = max_phase_speed(gamma, support, points)
    if step * speed > MAX_NODE_PHASE:
        raise AliasingError(
            f"phase increment {step * speed:.3f} per t-node exceeds pi/4; need at least "
            f"{required_nodes(gamma, support, points)} nodes",
            nodes=nodes,
        )


def check_cell_phase(gamma: PolyCurve, support: Tuple[float, float], grid: GridSpec, samples: int = 257):
    """Sum over axes of spacing * (range of gamma_j on the support) must stay below pi."""
    t = np.linspace(support[0], support[1], samples)
    values = gamma.evaluate(t)
    spread = values.max(axis=0) - values.min(axis=0)
    phase = float(np.sum(grid.spacing * spread))
    if phase > MAX_CELL_PHASE:
        raise GridTooCoarseError(
            f"oscillation undersampled: {phase:.3f} rad per grid cell exceeds pi", phase=phase
        )


def dual_box(gamma: PolyCurve, support: Tuple[float, float], box_factor: float = 16.0, samples: int = 257) -> List[float]:
    """
    Half-widths box_factor / range(gamma_j) over the support: the box on which
    E chi_support is essentially concentrated.
    """
    t = np.linspace(support[0], support[1], samples)
    values = gamma.evaluate(t)
    spread = values.max(axis=0) - values.min(axis=0)
    if np.any(spread <= 0):
        raise DomainError("a component is constant on the support; the dual box is unbounded")
    return [float(box_factor / s) for s in spread]
