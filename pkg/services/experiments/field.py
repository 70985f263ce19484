"""
@Time ： 2026-10-18
"""
from typing import Optional

from services.curve.curve import PolyCurve
from services.experiments.validation import FieldParams
from services.oscillatory.extension import ExtensionField, extension_field
from services.oscillatory.functions import GaussianBump
from services.oscillatory.grid import GridSpec
from utils.logger import Logger

logger = Logger(__name__)

DEFAULT_HALF_WIDTH = 16.0


def field_grid(d: int, params: FieldParams) -> GridSpec:
    box = params.box if params.box is not None else [(-DEFAULT_HALF_WIDTH, DEFAULT_HALF_WIDTH)] * d
    return GridSpec(box=box, resolution=params.resolution, nodes=params.nodes)


def field_dump(gamma: PolyCurve, params: FieldParams, workers: Optional[int] = None) -> ExtensionField:
    """
    E bump on the configured box. The node count is taken as configured, so an
    undersampled quadrature fails with AliasingError instead of being raised silently.
    """
    bump = GaussianBump(params.bump.center, params.bump.width, params.bump.frequency)
    grid = field_grid(gamma.d, params).with_support(bump.support)
    logger.info(f"Service: field dump of {gamma} on {grid.shape}")
    return extension_field(gamma, bump, params.weighted, grid, workers)
