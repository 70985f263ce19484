from services.decompose.cells import dist_weight, nearest_zero_cells, project_real_centers
from services.decompose.dw import dw_decompose, piece_bound
from services.decompose.gaps import DYADIC, GAP, D2Piece, d2_gaps_dyadic
from services.decompose.levels import (
    dyadic_pieces,
    level_set_growth,
    level_set_measure,
    torsion_level_sets,
)
from services.decompose.pieces import (
    CurveDecomposition,
    DecompositionPiece,
    FirstCoordCertificate,
    measure_ratio,
    probe_grid,
)

__all__ = [
    "CurveDecomposition",
    "D2Piece",
    "DYADIC",
    "DecompositionPiece",
    "FirstCoordCertificate",
    "GAP",
    "d2_gaps_dyadic",
    "dist_weight",
    "dw_decompose",
    "dyadic_pieces",
    "level_set_growth",
    "level_set_measure",
    "measure_ratio",
    "nearest_zero_cells",
    "piece_bound",
    "probe_grid",
    "project_real_centers",
    "torsion_level_sets",
]
