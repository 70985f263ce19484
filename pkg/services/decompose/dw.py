"""
Curve decomposition: torsion pieces refined until the first coordinate
derivative is also certified on every piece.

@Time ： 2026-10-18
"""
from __future__ import annotations

from typing import List, Optional

from services.curve.curve import PolyCurve
from services.decompose.cells import nearest_zero_cells
from services.decompose.gaps import DYADIC, d2_gaps_dyadic
from services.decompose.pieces import (
    CurveDecomposition,
    DecompositionPiece,
    FirstCoordCertificate,
    measure_ratio,
)
from utils import intervals
from utils.logger import Logger
from utils.parallel import ordered_map

logger = Logger(__name__)


def piece_bound(gamma: PolyCurve) -> int:
    """2 (dN)(N + 2) with N the largest component degree."""
    N = max(gamma.max_degree, 1)
    return 2 * (gamma.d * N) * (N + 2)


def _refine(args):
    gamma, piece, probes = args
    first = gamma.components[0].derivative(1)
    torsion = gamma.torsion
    center = complex(piece.center).real
    refined = []
    for gap in d2_gaps_dyadic(first, center, probes):
        overlap = piece.interval & gap.interval
        for part in intervals.atoms(overlap):
            if gap.kind != DYADIC:
                refined.append((part, FirstCoordCertificate(center, gap.k, gap.A), center))
                continue
            # |t - b| is roughly constant here; recenter the first coordinate on its own zeros
            for sub in nearest_zero_cells(first, probes):
                for leaf in intervals.atoms(part & sub.interval):
                    refined.append((leaf, FirstCoordCertificate(sub.center, sub.k, sub.A), sub.center))
    results = []
    for part, certificate, first_center in refined:
        torsion_piece = DecompositionPiece(
            part,
            piece.center,
            piece.k,
            piece.A,
            measure_ratio(torsion, part, piece.center, piece.k, piece.A, probes),
        )
        first_ratio = measure_ratio(first, part, first_center, certificate.ell, certificate.B, probes)
        results.append(
            (torsion_piece, FirstCoordCertificate(certificate.center, certificate.ell, certificate.B, first_ratio))
        )
    return results


def dw_decompose(gamma: PolyCurve, probes: Optional[int] = None, workers: Optional[int] = None) -> CurveDecomposition:
    """
    :param gamma: curve with L not identically zero
    :param probes: probe points per piece for the measured certificates
    :param workers: optional worker request for the per-piece refinement
    """
    gamma.require_nondegenerate()
    logger.info(f"Service: decomposing curve {gamma}")
    torsion_pieces = nearest_zero_cells(gamma.torsion, probes)
    refined = ordered_map(_refine, [(gamma, piece, probes) for piece in torsion_pieces], workers)

    pieces: List[DecompositionPiece] = []
    first_coord: List[FirstCoordCertificate] = []
    for batch in refined:
        for piece, certificate in batch:
            pieces.append(piece)
            first_coord.append(certificate)
    bound = piece_bound(gamma)
    if len(pieces) > bound:
        logger.warning(f"Service: {len(pieces)} pieces exceed the constructive bound {bound}")
    logger.info(f"Service: decomposition finished with {len(pieces)} pieces")
    return CurveDecomposition(pieces, first_coord)
