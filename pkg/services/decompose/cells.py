"""
Nearest-zero cells: split R by the closest complex root of q, then cut each cell
into annuli |t - b| ~ distances to the other roots, so that on every piece
|q(t)| is within a factor 3 per root of A |t - b|^k.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import replace
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import portion as P

from services.decompose.pieces import DecompositionPiece, measure_ratio
from services.poly.polynomial import Polynomial
from services.poly.roots import ComplexRootSet, roots
from utils import intervals
from utils.errors import DomainError, EmptyRootSetError
from utils.logger import Logger

logger = Logger(__name__)

TIE_TOL = 1e-12


def dist_weight(zeros, t: float) -> float:
    """d(t) = min over z in zeros of |t - z|."""
    values = zeros.roots if isinstance(zeros, ComplexRootSet) else tuple(zeros)
    if not values:
        raise EmptyRootSetError("distance weight needs a nonempty root set")
    return float(min(abs(complex(t) - complex(z)) for z in values))


def _nearest(t: float, centers: np.ndarray) -> int:
    # |t - c|^2 - t^2, so far probes keep the gaps between centers; lower index wins ties
    moduli = np.abs(centers) ** 2
    shifted = moduli - 2.0 * t * centers.real
    magnitude = moduli + 2.0 * abs(t) * np.abs(centers.real)
    winner = int(np.argmin(shifted))
    slack = TIE_TOL * (magnitude + magnitude[winner]) + np.finfo(float).tiny
    tied = np.flatnonzero(shifted <= shifted[winner] + slack)
    return int(tied[0])


def _bisectors(centers: np.ndarray) -> List[float]:
    points = set()
    for i in range(len(centers)):
        for j in range(i + 1, len(centers)):
            xi, xj = centers[i].real, centers[j].real
            if xi == xj:
                continue
            points.add(float((abs(centers[j]) ** 2 - abs(centers[i]) ** 2) / (2.0 * (xj - xi))))
    return sorted(points)


def _cells(centers: np.ndarray) -> List[P.Interval]:
    """Cell of each root on R as a (possibly non-connected) portion interval."""
    cells = [P.empty() for _ in centers]
    breakpoints = _bisectors(centers)
    if not breakpoints:
        cells[_nearest(0.0, centers)] = intervals.real_line()
        return cells
    edges = [-math.inf] + breakpoints + [math.inf]
    for lower, upper in zip(edges[:-1], edges[1:]):
        if math.isinf(lower):
            probe = upper - 1.0
        elif math.isinf(upper):
            probe = lower + 1.0
        else:
            probe = 0.5 * (lower + upper)
        owner = _nearest(probe, centers)
        cells[owner] = cells[owner] | intervals.make_interval(lower, upper, False, False)
    for point in breakpoints:
        owner = _nearest(point, centers)
        cells[owner] = cells[owner] | P.singleton(point)
    return cells


def _split_at(cell: P.Interval, point: float) -> List[P.Interval]:
    """Split atoms that contain a real center in their interior; the center stays on the left."""
    pieces = []
    for atom in intervals.atoms(cell):
        if intervals.interior_contains(atom, point):
            pieces.append(atom & P.openclosed(-P.inf, point))
            pieces.append(atom & P.open(point, P.inf))
        else:
            pieces.append(atom)
    return pieces


def radial_set(center: complex, r_lower: Optional[float], r_upper: float) -> P.Interval:
    """
    Real t with r_lower < |t - center| <= r_upper, or |t - center| <= r_upper when
    r_lower is None.
    """
    x, y = center.real, abs(center.imag)
    if r_upper < y:
        return P.empty()
    reach = math.inf if math.isinf(r_upper) else math.sqrt(r_upper ** 2 - y ** 2)
    if r_lower is None or r_lower < y:
        return intervals.make_interval(x - reach, x + reach)
    inner = math.sqrt(r_lower ** 2 - y ** 2)
    return intervals.make_interval(x - reach, x - inner, True, False) | intervals.make_interval(
        x + inner, x + reach, False, True
    )


def _distance_groups(center: complex, others: Sequence[Tuple[complex, int]]) -> List[Tuple[float, int]]:
    """Distinct distances from center to the other roots with summed multiplicities."""
    groups: List[Tuple[float, int]] = []
    for distance, multiplicity in sorted((abs(center - z), m) for z, m in others):
        if groups and distance <= groups[-1][0] * (1.0 + TIE_TOL):
            groups[-1] = (groups[-1][0], groups[-1][1] + multiplicity)
        else:
            groups.append((distance, multiplicity))
    return groups


def annuli(center: complex, multiplicity: int, others: Sequence[Tuple[complex, int]], leading: float):
    """
    Yield (radial set, k, A) for A_0 = {|t-b| <= rho_1/2}, A_j = {rho_j/2 < |t-b| <= rho_{j+1}/2}
    and the outer annulus {|t-b| > rho_M/2}.
    """
    groups = _distance_groups(center, others)
    radii = [None] + [rho / 2.0 for rho, _ in groups] + [math.inf]
    for j in range(len(groups) + 1):
        near = groups[:j]
        far = groups[j:]
        k = multiplicity + sum(m for _, m in near)
        A = abs(leading) * math.prod(rho ** m for rho, m in far)
        yield radial_set(center, radii[j], radii[j + 1]), k, A


def nearest_zero_cells(q: Polynomial, probes: Optional[int] = None) -> List[DecompositionPiece]:
    """
    :param q: nonzero polynomial
    :param probes: probe points per piece for the measured ratio
    :return: pieces sorted left to right, pairwise disjoint, covering R
    """
    if q.is_zero():
        raise DomainError("nearest-zero cells of the zero polynomial are undefined")
    if q.is_constant():
        return [DecompositionPiece(intervals.real_line(), 0j, 0, abs(q.leading), 1.0)]

    root_set = roots(q)
    root_list = list(root_set)
    centers = np.array([z for z, _ in root_list], dtype=complex)
    pieces: List[DecompositionPiece] = []
    for index, cell in enumerate(_cells(centers)):
        if cell.empty:
            continue
        center, multiplicity = root_list[index]
        others = root_list[:index] + root_list[index + 1:]
        atoms = _split_at(cell, center.real) if center.imag == 0.0 else intervals.atoms(cell)
        for atom in atoms:
            for radial, k, A in annuli(center, multiplicity, others, q.leading):
                for part in intervals.atoms(atom & radial):
                    ratio = measure_ratio(q, part, center, k, A, probes)
                    pieces.append(DecompositionPiece(part, center, k, A, ratio))
    pieces.sort(key=lambda piece: (intervals.to_float(piece.interval.lower), piece.interval.left == P.OPEN))
    logger.debug(f"Service: nearest-zero cells for degree {q.degree}: {len(pieces)} pieces")
    return pieces


def project_real_centers(pieces: Iterable[DecompositionPiece], q: Polynomial, probes: Optional[int] = None) -> List[DecompositionPiece]:
    """Replace each center by its real part, re-measure the ratio and flag interior centers."""
    projected = []
    for piece in pieces:
        center = complex(complex(piece.center).real, 0.0)
        projected.append(
            replace(
                piece,
                center=center,
                ratio_bound=measure_ratio(q, piece.interval, center, piece.k, piece.A, probes),
                center_interior=intervals.interior_contains(piece.interval, center.real),
            )
        )
    return projected
