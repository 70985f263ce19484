"""
Knapp examples: single caps chi_[0, delta] for the scaling law, and modulated
dyadic packets witnessing sharpness of the unweighted range.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from services.curve.curve import PolyCurve
from services.oscillatory.extension import extension_field
from services.oscillatory.fits import LogLogFit, loglog_fit
from services.oscillatory.functions import Indicator, knapp_function, weighted_lp_norm
from services.oscillatory.grid import GridSpec, dual_box, required_nodes
from utils.errors import DegenerateTorsionError, DomainError
from utils.logger import Logger

logger = Logger(__name__)

MAX_PACKETS = 20
DEFAULT_SPACING = 10.0


@dataclass(frozen=True)
class KnappPacket:
    n: int
    q_prime: float
    modulation: Tuple[float, ...]
    support: Tuple[float, float]

    @property
    def amplitude(self) -> float:
        return 2.0 ** (self.n / self.q_prime)

    def to_dict(self):
        return {
            "n": self.n,
            "amplitude": self.amplitude,
            "modulation": list(self.modulation),
            "support": list(self.support),
        }


@dataclass(frozen=True)
class PacketSum:
    """g(t) = sum_n 2^(n/q') e^{i x_n . gamma(t)} chi_[2^-n, 2^-n+1)(t)"""

    gamma: PolyCurve
    packets: Tuple[KnappPacket, ...]

    @property
    def support(self) -> Tuple[float, float]:
        return min(p.support[0] for p in self.packets), max(p.support[1] for p in self.packets)

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return tuple(sorted({edge for p in self.packets for edge in p.support}))

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        points = self.gamma.evaluate(t)
        total = np.zeros(t.shape, dtype=complex)
        for packet in self.packets:
            lower, upper = packet.support
            inside = (t >= lower) & (t < upper)
            phase = points @ np.asarray(packet.modulation)
            total = total + np.where(inside, packet.amplitude * np.exp(1j * phase), 0.0)
        return total

    def norm(self) -> float:
        """Exact ||g||_{q'}: the packets have disjoint supports and unit-modulus modulations."""
        q_prime = self.packets[0].q_prime
        mass = sum(p.amplitude ** q_prime * (p.support[1] - p.support[0]) for p in self.packets)
        return float(mass ** (1.0 / q_prime))


def packet_support(n: int) -> Tuple[float, float]:
    return 2.0 ** (-n), 2.0 ** (-n + 1)


def knapp_packets(gamma: PolyCurve, q_prime: float, N: int, spacing: float = DEFAULT_SPACING) -> Tuple[List[KnappPacket], PacketSum]:
    """
    Packets n = 1..N with modulations x_n = (offset of packet n-1) + spacing * diam(dual box of packet n) * e_1,
    so consecutive extensions sit in disjoint regions of physical space.
    """
    if not 1 <= N <= MAX_PACKETS:
        raise DomainError(f"packet count must be between 1 and {MAX_PACKETS}, got {N}")
    if spacing <= 0:
        raise DomainError(f"spacing must be positive, got {spacing}")
    packets = []
    offset = 0.0
    for n in range(1, N + 1):
        support = packet_support(n)
        diameter = float(np.linalg.norm(dual_box(gamma, support, box_factor=1.0)))
        offset += spacing * diameter
        modulation = tuple([offset] + [0.0] * (gamma.d - 1))
        packets.append(KnappPacket(n, float(q_prime), modulation, support))
    return packets, PacketSum(gamma, tuple(packets))


def _cap_field(gamma: PolyCurve, delta: float, weighted: bool, resolution, nodes: int, box_factor: float, workers):
    support = (0.0, delta)
    half_widths = dual_box(gamma, support, box_factor)
    grid = GridSpec.centered(half_widths, resolution=resolution, nodes=nodes, support=support)
    needed = required_nodes(gamma, support, grid.corners())
    if needed > nodes:
        grid = grid.model_copy(update={"nodes": int(math.ceil(needed * 1.25))})
    return extension_field(gamma, knapp_function(delta), weighted, grid, workers)


def _require_torsion(gamma: PolyCurve, lower: float, upper: float):
    gamma.require_nondegenerate()
    t = np.linspace(lower, upper, 257)[1:-1]
    if np.any(np.asarray(gamma.torsion.evaluate(t)) == 0.0):
        raise DegenerateTorsionError(f"torsion vanishes inside [{lower}, {upper}]")


def knapp_ratio(gamma: PolyCurve, p, q, delta: float, resolution=64, nodes: int = 256, box_factor: float = 16.0, workers=None) -> float:
    """||E chi_[0,delta]||_{L^q(dual box)} / ||chi_[0,delta]||_{L^p(lambda)}"""
    field = _cap_field(gamma, delta, True, resolution, nodes, box_factor, workers)
    return field.norm(q) / weighted_lp_norm(gamma, knapp_function(delta), p)


def knapp_scaling_fit(
    gamma: PolyCurve,
    q,
    deltas: Sequence[float],
    resolution=64,
    nodes: int = 256,
    box_factor: float = 16.0,
    workers: Optional[int] = None,
) -> LogLogFit:
    """
    Slope of log ||E chi_[0,delta]||_{L^q(dual box)} against log delta; the scaling
    prediction is 1 - d(d+1)/(2q).
    """
    deltas = sorted(float(delta) for delta in deltas)
    _require_torsion(gamma, 0.0, deltas[-1])
    q = float(q)
    logger.info(f"Service: Knapp scaling fit for q={q} over {len(deltas)} caps")
    norms, tails = [], []
    for delta in deltas:
        field = _cap_field(gamma, delta, True, resolution, nodes, box_factor, workers)
        norms.append(field.norm(q))
        tails.append(field.tail)
    predicted = 1.0 - gamma.d * (gamma.d + 1) / (2.0 * q)
    return loglog_fit(deltas, norms, predicted, tails=tails)


def packet_extension_norm(gamma: PolyCurve, n: int, p_prime: float, resolution=64, nodes: int = 256, box_factor: float = 16.0, workers=None) -> float:
    """||F chi_[2^-n, 2^-n+1)||_{L^p'} on the packet's dual box (unweighted)."""
    support = packet_support(n)
    half_widths = dual_box(gamma, support, box_factor)
    grid = GridSpec.centered(half_widths, resolution=resolution, nodes=nodes, support=support)
    needed = required_nodes(gamma, support, grid.corners())
    if needed > nodes:
        grid = grid.model_copy(update={"nodes": int(math.ceil(needed * 1.25))})
    field = extension_field(gamma, Indicator(support[0], support[1] - support[0]), False, grid, workers)
    return field.norm(p_prime)


def unweighted_knapp_growth(
    gamma: PolyCurve,
    q,
    Ns: Sequence[int],
    N_min: Optional[int] = None,
    resolution=64,
    nodes: int = 256,
    workers: Optional[int] = None,
) -> LogLogFit:
    """
    Slope in N of ||F g||_{p'} / ||g||_{q'} for the packet sums g with p' = N_min q.
    Packets are far apart in physical space, so ||F g||_{p'}^{p'} is the sum of the
    per-packet norms (each translated copy has the norm of the unmodulated packet).
    :param N_min: sum of the vanishing orders of the components at 0; read off the
        lowest nonzero coefficients when omitted
    """
    q = float(q)
    if q <= 1:
        raise DomainError(f"the packet witness needs q > 1, got {q}")
    if N_min is None:
        N_min = sum(_vanishing_order(component) for component in gamma.components)
    q_prime = q / (q - 1.0)
    p_prime = N_min * q
    Ns = sorted(int(N) for N in Ns)
    logger.info(f"Service: unweighted Knapp growth with p'={p_prime}, q'={q_prime:.4f}, N up to {Ns[-1]}")
    packet_norms = [
        2.0 ** (n / q_prime) * packet_extension_norm(gamma, n, p_prime, resolution, nodes, workers=workers)
        for n in range(1, Ns[-1] + 1)
    ]
    quotients = []
    for N in Ns:
        extension_norm = float(np.sum(np.asarray(packet_norms[:N]) ** p_prime) ** (1.0 / p_prime))
        _, g = knapp_packets(gamma, q_prime, N)
        quotients.append(extension_norm / g.norm())
    predicted = 1.0 / p_prime - 1.0 / q_prime
    return loglog_fit(Ns, quotients, predicted, p_prime=p_prime, q_prime=q_prime)


def _vanishing_order(component) -> int:
    for power, coefficient in enumerate(component.coeffs):
        if coefficient != 0.0:
            return power
    raise DomainError("a zero component has no vanishing order")
