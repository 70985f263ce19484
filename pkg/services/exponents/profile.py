"""
Torsion profile of a curve and the weighted/unweighted exponent ranges built on it.

@Time ： 2026-10-18
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from sympy import Rational

from services.curve.curve import PolyCurve
from services.exponents.admissibility import restriction_endpoint, scaling_factor
from services.exponents.pairs import ExponentPair, to_text
from services.poly.roots import real_roots
from utils.errors import OutOfRangeError


@dataclass(frozen=True)
class TorsionProfile:
    d: int
    K_min: int
    K_max: int

    def __post_init__(self):
        if not (0 <= self.K_min <= self.K_max):
            raise OutOfRangeError(
                f"torsion profile needs 0 <= K_min <= K_max, got {self.K_min}, {self.K_max}"
            )

    @property
    def N_min(self) -> Rational:
        return self.K_min + scaling_factor(self.d)

    @property
    def N_max(self) -> Rational:
        return self.K_max + scaling_factor(self.d)

    def to_dict(self):
        return {
            "d": self.d,
            "K_min": self.K_min,
            "K_max": self.K_max,
            "N_min": str(self.N_min),
            "N_max": str(self.N_max),
        }


def torsion_profile(gamma: PolyCurve) -> TorsionProfile:
    """K_min: largest multiplicity of a real zero of L (0 if none); K_max: deg L."""
    gamma.require_nondegenerate()
    torsion = gamma.torsion
    multiplicities = [m for _, m in real_roots(torsion)] if not torsion.is_constant() else []
    return TorsionProfile(gamma.d, max(multiplicities, default=0), torsion.degree)


def unweighted_range(profile: TorsionProfile, d: int, pair: ExponentPair) -> bool:
    """
    1 <= p < (d^2+d+2)/(d^2+d), and either p <= q with N_min q <= p' <= N_max q,
    or p > q with N_min q < p' < N_max q.
    """
    if d < 3:
        raise OutOfRangeError(f"the unweighted range is stated for d >= 3, got {d}", d=d)
    p, q, p_prime = pair.p, pair.q, pair.p_prime
    if not (1 <= p < restriction_endpoint(d)):
        return False
    if p <= q:
        return bool(profile.N_min * q <= p_prime <= profile.N_max * q)
    return bool(profile.N_min * q < p_prime < profile.N_max * q)


def weight_exponent(d: int, pair: ExponentPair) -> Rational:
    """-1/q + d(d+1)/(2p') for q <= 2p'/(d(d+1)); zero on the scaling line."""
    factor = scaling_factor(d)
    if pair.q > pair.p_prime / factor:
        raise OutOfRangeError(
            f"weight exponent needs q <= 2p'/(d(d+1)), got q={to_text(pair.q)}, p'={to_text(pair.p_prime)}",
            d=d,
        )
    return -1 / pair.q + factor / pair.p_prime


def level_sum_exponents(profile: TorsionProfile, d: int, pair: ExponentPair) -> Tuple[Optional[Rational], Optional[Rational]]:
    """
    (1/K_min)(1/q - N_min/p') and (1/K_max)(1/q - N_max/p'), None where K = 0.
    The dyadic level-set sums converge iff the first is positive and the second negative.
    """
    scaling_factor(d)
    lower = None if profile.K_min == 0 else (1 / pair.q - profile.N_min / pair.p_prime) / profile.K_min
    upper = None if profile.K_max == 0 else (1 / pair.q - profile.N_max / pair.p_prime) / profile.K_max
    return lower, upper
