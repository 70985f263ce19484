"""
Drury's induction map on extension exponents and the interpolation vertex check.

@Time ： 2026-10-18
"""
from typing import List, Tuple

from sympy import Rational

from services.exponents.admissibility import drury_fixed_point
from services.exponents.pairs import as_exponent, to_text
from utils.errors import OutOfRangeError
from utils.logger import Logger

logger = Logger(__name__)


def _step(d: int, p0):
    # d/p = 2/(d+2) + (d-2)/((d+2) p0)
    reciprocal = Rational(2, d + 2) + Rational(d - 2, d + 2) / p0
    return d / reciprocal


def _check_start(d: int, p0):
    if int(d) < 2:
        raise OutOfRangeError(f"dimension must be at least 2, got {d}", d=d)
    if not (1 <= p0 <= drury_fixed_point(d)):
        raise OutOfRangeError(
            f"p0 must lie in [1, {drury_fixed_point(d)}], got {p0}", p0=to_text(p0), d=d
        )


def drury_step(d: int, p0) -> Rational:
    """
    Supremal p reachable from a valid p0 in one induction step; the fixed point
    (d^2+d+2)/2 maps to itself.
    """
    p0 = as_exponent(p0)
    _check_start(d, p0)
    return _step(d, p0)


def drury_iterate(d: int, p_start, iterations: int) -> List[Rational]:
    """The iterates p_1, ..., p_iterations (p_start excluded)."""
    current = as_exponent(p_start)
    _check_start(d, current)
    sequence = []
    for _ in range(int(iterations)):
        current = _step(d, current)
        sequence.append(current)
    logger.debug(f"Service: Drury iteration d={d} reached {float(current) if sequence else current}")
    return sequence


def interp_region_check(d: int, p0) -> Tuple[Tuple[Rational, Rational], bool]:
    """
    Vertex (1/a, 1/b) = (d/(d+2), 2/(d+2) + (d-2)/((d+2) p0)) and whether
    ((d+2)(d-1)/2)/a + 1/b - d(d-1)/2 < d/p0.
    """
    p0 = as_exponent(p0)
    _check_start(d, p0)
    a_inverse = Rational(d, d + 2)
    b_inverse = Rational(2, d + 2) + Rational(d - 2, d + 2) / p0
    lhs = Rational((d + 2) * (d - 1), 2) * a_inverse + b_inverse - Rational(d * (d - 1), 2)
    return (a_inverse, b_inverse), bool(lhs < d / p0)
