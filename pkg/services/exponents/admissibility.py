"""
Admissible lines, endpoints and the named q-ranges used to classify experiments.
All comparisons are exact.

@Time ： 2026-10-18
"""
from sympy import Rational, oo

from services.exponents.pairs import ExponentPair, as_exponent, duality_map
from utils.errors import OutOfRangeError


def _check_dimension(d: int):
    if int(d) < 2:
        raise OutOfRangeError(f"dimension must be at least 2, got {d}", d=d)


def scaling_factor(d: int):
    """d(d+1)/2"""
    _check_dimension(d)
    return Rational(d * (d + 1), 2)


def restriction_endpoint(d: int):
    """q_d = (d^2+d+2)/(d^2+d), excluded from the restriction range."""
    _check_dimension(d)
    return Rational(d * d + d + 2, d * d + d)


def extension_endpoint(d: int):
    """(d^2+d+2)/2, excluded from the extension range."""
    _check_dimension(d)
    return Rational(d * d + d + 2, 2)


def drury_fixed_point(d: int):
    return extension_endpoint(d)


def restriction_admissible(d: int, pair: ExponentPair) -> bool:
    """p' = d(d+1) q / 2 and q > (d^2+d+2)/(d^2+d)."""
    on_line = pair.p_prime == scaling_factor(d) * pair.q
    return bool(on_line and pair.q > restriction_endpoint(d))


def extension_admissible(d: int, pair: ExponentPair) -> bool:
    """q = d(d+1) p' / 2 and q > (d^2+d+2)/2."""
    on_line = pair.q == scaling_factor(d) * pair.p_prime
    return bool(on_line and pair.q > extension_endpoint(d))


def dual_consistent(d: int, pair: ExponentPair) -> bool:
    """extension_admissible(pair) agrees with restriction_admissible(duality_map(pair))."""
    return extension_admissible(d, pair) == restriction_admissible(d, duality_map(pair))


def christ_range(d: int, q) -> bool:
    """Extension-side q >= (d^2+2d)/2."""
    _check_dimension(d)
    return bool(as_exponent(q) >= Rational(d * d + 2 * d, 2))


def christ_range_complement(d: int, q) -> bool:
    """(d^2+d+2)/2 < q < (d^2+2d)/2: admissible but below the Christ range."""
    q = as_exponent(q)
    return bool(extension_endpoint(d) < q < Rational(d * d + 2 * d, 2))


def reduced_range(d: int, q) -> bool:
    """q <= d^2 + d, the case the multilinear argument works in."""
    _check_dimension(d)
    q = as_exponent(q)
    return bool(q != oo and q <= d * d + d)
