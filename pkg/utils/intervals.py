"""
Helpers around `portion` intervals: float bounds with +-inf, lengths, JSON form.

@Time ： 2026-10-18
"""
import math

import portion as P


def _to_bound(value):
    if value == math.inf or value == P.inf:
        return P.inf
    if value == -math.inf or value == -P.inf:
        return -P.inf
    return float(value)


def to_float(bound):
    if bound == P.inf:
        return math.inf
    if bound == -P.inf:
        return -math.inf
    return float(bound)


def make_interval(lower, upper, left_closed=True, right_closed=True):
    """
    Build an atomic interval from float bounds; infinite ends are always open.
    """
    left = P.CLOSED if left_closed else P.OPEN
    right = P.CLOSED if right_closed else P.OPEN
    return P.Interval.from_atomic(left, _to_bound(lower), _to_bound(upper), right)


def real_line():
    return P.open(-P.inf, P.inf)


def atoms(interval):
    return [atom for atom in interval if not atom.empty]


def bounds(interval):
    """(lower, upper) of the enclosure as floats."""
    if interval.empty:
        raise ValueError("empty interval has no bounds")
    return to_float(interval.lower), to_float(interval.upper)


def length(interval):
    return sum(to_float(atom.upper) - to_float(atom.lower) for atom in atoms(interval))


def is_bounded(interval):
    if interval.empty:
        return True
    lower, upper = bounds(interval)
    return math.isfinite(lower) and math.isfinite(upper)


def midpoint(interval):
    lower, upper = bounds(interval)
    if math.isfinite(lower) and math.isfinite(upper):
        return 0.5 * (lower + upper)
    if math.isfinite(lower):
        return lower + 1.0
    if math.isfinite(upper):
        return upper - 1.0
    return 0.0


def interior_contains(interval, point):
    for atom in atoms(interval):
        if to_float(atom.lower) < point < to_float(atom.upper):
            return True
    return False


def to_json(interval):
    """[lo, hi] with "-inf"/"inf" for unbounded ends; closedness in a separate flag pair."""
    def token(value):
        if value == math.inf:
            return "inf"
        if value == -math.inf:
            return "-inf"
        return value

    lower, upper = bounds(interval)
    return [token(lower), token(upper)]


def closedness(interval):
    return [interval.left == P.CLOSED, interval.right == P.CLOSED]
