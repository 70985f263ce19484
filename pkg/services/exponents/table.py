"""
@Time ： 2026-10-18
"""
from typing import Iterable, List

from services.exponents.admissibility import restriction_admissible, restriction_endpoint, scaling_factor
from services.exponents.pairs import ExponentPair, as_exponent, conjugate, to_text
from services.exponents.profile import weight_exponent

TABLE_HEADER = ["q", "p", "p_prime", "admissible", "weight_exponent"]


def exponent_table(d: int, qs: Iterable) -> List[dict]:
    """
    One row per q on the scaling line p' = d(d+1) q / 2; weight_exponent is None
    outside 1 < p < (d^2+d+2)/(d^2+d).
    """
    rows = []
    for value in qs:
        q = as_exponent(value)
        p_prime = scaling_factor(d) * q
        if p_prime < 1:
            rows.append({"q": to_text(q), "p": None, "p_prime": to_text(p_prime), "admissible": False, "weight_exponent": None})
            continue
        p = conjugate(p_prime)
        pair = ExponentPair(p, q)
        in_range = 1 < p < restriction_endpoint(d)
        rows.append(
            {
                "q": to_text(q),
                "p": to_text(p),
                "p_prime": to_text(p_prime),
                "admissible": restriction_admissible(d, pair),
                "weight_exponent": to_text(weight_exponent(d, pair)) if in_range else None,
            }
        )
    return rows
