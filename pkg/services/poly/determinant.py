"""
Determinants of square matrices with polynomial entries.

@Time ： 2026-10-18
"""
from typing import Dict, Sequence

import numpy as np

from services.poly.polynomial import Polynomial

MAX_DIMENSION = 8
# rounding slack per accumulated operation when chopping cancellation noise
NOISE_FACTOR = 8.0


def _expand(m: Sequence[Sequence[Polynomial]], signed: bool) -> Polynomial:
    size = len(m)
    full_mask = (1 << size) - 1
    memo: Dict[int, Polynomial] = {full_mask: Polynomial.constant(1.0)}

    def minor(used: int) -> Polynomial:
        # rows 0..popcount(used)-1 have been expanded; expand the next one
        if used in memo:
            return memo[used]
        row = bin(used).count("1")
        total = Polynomial.zero()
        sign = 1.0
        for column in range(size):
            if used & (1 << column):
                continue
            entry = m[row][column]
            if not entry.is_zero():
                rest = minor(used | (1 << column))
                if not rest.is_zero():
                    total = total.add(entry.mul(rest).scaled(sign if signed else 1.0))
            sign = -sign
        memo[used] = total
        return total

    return minor(0)


def poly_det(m: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """
    Cofactor expansion along rows with memoization on the set of used columns,
    so each minor is computed once (at most d * 2^d products).

    The same expansion over |entries| bounds the sum of |terms| behind every
    coefficient; coefficients under the rounding error of that sum are zeroed, so
    leading terms that cancel exactly do not survive as noise.
    :param m: d x d matrix of Polynomial, d <= 8
    """
    size = len(m)
    if size == 0:
        return Polynomial.constant(1.0)
    if size > MAX_DIMENSION:
        raise ValueError(f"poly_det supports d <= {MAX_DIMENSION}, got {size}")
    for row in m:
        if len(row) != size:
            raise ValueError("poly_det requires a square matrix")

    determinant = _expand(m, signed=True)
    if determinant.is_zero():
        return determinant
    bound = _expand([[entry.magnitude() for entry in row] for row in m], signed=False)
    operations = size + len(bound.coeffs)
    noise = [NOISE_FACTOR * operations * np.finfo(float).eps * b for b in bound.coeffs]
    return determinant.chopped(noise)
