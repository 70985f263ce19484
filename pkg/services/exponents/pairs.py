"""
Exact exponents: sympy rationals with oo, Hoelder conjugates and (p, q) pairs.

@Time ： 2026-10-18
"""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy import Rational, oo

from utils.errors import OutOfRangeError, UsageError

INFINITY_TOKENS = {"inf", "infinity", "oo", "∞"}


def as_exponent(value) -> sympy.Expr:
    """
    Exact rational (or oo) from int, Fraction, sympy number, decimal text or "a/b" text.
    Floats go through their shortest repr so 0.1 means 1/10.
    """
    if isinstance(value, sympy.Basic) and value == oo:
        return oo
    if isinstance(value, str):
        text = value.strip().lower()
        if text in INFINITY_TOKENS:
            return oo
        try:
            return Rational(text)
        except (TypeError, ValueError, sympy.SympifyError) as e:
            raise UsageError(f"not a rational exponent: {value!r}") from e
    if isinstance(value, Fraction):
        return Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        if value == float("inf"):
            return oo
        if value != value or value == float("-inf"):
            raise UsageError(f"not a rational exponent: {value!r}")
        return Rational(repr(value))
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, numbers.Integral):
        return Rational(int(value))
    raise UsageError(f"not a rational exponent: {value!r}")


def conjugate(p) -> sympy.Expr:
    """p' with 1/p + 1/p' = 1; 1 <-> oo."""
    p = as_exponent(p)
    if p == oo:
        return Rational(1)
    if p < 1:
        raise OutOfRangeError(f"Hoelder conjugate needs p >= 1, got {p}", p=str(p))
    if p == 1:
        return oo
    return p / (p - 1)


def to_text(value) -> str:
    return "inf" if value == oo else str(value)


@dataclass(frozen=True)
class ExponentPair:
    """(p, q) with 1 <= p <= oo and 0 < q <= oo."""

    p: sympy.Expr
    q: sympy.Expr

    def __post_init__(self):
        p, q = as_exponent(self.p), as_exponent(self.q)
        if not (p >= 1):
            raise OutOfRangeError(f"p must satisfy 1 <= p <= oo, got {p}", p=str(p))
        if not (q > 0):
            raise OutOfRangeError(f"q must satisfy 0 < q <= oo, got {q}", q=str(q))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_p_prime(cls, p_prime, q) -> "ExponentPair":
        return cls(conjugate(p_prime), q)

    @property
    def p_prime(self) -> sympy.Expr:
        return conjugate(self.p)

    @property
    def q_prime(self) -> sympy.Expr:
        return conjugate(self.q)

    def to_dict(self):
        return {"p": to_text(self.p), "q": to_text(self.q), "p_prime": to_text(self.p_prime)}

    def __str__(self):
        return f"(p={to_text(self.p)}, q={to_text(self.q)})"


def duality_map(pair: ExponentPair) -> ExponentPair:
    """(p, q) -> (q', p'); an involution on pairs with q >= 1."""
    if pair.q < 1:
        raise OutOfRangeError(f"duality needs q >= 1, got {pair.q}", q=str(pair.q))
    return ExponentPair(pair.q_prime, pair.p_prime)
