"""
Real univariate polynomials with ascending coefficients.

@Time ： 2026-10-18
"""
from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly


class Polynomial:
    """
    Immutable polynomial; coeffs[k] multiplies t^k.
    The zero polynomial is stored as the empty tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[float] = ()):
        values = [float(c) for c in coeffs]
        for value in values:
            if not math.isfinite(value):
                raise ValueError(f"Polynomial coefficients must be finite, got {value}")
        while values and values[-1] == 0.0:
            values.pop()
        object.__setattr__(self, "_coeffs", tuple(values))

    def __setattr__(self, key, value):
        raise AttributeError("Polynomial is immutable")

    def __reduce__(self):
        return Polynomial, (self._coeffs,)

    @classmethod
    def constant(cls, value: float) -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, power: int, coefficient: float = 1.0) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls([0.0] * power + [coefficient])

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def from_roots(cls, roots: Sequence[complex], leading: float = 1.0) -> "Polynomial":
        coeffs = np.array([1.0 + 0j])
        for root in roots:
            coeffs = npoly.polymul(coeffs, [-complex(root), 1.0])
        return cls(np.real(coeffs) * leading)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> float:
        return self._coeffs[-1] if self._coeffs else 0.0

    @property
    def scale(self) -> float:
        """Coefficient magnitude scale used by residual tolerances."""
        return max((abs(c) for c in self._coeffs), default=0.0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def as_array(self) -> np.ndarray:
        return np.array(self._coeffs if self._coeffs else (0.0,), dtype=float)

    def evaluate(self, t):
        """Horner evaluation; accepts scalars, arrays and complex points."""
        if not self._coeffs:
            return np.zeros_like(np.asarray(t, dtype=float)) if np.ndim(t) else 0.0
        value = npoly.polyval(t, self._coeffs)
        if np.ndim(value) == 0:
            return complex(value) if np.iscomplexobj(value) else float(value)
        return value

    __call__ = evaluate

    def derivative(self, order: int = 1) -> "Polynomial":
        if order < 0:
            raise ValueError("derivative order must be nonnegative")
        if order == 0:
            return self
        if order > self.degree:
            return Polynomial.zero()
        return Polynomial(npoly.polyder(self._coeffs, order))

    def add(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(npoly.polyadd(self.as_array(), other.as_array()))

    def sub(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(npoly.polysub(self.as_array(), other.as_array()))

    def mul(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero()
        return Polynomial(npoly.polymul(self._coeffs, other._coeffs))

    def scaled(self, factor: float) -> "Polynomial":
        return Polynomial(c * factor for c in self._coeffs)

    def magnitude(self) -> "Polynomial":
        """Coefficient-wise absolute value."""
        return Polynomial(abs(c) for c in self._coeffs)

    def chopped(self, noise: Sequence[float]) -> "Polynomial":
        """Zero every coefficient with |a_k| <= noise[k]; the degree drops with the leading ones."""
        return Polynomial(
            0.0 if k < len(noise) and abs(c) <= noise[k] else c for k, c in enumerate(self._coeffs)
        )

    def trimmed(self, rel_tol: float) -> "Polynomial":
        """Drop leading coefficients with |a_k| <= rel_tol * scale."""
        values = list(self._coeffs)
        floor = rel_tol * self.scale
        while values and abs(values[-1]) <= floor:
            values.pop()
        return Polynomial(values)

    def power(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = Polynomial.constant(1.0)
        for _ in range(exponent):
            result = result.mul(self)
        return result

    def compose_affine(self, a: float, b: float) -> "Polynomial":
        """q(a t + b) by Horner's scheme on coefficient arrays."""
        result = np.zeros(1)
        inner = np.array([float(b), float(a)])
        for coefficient in reversed(self._coeffs):
            result = npoly.polyadd(npoly.polymul(result, inner), [coefficient])
        return Polynomial(result)

    def divmod_linear(self, root: complex):
        """Synthetic division by (t - root): returns (quotient coeffs, remainder)."""
        if not self._coeffs:
            return [], 0.0
        quotient = []
        carry = 0.0
        for coefficient in reversed(self._coeffs):
            carry = carry * root + coefficient
            quotient.append(carry)
        remainder = quotient.pop()
        return list(reversed(quotient)), remainder

    def __add__(self, other):
        if isinstance(other, (int, float)):
            other = Polynomial.constant(other)
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, float)):
            other = Polynomial.constant(other)
        return self.sub(other)

    def __rsub__(self, other):
        return Polynomial.constant(other).sub(self)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return self.scaled(other)
        return self.mul(other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scaled(-1.0)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def allclose(self, other: "Polynomial", rtol: float = 1e-10, atol: float = 0.0) -> bool:
        """Coefficient-wise comparison relative to the larger coefficient scale."""
        size = max(len(self._coeffs), len(other._coeffs))
        left = np.zeros(size)
        right = np.zeros(size)
        left[: len(self._coeffs)] = self._coeffs
        right[: len(other._coeffs)] = other._coeffs
        scale = max(self.scale, other.scale)
        return bool(np.all(np.abs(left - right) <= atol + rtol * scale))

    def __repr__(self):
        return f"Polynomial({list(self._coeffs)})"

    def __str__(self):
        from services.poly.parser import format_poly

        return format_poly(self)


T = Polynomial.monomial(1)
