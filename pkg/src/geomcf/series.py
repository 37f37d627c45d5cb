"""Truncated power series with an explicit order.

A series of order n carries exactly the coefficients of t^0 .. t^(n-1).
Mixed-order arithmetic truncates to the smaller order instead of guessing.
Coefficients are rationals by default, but any commutative ring element
with +, -, * works (polynomials are used for residual checks).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple
    order: int

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs)
        if order < 1:
            raise DomainError("series order must be at least 1")
        if len(coeffs) > order:
            coeffs = coeffs[:order]
        elif len(coeffs) < order:
            coeffs = coeffs + (0,) * (order - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls((Fraction(1),), order)

    def __getitem__(self, i: int):
        if not 0 <= i < self.order:
            raise IndexError(f"coefficient {i} outside truncation order {self.order}")
        return self.coeffs[i]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise DomainError("cannot extend a truncated series")
        return PowerSeries(self.coeffs[:order], order)

    def is_zero(self) -> bool:
        """True when every retained coefficient is zero (works for any ring)."""
        return all(not c for c in self.coeffs)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])), n)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return PowerSeries(tuple(c * other for c in self.coeffs), self.order)
        n = min(self.order, other.order)
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return PowerSeries(out, n)

    def __rmul__(self, other) -> "PowerSeries":
        return self * other

    def shift(self, n: int) -> "PowerSeries":
        """Multiply by t**n, keeping the order (top coefficients fall off)."""
        if n < 0:
            raise DomainError("negative shift")
        return PowerSeries((0,) * n + self.coeffs, self.order)

    def reciprocal(self) -> "PowerSeries":
        c0 = self.coeffs[0]
        if c0 == 0:
            raise DomainError("series reciprocal requires a nonzero constant term")
        inv0 = Fraction(1, c0) if isinstance(c0, int) else 1 / c0
        out = [inv0]
        for n in range(1, self.order):
            acc = 0
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a != 0:
                    acc += a * out[n - k]
            out.append(-inv0 * acc)
        return PowerSeries(out, self.order)

    def __truediv__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            raise DomainError("series division needs a series divisor")
        return self * other.reciprocal()

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return PowerSeries((other,), self.order)
        raise DomainError(f"cannot combine series with {other!r}")

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{i}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.order})"


def geometric_inverse(coeffs: Sequence, order: int) -> PowerSeries:
    """Reciprocal of the polynomial with the given coefficients, as a series."""
    return PowerSeries(tuple(coeffs), order).reciprocal()
