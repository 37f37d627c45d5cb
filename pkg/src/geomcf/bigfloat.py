"""Arbitrary-precision floats that remember the precision they carry.

Thin wrapper over mpmath.  Every value is tagged with the working
precision (in bits) it was computed at; combining values of different
precisions raises instead of silently downgrading, which keeps the
two-precision validation logic in the expansion code honest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError


@dataclass(frozen=True)
class BigFloat:
    value: mpmath.mpf
    bits: int

    def __init__(self, value, bits: int):
        if bits < 4:
            raise DomainError(f"precision of {bits} bits is too small")
        with mpmath.workprec(bits):
            value = mpmath.mpf(value)
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "bits", bits)

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_int(cls, n: int, bits: int) -> "BigFloat":
        return cls(n, bits)

    @classmethod
    def from_fraction(cls, q, bits: int) -> "BigFloat":
        q = Fraction(q)
        with mpmath.workprec(bits):
            v = mpmath.mpf(q.numerator) / q.denominator
        return cls(v, bits)

    @classmethod
    def sqrt_int(cls, n: int, bits: int) -> "BigFloat":
        if n < 0:
            raise DomainError("square root of a negative integer")
        with mpmath.workprec(bits):
            v = mpmath.sqrt(n)
        return cls(v, bits)

    @classmethod
    def from_surd(cls, P: int, D: int, Q: int, bits: int) -> "BigFloat":
        with mpmath.workprec(bits):
            v = (P + mpmath.sqrt(D)) / Q
        return cls(v, bits)

    @classmethod
    def exp_recip(cls, x: int, bits: int) -> "BigFloat":
        """e**(1/x) for a positive integer x."""
        if x < 1:
            raise DomainError("exponent denominator must be a positive integer")
        with mpmath.workprec(bits):
            v = mpmath.exp(mpmath.mpf(1) / x)
        return cls(v, bits)

    @classmethod
    def pow2(cls, exponent: int, bits: int) -> "BigFloat":
        with mpmath.workprec(bits):
            v = mpmath.power(2, exponent)
        return cls(v, bits)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "BigFloat":
        if isinstance(other, BigFloat):
            if other.bits != self.bits:
                raise DomainError(
                    f"mixing precisions {self.bits} and {other.bits}"
                )
            return other
        if isinstance(other, int):
            return BigFloat(other, self.bits)
        if isinstance(other, Fraction):
            return BigFloat.from_fraction(other, self.bits)
        raise TypeError(f"cannot combine BigFloat with {other!r}")

    def _binary(self, other, op) -> "BigFloat":
        o = self._coerce(other)
        with mpmath.workprec(self.bits):
            v = op(self.value, o.value)
        return BigFloat(v, self.bits)

    def __add__(self, other) -> "BigFloat":
        return self._binary(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other) -> "BigFloat":
        return self._binary(other, lambda a, b: a - b)

    def __rsub__(self, other) -> "BigFloat":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BigFloat":
        return self._binary(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "BigFloat":
        return self._binary(other, lambda a, b: a / b)

    def __rtruediv__(self, other) -> "BigFloat":
        return self._coerce(other) / self

    def __neg__(self) -> "BigFloat":
        return BigFloat(-self.value, self.bits)

    def __abs__(self) -> "BigFloat":
        return BigFloat(abs(self.value), self.bits)

    # -- structure ----------------------------------------------------------

    def floor(self) -> int:
        # mpmath.floor rounds its result to the *global* context precision,
        # which silently corrupts integers above 2**53; go through the exact
        # dyadic representation instead.
        q = self.to_fraction()
        return int(q.numerator // q.denominator)

    def to_fraction(self) -> Fraction:
        sign, man, exp, _ = self.value._mpf_
        if man == 0:
            return Fraction(0)
        q = Fraction(int(man)) * Fraction(2) ** int(exp)
        return -q if sign else q

    def _cmp_value(self, other):
        if isinstance(other, BigFloat):
            if other.bits != self.bits:
                raise DomainError(
                    f"mixing precisions {self.bits} and {other.bits}"
                )
            return other.value
        if isinstance(other, (int, Fraction)):
            return self._coerce(other).value
        raise TypeError(f"cannot compare BigFloat with {other!r}")

    def __lt__(self, other) -> bool:
        return self.value < self._cmp_value(other)

    def __le__(self, other) -> bool:
        return self.value <= self._cmp_value(other)

    def __gt__(self, other) -> bool:
        return self.value > self._cmp_value(other)

    def __ge__(self, other) -> bool:
        return self.value >= self._cmp_value(other)

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        digits = max(1, int(self.bits * 0.30103))
        return mpmath.nstr(self.value, digits)

    def decimal_string(self, digits: int) -> str:
        with mpmath.workprec(self.bits):
            return mpmath.nstr(self.value, digits, strip_zeros=False)
