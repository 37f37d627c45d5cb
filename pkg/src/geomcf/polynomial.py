"""Dense univariate polynomials with integer coefficients.

Coefficients are stored constant term first with trailing zeros trimmed,
so every value has exactly one representation. The zero polynomial is the
empty tuple and reports degree -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        coeffs = list(coeffs)
        for c in coeffs:
            if not isinstance(c, int):
                raise DomainError(f"integer coefficients required, got {c!r}")
        object.__setattr__(self, "coeffs", _trim(coeffs))

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, n: int) -> "Polynomial":
        if n < 0:
            raise DomainError("monomial exponent must be nonnegative")
        return cls((0,) * n + (c,))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial explicitly -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, n: int) -> "Polynomial":
        """Multiply by x**n."""
        if n < 0:
            raise DomainError("negative shift")
        if self.is_zero():
            return self
        return Polynomial((0,) * n + self.coeffs)

    def __call__(self, point):
        """Evaluate by Horner's rule; works for any commutative ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def reversed_coefficients(self) -> "Polynomial":
        """Reverse the (trimmed) coefficient list.

        A zero constant term becomes a trailing zero and is trimmed away,
        so reversal is an involution exactly when the constant term is
        nonzero.
        """
        return Polynomial(tuple(reversed(self.coeffs)))

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "Polynomial":
        c = self.content()
        if c in (0, 1):
            return self
        return Polynomial(tuple(k // c for k in self.coeffs))

    def evaluate_fraction(self, point: Fraction) -> Fraction:
        return Fraction(self(point))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for n in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[n]
            if c == 0:
                continue
            if n == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = f"{mag}x" if n == 1 else f"{mag}x^{n}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial((value,))
    return NotImplemented


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Primitive gcd over the integers with positive leading coefficient."""
    if f.is_zero():
        return _positive(g)
    if g.is_zero():
        return _positive(f)
    cf, cg = f.content(), g.content()
    a, b = f.primitive(), g.primitive()
    while not b.is_zero():
        a, b = b, _pseudo_rem(a, b).primitive()
    return _positive(a * math.gcd(cf, cg))


def _positive(p: Polynomial) -> Polynomial:
    return -p if p.leading < 0 else p


def _pseudo_rem(a: Polynomial, b: Polynomial) -> Polynomial:
    """Remainder of lc(b)^k * a divided by b, staying over the integers."""
    if b.is_zero():
        raise DomainError("pseudo-remainder by zero polynomial")
    r = a
    lead = b.leading
    while not r.is_zero() and r.degree >= b.degree:
        shift = r.degree - b.degree
        r = r * lead - b * Polynomial.monomial(r.leading, shift)
    return r


X = Polynomial.x()
