"""Exact arithmetic for real quadratic irrationals.

Two representations are provided:

* ``QuadraticSurd`` — numbers of the form (P + sqrt(D))/Q with integer
  P, Q, D, constrained so that Q divides D - P^2.  This shape is closed
  under the operations a simple-continued-fraction expansion needs
  (integer shift, reciprocal, floor), so expansions stay exact and
  periodicity shows up as a repeated (P, Q) state.
* ``QuadFieldElement`` — a + b*sqrt(D) with rational a, b, closed under
  full field arithmetic.  Used for closed-form growth-rate checks.

Square roots are always the positive branch; D must be a positive
non-square so every value here is irrational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError


def _require_nonsquare(D: int) -> int:
    if D <= 0:
        raise DomainError(f"discriminant must be positive, got {D}")
    if isqrt(D) ** 2 == D:
        raise DomainError(f"discriminant {D} is a perfect square; value is rational")
    return D


def _sign_a_plus_b_sqrtD(a, b, D: int) -> int:
    """Exact sign of a + b*sqrt(D) for rational a, b and non-square D > 0."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return (b > 0) - (b < 0)
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    # Opposite signs: compare a^2 against b^2 * D; equality cannot occur
    # because sqrt(D) is irrational.
    lhs = a * a
    rhs = b * b * D
    if a > 0:  # b < 0: positive iff a^2 > b^2 D
        return 1 if lhs > rhs else -1
    return 1 if rhs > lhs else -1  # a < 0, b > 0


def _sign_two_radicals(a, b, D1: int, c, D2: int) -> int:
    """Exact sign of a + b*sqrt(D1) + c*sqrt(D2) for rational a, b, c.

    Splits into L = a + b*sqrt(D1) against R = -c*sqrt(D2); when both sides
    share a sign, one squaring reduces the question to a single radical.
    Zero is possible (e.g. sqrt(8) - 2*sqrt(2)) and is reported exactly.
    """
    if c == 0:
        return _sign_a_plus_b_sqrtD(a, b, D1)
    if b == 0:
        return _sign_a_plus_b_sqrtD(a, c, D2)
    left = _sign_a_plus_b_sqrtD(a, b, D1)  # irrational, never 0
    right = 1 if c < 0 else -1
    if left != right:
        return 1 if left > right else -1
    t = _sign_a_plus_b_sqrtD(a * a + b * b * D1 - c * c * D2, 2 * a * b, D1)
    return t if left > 0 else -t


@dataclass(frozen=True)
class QuadraticSurd:
    """(P + sqrt(D)) / Q with Q | D - P^2, stored in lowest terms."""

    P: int
    D: int
    Q: int

    def __init__(self, P: int, D: int, Q: int):
        if Q == 0:
            raise DomainError("surd denominator must be nonzero")
        _require_nonsquare(D)
        if (D - P * P) % Q != 0:
            # Rescale so the divisibility invariant holds; the value is
            # unchanged: (P|Q| + sqrt(D Q^2)) / (Q|Q|).
            P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
        # Reduce: any g dividing P, Q and (D - P^2)/Q has g^2 | D.
        g = gcd(gcd(P, Q), (D - P * P) // Q)
        if g > 1:
            P, D, Q = P // g, D // (g * g), Q // g
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "Q", Q)

    # -- arithmetic used by continued-fraction expansion ---------------

    def add_int(self, n: int) -> "QuadraticSurd":
        return QuadraticSurd(self.P + n * self.Q, self.D, self.Q)

    def __neg__(self) -> "QuadraticSurd":
        """-(P + sqrt(D))/Q = (P + sqrt(D))/(-Q)."""
        return QuadraticSurd(self.P, self.D, -self.Q)

    def conjugate(self) -> "QuadraticSurd":
        """(P - sqrt(D))/Q, re-expressed with a positive root."""
        return QuadraticSurd(-self.P, self.D, -self.Q)

    def invert(self) -> "QuadraticSurd":
        """Exact reciprocal: Q / (P + sqrt(D)) = (-P + sqrt(D)) / ((D - P^2)/Q)."""
        return QuadraticSurd(-self.P, self.D, (self.D - self.P * self.P) // self.Q)

    def floor(self) -> int:
        root = isqrt(self.D)  # floor of sqrt(D)
        if self.Q > 0:
            return (self.P + root) // self.Q
        # value = -(P + sqrt(D))/|Q|; for irrational x, floor(-x) = -floor(x) - 1
        return -((self.P + root) // (-self.Q)) - 1

    def fractional_part(self) -> "QuadraticSurd":
        return self.add_int(-self.floor())

    # -- exact comparisons ---------------------------------------------

    def sign(self) -> int:
        s = _sign_a_plus_b_sqrtD(self.P, 1, self.D)
        return s if self.Q > 0 else -s

    def compare_rational(self, r) -> int:
        """Sign of self - r for a Fraction or int r."""
        r = Fraction(r)
        # self - r = (P - r*Q + sqrt(D)) / Q
        a = Fraction(self.P) - r * self.Q
        s = _sign_a_plus_b_sqrtD(a, 1, self.D)
        return s if self.Q > 0 else -s

    def _compare(self, other) -> int:
        if isinstance(other, QuadraticSurd):
            if other.D == self.D:
                return self.to_field().compare(other.to_field())
            # self - other = A + B*sqrt(D) + C*sqrt(other.D) with rational
            # coefficients; the sign is decidable exactly.
            a = Fraction(self.P, self.Q) - Fraction(other.P, other.Q)
            return _sign_two_radicals(
                a, Fraction(1, self.Q), self.D, Fraction(-1, other.Q), other.D
            )
        if isinstance(other, (int, Fraction)):
            return self.compare_rational(other)
        raise TypeError(f"cannot compare surd with {other!r}")

    def __lt__(self, other) -> bool:
        return self._compare(other) < 0

    def __le__(self, other) -> bool:
        return self._compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self._compare(other) > 0

    def __ge__(self, other) -> bool:
        return self._compare(other) >= 0

    # -- conversions ----------------------------------------------------

    def to_field(self) -> "QuadFieldElement":
        return QuadFieldElement(self.D, Fraction(self.P, self.Q), Fraction(1, self.Q))

    def to_float(self, bits: int = 64):
        from .bigfloat import BigFloat

        return BigFloat.from_surd(self.P, self.D, self.Q, bits)

    def __str__(self) -> str:
        num = f"({self.P} + √{self.D})" if self.P else f"√{self.D}"
        if self.Q == 1:
            return num
        return f"{num}/{self.Q}"


@dataclass(frozen=True)
class QuadFieldElement:
    """a + b*sqrt(D) with rational a, b; D a fixed positive non-square."""

    D: int
    a: Fraction
    b: Fraction

    def __init__(self, D: int, a, b):
        _require_nonsquare(D)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    @classmethod
    def rational(cls, D: int, a) -> "QuadFieldElement":
        return cls(D, a, 0)

    @classmethod
    def sqrt_part(cls, D: int) -> "QuadFieldElement":
        return cls(D, 0, 1)

    def _coerce(self, other) -> "QuadFieldElement":
        if isinstance(other, QuadFieldElement):
            if other.D != self.D:
                raise DomainError(
                    f"mixed discriminants {self.D} and {other.D}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return QuadFieldElement(self.D, other, 0)
        raise TypeError(f"cannot combine field element with {other!r}")

    def __add__(self, other) -> "QuadFieldElement":
        o = self._coerce(other)
        return QuadFieldElement(self.D, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadFieldElement":
        return QuadFieldElement(self.D, -self.a, -self.b)

    def __sub__(self, other) -> "QuadFieldElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadFieldElement":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "QuadFieldElement":
        o = self._coerce(other)
        return QuadFieldElement(
            self.D,
            self.a * o.a + self.b * o.b * self.D,
            self.a * o.b + self.b * o.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadFieldElement":
        return QuadFieldElement(self.D, self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.D * self.b * self.b

    def inverse(self) -> "QuadFieldElement":
        n = self.norm()
        if n == 0:
            raise DomainError("zero has no inverse")
        return QuadFieldElement(self.D, self.a / n, -self.b / n)

    def __truediv__(self, other) -> "QuadFieldElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "QuadFieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "QuadFieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadFieldElement(self.D, 1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def compare(self, other) -> int:
        o = self._coerce(other)
        return _sign_a_plus_b_sqrtD(self.a - o.a, self.b - o.b, self.D)

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def to_float(self, bits: int = 64):
        from .bigfloat import BigFloat

        root = BigFloat.sqrt_int(self.D, bits)
        return (
            BigFloat.from_fraction(self.a, bits)
            + BigFloat.from_fraction(self.b, bits) * root
        )

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*√{self.D}"
