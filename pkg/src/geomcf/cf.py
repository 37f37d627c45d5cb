"""Generalized continued fraction engine.

A generalized continued fraction is described by a leading term b0 and two
term rules a(j), b(j) for j >= 1:

    b0 + a1/(b1 + a2/(b2 + a3/(b3 + ...)))

Convergents A_j/B_j follow the forward recurrence

    A_j = b_j*A_{j-1} + a_j*A_{j-2},   A_{-1} = 1, A_0 = b0
    B_j = b_j*B_{j-1} + a_j*B_{j-2},   B_{-1} = 0, B_0 = 1

and satisfy the determinant identity

    A_j*B_{j-1} - A_{j-1}*B_j = (-1)^(j-1) * a_1*a_2*...*a_j.

Terms may live in any commutative ring (integers, rationals, polynomials);
numeric evaluation and digit extraction additionally need ordered values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Optional, Sequence

import mpmath

from .bigfloat import BigFloat
from .errors import (
    DomainError,
    PrecisionInsufficient,
    SingularEvaluation,
)
from .surd import QuadraticSurd


@dataclass(frozen=True)
class GCFSpec:
    """A generalized continued fraction given by term rules.

    `partial_num(j)` and `partial_den(j)` return a_j and b_j for j >= 1;
    `b0` is the leading term. Term rules must be pure functions of j.
    """

    b0: object
    partial_num: Callable[[int], object]
    partial_den: Callable[[int], object]
    description: str = ""

    @classmethod
    def from_sequences(cls, b0, nums: Sequence, dens: Sequence, description: str = "") -> "GCFSpec":
        """Build a spec from finite sequences; nums[0] is a_1, dens[0] is b_1."""
        nums = tuple(nums)
        dens = tuple(dens)

        def a(j: int):
            if not 1 <= j <= len(nums):
                raise DomainError(f"partial numerator index {j} outside 1..{len(nums)}")
            return nums[j - 1]

        def b(j: int):
            if not 1 <= j <= len(dens):
                raise DomainError(f"partial denominator index {j} outside 1..{len(dens)}")
            return dens[j - 1]

        return cls(b0, a, b, description)

    def term(self, j: int) -> tuple:
        """(a_j, b_j) for j >= 1."""
        if j < 1:
            raise DomainError("terms are indexed from 1")
        return self.partial_num(j), self.partial_den(j)


@dataclass(frozen=True)
class Convergent:
    """One convergent A_j/B_j of a generalized continued fraction."""

    index: int
    A: object
    B: object

    def value(self) -> Fraction:
        """The convergent as an exact rational (numeric domains only)."""
        return Fraction(self.A) / Fraction(self.B)


def convergent_iter(cf: GCFSpec) -> Iterator[Convergent]:
    """Yield convergents with indices 0, 1, 2, ... via the forward recurrence."""
    a_prev, b_prev = 1, 0  # A_{-1}, B_{-1}
    a_cur, b_cur = cf.b0, 1  # A_0, B_0
    yield Convergent(0, a_cur, b_cur)
    j = 1
    while True:
        a_j, b_j = cf.term(j)
        a_next = b_j * a_cur + a_j * a_prev
        b_next = b_j * b_cur + a_j * b_prev
        a_prev, b_prev = a_cur, b_cur
        a_cur, b_cur = a_next, b_next
        yield Convergent(j, a_cur, b_cur)
        j += 1


def convergents(cf: GCFSpec, count: int) -> list[Convergent]:
    """The first `count` convergents (indices 0 .. count-1)."""
    if count < 1:
        raise DomainError("need at least one convergent")
    out = []
    for conv in convergent_iter(cf):
        out.append(conv)
        if len(out) == count:
            return out
    raise AssertionError("unreachable")


def determinant(prev: Convergent, cur: Convergent):
    """A_j*B_{j-1} - A_{j-1}*B_j for consecutive convergents."""
    if cur.index != prev.index + 1:
        raise DomainError("determinant needs consecutive convergents")
    return cur.A * prev.B - prev.A * cur.B


def equivalence_transform(cf: GCFSpec, scale: Callable[[int], object]) -> GCFSpec:
    """Rescale a continued fraction without changing its convergent values.

    With r_j = scale(j), r_0 = 1 and r_j != 0, the transformed fraction has

        a'_j = r_{j-1} * r_j * a_j,    b'_j = r_j * b_j,    b'_0 = b0.

    Each convergent A'_j/B'_j equals A_j/B_j as a value.
    """
    r0 = scale(0)
    if r0 != 1:
        raise DomainError("equivalence scale must satisfy scale(0) == 1")

    def checked(j: int):
        r = scale(j)
        if not r:
            raise DomainError(f"equivalence scale vanishes at index {j}")
        return r

    def a(j: int):
        return checked(j - 1) * checked(j) * cf.partial_num(j) if j > 1 else checked(1) * cf.partial_num(1)

    def b(j: int):
        return checked(j) * cf.partial_den(j)

    return GCFSpec(cf.b0, a, b, description=f"equivalence-transformed {cf.description}".strip())


@dataclass(frozen=True)
class EvaluatedValue:
    """A numeric evaluation together with its reported error bound."""

    value: BigFloat
    bound: BigFloat
    depth: int


def _terms_as_mpf(cf: GCFSpec, depth: int):
    """b_0..b_depth and a_1..a_depth as mpf under the caller's precision."""

    def num(v):
        if isinstance(v, Fraction):
            return mpmath.mpf(v.numerator) / mpmath.mpf(v.denominator)
        if isinstance(v, int):
            return mpmath.mpf(v)
        raise DomainError(f"numeric evaluation needs int or Fraction terms, got {type(v).__name__}")

    bs = [num(cf.b0)]
    nums = [None]
    for j in range(1, depth + 1):
        a_j, b_j = cf.term(j)
        nums.append(num(a_j))
        bs.append(num(b_j))
    return bs, nums


def _backward(bs, nums, depth: int):
    """Tail-first evaluation of b_0 + a_1/(b_1 + ... + a_depth/b_depth)."""
    tail = bs[depth]
    for j in range(depth - 1, -1, -1):
        if tail == 0:
            raise SingularEvaluation(j + 1)
        tail = bs[j] + nums[j + 1] / tail
    return tail


def backward_value(cf: GCFSpec, depth: int, bits: int) -> BigFloat:
    """Evaluate the fraction truncated after term b_depth, tail first."""
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    with mpmath.workprec(bits):
        bs, nums = _terms_as_mpf(cf, depth)
        return BigFloat(_backward(bs, nums, depth), bits)


def eval_gcf_numeric(cf: GCFSpec, depth: int, bits: int) -> EvaluatedValue:
    """Numeric value at `depth` with bound |value(depth) - value(depth+2)|.

    The reported bound is the observed depth-to-depth movement, an honest
    proxy for the truncation error of families whose convergents alternate
    around the limit.
    """
    if depth < 0:
        raise DomainError("depth must be nonnegative")
    with mpmath.workprec(bits):
        bs, nums = _terms_as_mpf(cf, depth + 2)
        here = _backward(bs, nums, depth)
        deeper = _backward(bs, nums, depth + 2)
        return EvaluatedValue(BigFloat(here, bits), BigFloat(abs(here - deeper), bits), depth)


# ---------------------------------------------------------------------------
# Simple continued fractions (partial numerators all 1): expansion side.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimpleCFExpansion:
    """Partial quotients of a simple continued fraction.

    `exact` means every retained quotient is provably correct (surd or
    rational source); otherwise `validated` counts the prefix confirmed by
    a second, higher-precision computation. `preperiod`/`period` are set
    when the expansion closed a cycle exactly.
    """

    terms: tuple
    exact: bool
    validated: int
    preperiod: Optional[int] = None
    period: Optional[int] = None

    def __post_init__(self):
        if any(t < 1 for t in self.terms[1:]):
            raise DomainError("partial quotients after the first must be >= 1")
        if (self.preperiod is None) != (self.period is None):
            raise DomainError("preperiod and period must be set together")

    @property
    def is_periodic(self) -> bool:
        return self.period is not None

    def quotient(self, i: int) -> int:
        """Quotient i, continuing through the detected period if needed."""
        if i < len(self.terms):
            return self.terms[i]
        if not self.is_periodic:
            raise DomainError(f"quotient {i} beyond the computed expansion")
        return self.terms[self.preperiod + (i - self.preperiod) % self.period]

    def convergent_fractions(self, count: Optional[int] = None) -> list[Fraction]:
        """Exact convergents p_i/q_i of the expansion's leading quotients."""
        n = len(self.terms) if count is None else min(count, len(self.terms))
        out = []
        p_prev, q_prev = 1, 0
        p_cur, q_cur = None, None
        for i in range(n):
            t = self.terms[i]
            if i == 0:
                p_cur, q_cur = t, 1
            else:
                p_cur, p_prev = t * p_cur + p_prev, p_cur
                q_cur, q_prev = t * q_cur + q_prev, q_cur
            out.append(Fraction(p_cur, q_cur))
        return out


def surd_simple_cf(u: QuadraticSurd, max_terms: int) -> SimpleCFExpansion:
    """Exact expansion of a quadratic surd, stopping at the first repeated state.

    The (P, Q) pair of the reduced representation is a complete state for the
    expansion, so a repeat proves eventual periodicity. If the budget runs out
    first, the quotients produced are still exact but no period is reported.
    """
    if max_terms < 1:
        raise DomainError("need a positive term budget")
    seen: dict[tuple, int] = {}
    terms: list[int] = []
    cur = u
    for i in range(max_terms + 1):
        key = (cur.P, cur.Q)
        if key in seen:
            pre = seen[key]
            return SimpleCFExpansion(
                tuple(terms), exact=True, validated=len(terms), preperiod=pre, period=i - pre
            )
        if i == max_terms:
            break
        seen[key] = i
        terms.append(cur.floor())
        cur = cur.fractional_part().invert()
    return SimpleCFExpansion(tuple(terms), exact=True, validated=len(terms))


def rational_simple_cf(q: Fraction) -> SimpleCFExpansion:
    """Terminating expansion of a rational by the floor algorithm."""
    q = Fraction(q)
    n, d = q.numerator, q.denominator
    terms = []
    while d:
        a = n // d
        terms.append(a)
        n, d = d, n - a * d
    return SimpleCFExpansion(tuple(terms), exact=True, validated=len(terms))


def _float_digits(value: BigFloat, max_terms: int) -> list[int]:
    """Greedy quotient extraction; stops when the residual is below noise."""
    noise = BigFloat.pow2(-(value.bits - 48), value.bits)
    terms: list[int] = []
    x = value
    for _ in range(max_terms):
        a = x.floor()
        terms.append(a)
        frac = x - BigFloat.from_int(a, x.bits)
        if frac < noise:
            break
        x = BigFloat.from_int(1, x.bits) / frac
    return terms


def real_simple_cf(producer: Callable[[int], object], bits: int, max_terms: int) -> SimpleCFExpansion:
    """Validated expansion of a real number given by a precision-parametrized producer.

    The producer is evaluated at `bits` and `2*bits`; the returned quotients
    are the common prefix of the two extractions, so every retained quotient
    survived a doubling of working precision. Rational producer outputs take
    the exact terminating route instead.
    """
    if bits < 16:
        raise DomainError("need at least 16 bits of working precision")
    if max_terms < 1:
        raise DomainError("need a positive term budget")
    first = producer(bits)
    if isinstance(first, (Fraction, int)):
        return rational_simple_cf(Fraction(first))
    second = producer(2 * bits)
    if not isinstance(first, BigFloat) or not isinstance(second, BigFloat):
        raise DomainError("producer must return BigFloat or Fraction")
    digits_lo = _float_digits(first, max_terms)
    digits_hi = _float_digits(second, max_terms)
    common = []
    for a, b in zip(digits_lo, digits_hi):
        if a != b:
            break
        common.append(a)
    if not common:
        raise PrecisionInsufficient(
            f"no quotients of the expansion survived precision doubling at {bits} bits"
        )
    return SimpleCFExpansion(tuple(common), exact=False, validated=len(common))


def detect_period(terms: Sequence[int], min_repeats: int = 2, min_tail: int = 6) -> Optional[tuple]:
    """Heuristic periodicity search over a finite quotient list.

    Returns the smallest (preperiod, period) such that the whole tail after
    the preperiod is consistent with the period, the periodic part is seen
    at least `min_repeats` full times, covers at least half the list, and
    spans at least `min_tail` quotients. Returns None when no such pair
    exists. This is evidence about a prefix, not a proof about the number.
    """
    n = len(terms)
    for pre in range(0, n // 2 + 1):
        tail = n - pre
        if tail < min_tail:
            break
        for per in range(1, tail // min_repeats + 1):
            if all(terms[pre + t] == terms[pre + (t % per)] for t in range(tail)):
                return (pre, per)
    return None
