"""Numeric experiments: high-precision values, digit scans, and quotient patterns.

Everything here that relies on floating-point digits is validated by
recomputation at doubled precision, and any periodicity verdict is the
output of a heuristic search over a finite, validated prefix -- evidence,
not proof. Exact routes (surd expansions, rational series sums) are used
wherever the inputs allow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath

from .bigfloat import BigFloat
from .cf import EvaluatedValue, SimpleCFExpansion, detect_period, real_simple_cf, surd_simple_cf
from .errors import BudgetExceeded, DomainError, PrecisionInsufficient
from .surd import QuadraticSurd

_GUARD_BITS = 16
_LADDER_LIMIT = 1 << 18


def _interlaced_backward(x: int, y: int, depth: int):
    """Backward evaluation of [x, 1/y, x^2, 1/y^2, ...] truncated after
    `depth` quotients, under the caller's mpmath precision.

    Works tail-first with running powers so memory stays O(1) even at
    depths in the tens of thousands.
    """
    x_count = (depth + 1) // 2
    y_count = depth // 2
    x_mp = mpmath.mpf(x)
    y_mp = mpmath.mpf(y)
    x_pow = x_mp ** x_count
    y_pow = y_mp ** y_count
    tail = None
    for i in range(depth - 1, -1, -1):
        if i % 2 == 0:
            q = x_pow
            x_pow = x_pow / x_mp
        else:
            q = 1 / y_pow
            y_pow = y_pow / y_mp
        tail = q if tail is None else q + 1 / tail
    return tail


def f_value(x: int, y: int, precision: int) -> EvaluatedValue:
    """The value of [x, 1/y, x^2, 1/y^2, x^3, ...] to `precision` bits.

    Evaluation deepens along even truncation counts (the ones ending on a
    1/y^k quotient), doubling each rung, until two successive rungs differ
    by less than 2^(-precision + 16). Those truncations form the
    geometrically converging subsequence even at x = 1, where the
    x-terminated truncations approach the limit only arithmetically.
    Raises BudgetExceeded (with the last observed bound) if the ladder
    tops out first.
    """
    if not (isinstance(x, int) and isinstance(y, int)) or x < 1 or y < 1:
        raise DomainError("x and y must be positive integers")
    if precision < 64:
        raise DomainError("precision must be at least 64 bits")
    work_bits = precision + 32
    with mpmath.workprec(work_bits):
        tolerance = mpmath.power(2, -(precision - _GUARD_BITS))
        prev = _interlaced_backward(x, y, 4)
        depth = 6
        change = None
        while depth <= _LADDER_LIMIT + 2:
            cur = _interlaced_backward(x, y, depth)
            change = abs(cur - prev)
            if change < tolerance:
                return EvaluatedValue(
                    value=BigFloat(cur, work_bits),
                    bound=BigFloat(change, work_bits),
                    depth=depth,
                )
            prev = cur
            depth = 2 * depth - 2
        raise BudgetExceeded(
            f"no convergence within depth {_LADDER_LIMIT + 2} for x={x}, y={y}",
            last_bound=BigFloat(change, work_bits),
        )


@dataclass(frozen=True)
class ScanReport:
    """One (x, y) cell of a periodicity scan over validated CF digits."""

    x: int
    y: int
    precision: int
    requested_terms: int
    quotients: tuple
    validated: int
    preperiod: Optional[int]
    period: Optional[int]
    max_quotient: Optional[int]
    geometric_mean: Optional[float]
    flag: Optional[str]

    @property
    def verdict(self) -> str:
        if self.flag:
            return self.flag
        if self.period is not None:
            return "period-found"
        return "no-period-within-budget"


def conjecture_scan(
    x_values: Sequence[int], y_values: Sequence[int], precision: int, max_terms: int
) -> list[ScanReport]:
    """Expand the value of each (x, y) fraction and search the digits for a period.

    Diagonal cells (x = y) have quadratic-irrational values, so their digit
    streams must close a cycle; off-diagonal verdicts are heuristic evidence
    over the validated prefix only. Precision or budget failures flag the
    cell instead of aborting the scan.
    """
    reports = []
    for x in x_values:
        for y in y_values:
            try:
                expansion = real_simple_cf(
                    lambda bits: f_value(x, y, bits).value, precision, max_terms
                )
            except (PrecisionInsufficient, BudgetExceeded) as exc:
                reports.append(
                    ScanReport(
                        x=x,
                        y=y,
                        precision=precision,
                        requested_terms=max_terms,
                        quotients=(),
                        validated=0,
                        preperiod=None,
                        period=None,
                        max_quotient=None,
                        geometric_mean=None,
                        flag=(
                            "precision-insufficient"
                            if isinstance(exc, PrecisionInsufficient)
                            else "budget-exceeded"
                        ),
                    )
                )
                continue
            terms = expansion.terms
            found = detect_period(terms)
            geo = math.exp(sum(math.log(t) for t in terms) / len(terms))
            reports.append(
                ScanReport(
                    x=x,
                    y=y,
                    precision=precision,
                    requested_terms=max_terms,
                    quotients=terms,
                    validated=expansion.validated,
                    preperiod=found[0] if found else None,
                    period=found[1] if found else None,
                    max_quotient=max(terms),
                    geometric_mean=geo,
                    flag=None,
                )
            )
    return reports


# ---------------------------------------------------------------------------
# The exp(1/x) quotient pattern.
# ---------------------------------------------------------------------------


def euler_value(x: int, bits: int) -> BigFloat:
    """exp(1/x) by direct summation of sum_k 1/(k! x^k) in exact rationals."""
    if not isinstance(x, int) or x < 1:
        raise DomainError("x must be a positive integer")
    if bits < 16:
        raise DomainError("bits must be at least 16")
    threshold = Fraction(1, 1 << (bits + 16))
    total = Fraction(0)
    term = Fraction(1)
    k = 0
    while term >= threshold:
        total += term
        k += 1
        term /= k * x
    return BigFloat.from_fraction(total, bits)


def euler_pattern(x: int, count: int) -> list[int]:
    """The regular quotient pattern of exp(1/x) for x >= 2.

    Quotient 0 is 1; thereafter quotients come in blocks
    ((2n+1)x - 1, 1, 1) for n = 0, 1, 2, ...
    """
    if not isinstance(x, int) or x < 2:
        raise DomainError("the pattern needs an integer x >= 2")
    if count < 1:
        raise DomainError("count must be >= 1")
    out = []
    for j in range(count):
        if j == 0:
            out.append(1)
        elif j % 3 == 1:
            out.append((2 * ((j - 1) // 3) + 1) * x - 1)
        else:
            out.append(1)
    return out


@dataclass(frozen=True)
class EulerReport:
    """Validated digits of exp(1/x) against the predicted pattern."""

    x: int
    requested: int
    validated: int
    digits: tuple
    predicted: tuple
    first_mismatch: Optional[int]

    @property
    def matches(self) -> bool:
        return self.first_mismatch is None


def euler_check(x: int, terms: int, precision: int) -> EulerReport:
    """Compare `terms` validated quotients of exp(1/x) with the pattern.

    The value is summed exactly at two precisions and only the agreeing
    quotient prefix is used. Raises PrecisionInsufficient when fewer than
    `terms` quotients survive validation; a genuine mismatch within the
    validated prefix is reported, not raised.
    """
    if not isinstance(x, int) or x < 2:
        raise DomainError("x must be an integer >= 2")
    if terms < 1:
        raise DomainError("terms must be >= 1")
    expansion = real_simple_cf(lambda bits: euler_value(x, bits), precision, terms)
    if expansion.validated < terms:
        raise PrecisionInsufficient(
            f"only {expansion.validated} of {terms} quotients validated at "
            f"{precision} bits; raise the precision"
        )
    digits = expansion.terms[:terms]
    predicted = tuple(euler_pattern(x, terms))
    first_mismatch = None
    for i, (a, b) in enumerate(zip(digits, predicted)):
        if a != b:
            first_mismatch = i
            break
    return EulerReport(
        x=x,
        requested=terms,
        validated=expansion.validated,
        digits=tuple(digits),
        predicted=predicted,
        first_mismatch=first_mismatch,
    )


# ---------------------------------------------------------------------------
# Quotient patterns of a quadratic-root family.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadraticPatternResult:
    """Exact expansions attached to the roots of x^2 + (3a+3)x + (3a+5).

    Both roots are negative; `minus_smaller_root` expands the negated root
    near -1 and `shifted_larger_root` expands the negated other root after
    subtracting floor - 1 (placing it in (1, 2)), which is where its
    structured quotient run begins.
    """

    a: int
    discriminant: int
    minus_smaller_root: QuadraticSurd
    shifted_larger_root: QuadraticSurd
    shift: int
    minus_smaller_expansion: SimpleCFExpansion
    shifted_larger_expansion: SimpleCFExpansion


def quadratic_pattern(a: int, terms: int) -> QuadraticPatternResult:
    """Expand both roots of x^2 + (3a+3)x + (3a+5) for integer a >= 2.

    The discriminant 9a^2 + 6a - 11 is never a perfect square for a >= 2,
    so both expansions are exact surd expansions; `terms` bounds the number
    of quotients produced for each root.
    """
    if not isinstance(a, int) or a < 2:
        raise DomainError("a must be an integer >= 2 (a = 1 gives rational roots)")
    if terms < 1:
        raise DomainError("terms must be >= 1")
    disc = 9 * a * a + 6 * a - 11
    minus_x0 = QuadraticSurd(-(3 * a + 3), disc, -2)
    minus_x1 = QuadraticSurd(3 * a + 3, disc, 2)
    shift = minus_x1.floor() - 1
    shifted = minus_x1.add_int(-shift)
    return QuadraticPatternResult(
        a=a,
        discriminant=disc,
        minus_smaller_root=minus_x0,
        shifted_larger_root=shifted,
        shift=shift,
        minus_smaller_expansion=surd_simple_cf(minus_x0, terms),
        shifted_larger_expansion=surd_simple_cf(shifted, terms),
    )
