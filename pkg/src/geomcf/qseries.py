"""Power-series behaviour of the symbolic interlaced fraction [1, x, 1, x^2, ...].

With bases (1, x), the interlaced fraction's truncations are rational
functions N_k(x)/D_k(x) in lowest terms. As k grows, the coefficient
sequences of N_k and D_k stabilize onto classical partition-style q-series:

* the denominators of even-length truncations approach
      sum_{k>=1} x^(k(k+1)/2) / ((1-x)...(1-x^(k-1)))^2 (1-x^k)
  (coefficients 1, 1, 2, 3, 5, 8, ... from x^1 on; catalogued as A001524);
* the numerators of even-length truncations approach one plus
      sum_{k>=1} x^(k(k+1)/2) / ((1-x)...(1-x^k))^2
  (coefficients 1, 2, 4, 6, 10, ... from x^1 on; catalogued as A143184);
* the reversed coefficient lists of odd-length denominators stabilize on
  their own (catalogued as A005576); no closed-form target is asserted for
  them here, so the report measures successive-row agreement only.

Odd-length truncations carry a growing constant term, so only the rows named
above stabilize; the report selectors encode that resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .polynomial import Polynomial, X, poly_gcd
from .series import PowerSeries

OEIS_TAGS = {
    "D-all": "A001524",
    "N-odd": "A143184",
    "D-odd-reversed": "A005576",
}

SELECTORS = ("D-all", "N-odd", "D-odd-reversed")


def truncation_rational(k: int) -> tuple[Polynomial, Polynomial]:
    """(N_k, D_k): the first k quotients of [1, x, 1, x^2, 1, x^3, ...].

    Quotients at even positions are 1, at odd positions x^((i+1)/2). The
    continuant recurrence keeps numerator and denominator coprime (their
    resultant-free determinant is +-1), so no reduction step is needed.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    p_prev, q_prev = Polynomial.one(), Polynomial.zero()
    p_cur, q_cur = Polynomial.one(), Polynomial.one()  # [1] = 1/1
    for i in range(1, k):
        t = X ** ((i + 1) // 2) if i % 2 == 1 else Polynomial.one()
        p_cur, p_prev = t * p_cur + p_prev, p_cur
        q_cur, q_prev = t * q_cur + q_prev, q_cur
    return p_cur, q_cur


def truncation_table(kmax: int) -> list[tuple[Polynomial, Polynomial]]:
    """(N_k, D_k) for k = 1..kmax, sharing one recurrence pass."""
    if kmax < 1:
        raise DomainError("kmax must be >= 1")
    out = []
    p_prev, q_prev = Polynomial.one(), Polynomial.zero()
    p_cur, q_cur = Polynomial.one(), Polynomial.one()
    out.append((p_cur, q_cur))
    for i in range(1, kmax):
        t = X ** ((i + 1) // 2) if i % 2 == 1 else Polynomial.one()
        p_cur, p_prev = t * p_cur + p_prev, p_cur
        q_cur, q_prev = t * q_cur + q_prev, q_cur
        out.append((p_cur, q_cur))
    return out


def _inverse_product_factors(exponents: list[int], order: int) -> PowerSeries:
    """1 / prod_i (1 - x^e_i) as a series to the given order."""
    acc = PowerSeries.one(order)
    for e in exponents:
        factor = PowerSeries((1,) + (0,) * (e - 1) + (-1,), order)
        acc = acc * factor.reciprocal()
    return acc


def auluck_series(order: int) -> PowerSeries:
    """sum_{k>=1} x^(k(k+1)/2) / ((1-x)..(1-x^(k-1)))^2 (1-x^k), truncated.

    Leading coefficients 0, 1, 1, 2, 3, 5, 8, ... All coefficients are
    nonnegative integers.
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    total = PowerSeries.zero(order)
    k = 1
    while k * (k + 1) // 2 < order:
        exps = list(range(1, k)) * 2 + [k]
        term = _inverse_product_factors(exps, order).shift(k * (k + 1) // 2)
        total = total + term
        k += 1
    return total


def ramanujan_series(order: int) -> PowerSeries:
    """sum_{k>=1} x^(k(k+1)/2) / ((1-x)..(1-x^k))^2, truncated.

    Leading coefficients 0, 1, 2, 4, 6, 10, 15, ...
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    total = PowerSeries.zero(order)
    k = 1
    while k * (k + 1) // 2 < order:
        exps = list(range(1, k + 1)) * 2
        term = _inverse_product_factors(exps, order).shift(k * (k + 1) // 2)
        total = total + term
        k += 1
    return total


def _agreement_length(poly: Polynomial, target: PowerSeries, order: int) -> int:
    """Number of initial coefficients on which `poly` matches the series."""
    count = 0
    for i in range(order):
        if poly[i] != target[i]:
            break
        count += 1
    return count


def _pair_agreement(a: tuple, b: tuple) -> int:
    count = 0
    for u, v in zip(a, b):
        if u != v:
            break
        count += 1
    return count


@dataclass(frozen=True)
class StabilizationRow:
    """One truncation's agreement measurement."""

    k: int
    agreement: int
    coefficients: tuple
    extra: Optional[tuple] = None  # selector-specific companion data


@dataclass(frozen=True)
class StabilizationReport:
    selector: str
    kmax: int
    order: int
    target_label: Optional[str]
    catalogue_tag: Optional[str]
    rows: tuple
    notes: str

    @property
    def agreements(self) -> list[int]:
        return [r.agreement for r in self.rows]

    @property
    def nondecreasing(self) -> bool:
        a = self.agreements
        return all(a[i] <= a[i + 1] for i in range(len(a) - 1))


def stabilization_report(selector: str, kmax: int, order: int) -> StabilizationReport:
    """Measure how truncation polynomials stabilize onto their target series.

    D-all: denominators of even-length truncations against the direct
    summation of the first target series; agreement = matching initial
    coefficients.

    N-odd: numerators of even-length truncations, constant term dropped,
    against the direct summation of the second target series. (The raw
    numerators carry constant term 1; odd-length numerators have a growing
    constant and do not stabilize, which is recorded in the notes.)

    D-odd-reversed: reversed coefficient lists of odd-length denominators,
    k >= 3; agreement of each row against the next odd row, reported for the
    raw reversed list and for the reversal after high-degree zero trimming
    (identical whenever the constant term is nonzero). No external target.
    """
    if selector not in SELECTORS:
        raise DomainError(f"selector must be one of {SELECTORS}")
    if kmax < 2:
        raise DomainError("kmax must be >= 2")
    if order < 2:
        raise DomainError("order must be >= 2")
    table = truncation_table(kmax + (2 if selector == "D-odd-reversed" else 0))

    rows = []
    if selector == "D-all":
        target = auluck_series(order)
        for k in range(2, kmax + 1, 2):
            _, den = table[k - 1]
            rows.append(
                StabilizationRow(
                    k=k,
                    agreement=_agreement_length(den, target, order),
                    coefficients=den.coeffs,
                )
            )
        notes = (
            "even-length truncation denominators against the direct summation; "
            "odd-length denominators keep constant term 1 and do not stabilize"
        )
        label = "interlaced-denominator limit series"
    elif selector == "N-odd":
        target = ramanujan_series(order)
        for k in range(2, kmax + 1, 2):
            num, _ = table[k - 1]
            adjusted = num - Polynomial.const(num[0])
            rows.append(
                StabilizationRow(
                    k=k,
                    agreement=_agreement_length(adjusted, target, order),
                    coefficients=num.coeffs,
                    extra=(num[0],),
                )
            )
        notes = (
            "even-length truncation numerators with the constant term dropped; "
            "raw numerators have constant term 1 and odd-length numerators grow "
            "a constant, so neither matches the target verbatim"
        )
        label = "interlaced-numerator limit series"
    else:
        for k in range(3, kmax + 1, 2):
            _, den = table[k - 1]
            _, den_next = table[k + 1]
            raw = tuple(reversed(den.coeffs))
            raw_next = tuple(reversed(den_next.coeffs))
            trimmed = den.reversed_coefficients().coeffs
            trimmed_next = den_next.reversed_coefficients().coeffs
            rows.append(
                StabilizationRow(
                    k=k,
                    agreement=_pair_agreement(raw, raw_next),
                    coefficients=raw,
                    extra=(_pair_agreement(trimmed, trimmed_next), trimmed),
                )
            )
        notes = (
            "reversed odd-length denominators compared against the next odd row; "
            "no external target is asserted for this family"
        )
        label = None

    return StabilizationReport(
        selector=selector,
        kmax=kmax,
        order=order,
        target_label=label,
        catalogue_tag=OEIS_TAGS.get(selector),
        rows=tuple(rows),
        notes=notes,
    )


def coprimality_witness(k: int) -> bool:
    """Confirm gcd(N_k, D_k) = 1 by the polynomial Euclidean algorithm."""
    num, den = truncation_rational(k)
    g = poly_gcd(num, den)
    return g.degree == 0 and abs(g[0]) == 1
