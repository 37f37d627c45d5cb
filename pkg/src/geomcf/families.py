"""The interlaced-geometric continued fraction family and its exact identities.

The family of interest interlaces two geometric progressions as partial
quotients:

    F(x, s) = x + 1/(s/x + 1/(x^2 + 1/(s/x^2 + 1/(x^3 + ...))))

for integers x, s >= 1. An equivalence rescaling turns it into a fraction
with integer terms,

    tilde-F(x, s) = x + x/(s + 1/(x + x/(s + 1/(x + ...)))),

whose convergent numerators and denominators are integer polynomials in x
satisfying a shared four-term recurrence

    A_j = ((s+1)x + 1) A_{j-2} - x A_{j-4}.

The limit of the fraction is the largest root of

    P(x, z, s) = s z^2 - ((s+1)x - 1) z - x,

and truncation errors admit exact monomial certificates: evaluated at a
convergent, P times the squared denominator is plus or minus a power of x.
This module builds the polynomial tables, checks the catalogue of exact
relations among them, verifies their generating functions, and computes the
closed-form certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .cf import GCFSpec, convergents
from .errors import DomainError, IdentityViolation, UnsupportedFamily
from .polynomial import Polynomial, X
from .series import PowerSeries
from .surd import QuadFieldElement, QuadraticSurd


# ---------------------------------------------------------------------------
# Family constructors.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InterlaceParams:
    """Parameters selecting one member of the interlaced family.

    The two-progression member uses integers x, s >= 1. Setting `bases`
    instead selects the m-progression member whose quotients cycle through
    base_1 .. base_m, raising every base to the power k on the k-th pass;
    bases may be positive integers or polynomials for symbolic work.
    """

    x: int = 1
    s: int = 1
    bases: Optional[tuple] = None

    def __post_init__(self):
        if self.bases is not None:
            bases = tuple(self.bases)
            if len(bases) < 2:
                raise DomainError("a progression family needs at least two bases")
            for b in bases:
                if isinstance(b, int):
                    if b < 1:
                        raise DomainError("integer bases must be >= 1")
                elif not isinstance(b, Polynomial):
                    raise DomainError("bases must be integers or polynomials")
            object.__setattr__(self, "bases", bases)
            return
        if not (isinstance(self.x, int) and isinstance(self.s, int)):
            raise DomainError("x and s must be integers")
        if self.x < 1 or self.s < 1:
            raise DomainError("x and s must be >= 1")


def make_interlaced(params: InterlaceParams) -> GCFSpec:
    """The interlaced fraction as a simple continued fraction (all a_j = 1).

    Two-progression form: quotients x, s/x, x^2, s/x^2, x^3, ... (exact
    rationals). m-progression form with bases (c_1..c_m): quotients
    c_1, .., c_m, c_1^2, .., c_m^2, ...
    """
    if params.bases is not None:
        bases = params.bases
        m = len(bases)

        def quotient(i: int):
            base = bases[i % m]
            power = i // m + 1
            return base ** power

    else:
        x, s = params.x, params.s

        def quotient(i: int):
            if i % 2 == 0:
                return Fraction(x) ** (i // 2 + 1)
            return Fraction(s, x ** ((i + 1) // 2))

    return GCFSpec(
        b0=quotient(0),
        partial_num=lambda j: 1,
        partial_den=lambda j: quotient(j),
        description="interlaced geometric quotients",
    )


def make_tilde(params: InterlaceParams) -> GCFSpec:
    """The integer-term equivalent of the two-progression fraction.

    Leading term x; odd levels contribute a_j = x, b_j = s and even levels
    a_j = 1, b_j = x. Only the two-progression member has this form.
    """
    if params.bases is not None:
        raise UnsupportedFamily(
            "the integer-term rescaling exists only for the two-progression family"
        )
    x, s = params.x, params.s
    return GCFSpec(
        b0=x,
        partial_num=lambda j: x if j % 2 == 1 else 1,
        partial_den=lambda j: s if j % 2 == 1 else x,
        description="rescaled interlaced fraction with integer terms",
    )


def tilde_polynomial_spec(s: int) -> GCFSpec:
    """make_tilde with a symbolic x: terms are polynomials in x."""
    _check_s(s)
    return GCFSpec(
        b0=X,
        partial_num=lambda j: X if j % 2 == 1 else Polynomial.one(),
        partial_den=lambda j: Polynomial.const(s) if j % 2 == 1 else X,
        description="rescaled interlaced fraction, symbolic x",
    )


def interlace_scale_sequence(x: int) -> Callable[[int], Fraction]:
    """The equivalence scale taking the interlaced terms to the integer terms.

    r_0 = 1, r_j = x^((j+1)/2) for odd j and x^(-j/2) for even j.
    """
    if not isinstance(x, int) or x < 1:
        raise DomainError("x must be a positive integer")

    def r(j: int) -> Fraction:
        if j == 0:
            return Fraction(1)
        if j % 2 == 1:
            return Fraction(x ** ((j + 1) // 2))
        return Fraction(1, x ** (j // 2))

    return r


# ---------------------------------------------------------------------------
# Convergent polynomial tables.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ABSequence:
    """Numerator (A) and denominator (B) polynomials of the integer-term form.

    A[j](x)/B[j](x) is the j-th convergent of tilde-F(x, s). All coefficients
    are nonnegative integers.
    """

    s: int
    A: tuple
    B: tuple

    @property
    def jmax(self) -> int:
        return len(self.A) - 1


def _check_s(s: int):
    if not isinstance(s, int) or s < 1:
        raise DomainError("s must be a positive integer")


def ab_polynomials(s: int, jmax: int) -> ABSequence:
    """Convergent polynomials A_0..A_jmax, B_0..B_jmax at parameter s.

    Seeds: A_0 = x, A_1 = (s+1)x, A_2 = ((s+1)x+1)x, A_3 = ((s+1)^2 x + s)x;
    B_0 = 1, B_1 = s, B_2 = sx+1, B_3 = s((s+1)x+1). For j >= 4 both rows
    follow A_j = ((s+1)x + 1) A_{j-2} - x A_{j-4}.
    """
    _check_s(s)
    if jmax < 0:
        raise DomainError("jmax must be nonnegative")
    mult = Polynomial([1, s + 1])  # (s+1)x + 1
    a_rows = [
        X,
        Polynomial([0, s + 1]),
        Polynomial([0, 1, s + 1]),
        Polynomial([0, s, (s + 1) ** 2]),
    ]
    b_rows = [
        Polynomial.one(),
        Polynomial.const(s),
        Polynomial([1, s]),
        Polynomial([s, s * (s + 1)]),
    ]
    for j in range(4, jmax + 1):
        a_rows.append(mult * a_rows[j - 2] - X * a_rows[j - 4])
        b_rows.append(mult * b_rows[j - 2] - X * b_rows[j - 4])
    a_rows = a_rows[: jmax + 1]
    b_rows = b_rows[: jmax + 1]
    for rows in (a_rows, b_rows):
        for p in rows:
            if any(c < 0 for c in p.coeffs):
                raise IdentityViolation("convergent polynomial with a negative coefficient")
    return ABSequence(s, tuple(a_rows), tuple(b_rows))


# Frozen reference: first 11 numerator/denominator pairs at s = 1,
# coefficients constant-first. Tests and the reference-table command diff
# freshly generated rows against these.
REFERENCE_ROWS_S1 = (
    ((0, 1), (1,)),
    ((0, 2), (1,)),
    ((0, 1, 2), (1, 1)),
    ((0, 1, 4), (1, 2)),
    ((0, 1, 3, 4), (1, 2, 2)),
    ((0, 1, 4, 8), (1, 3, 4)),
    ((0, 1, 4, 8, 8), (1, 3, 5, 4)),
    ((0, 1, 5, 12, 16), (1, 4, 8, 8)),
    ((0, 1, 5, 13, 20, 16), (1, 4, 9, 12, 8)),
    ((0, 1, 6, 18, 32, 32), (1, 5, 13, 20, 16)),
    ((0, 1, 6, 19, 38, 48, 32), (1, 5, 14, 25, 28, 16)),
)


def reference_rows() -> list[tuple[Polynomial, Polynomial]]:
    """The frozen 11-row reference table at s = 1 as polynomial pairs."""
    return [(Polynomial(a), Polynomial(b)) for a, b in REFERENCE_ROWS_S1]


def limit_root(x: int, s: int) -> QuadraticSurd:
    """The value of the fraction: the largest root of s z^2 - ((s+1)x-1) z - x.

    The root is ((s+1)x - 1 + sqrt(((s+1)x-1)^2 + 4sx)) / (2s); it is positive
    and exceeds the conjugate root, whose sign is negative (the root product
    -x/s is negative).
    """
    if not isinstance(x, int) or x < 1:
        raise DomainError("x must be a positive integer")
    _check_s(s)
    p = (s + 1) * x - 1
    return QuadraticSurd(p, p * p + 4 * s * x, 2 * s)


# ---------------------------------------------------------------------------
# Identity registry.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityEntry:
    name: str
    description: str
    jmin: int
    s_restricted: bool  # True: holds only at s = 1
    expected_zero: Callable[[int], bool]
    residual: Callable[[ABSequence, int, int], Polynomial]
    table_margin: int  # extra table indices needed beyond 2*j


def _res_a_odd_from_even(t: ABSequence, s: int, j: int) -> Polynomial:
    return t.A[2 * j + 1] - (s + 1) * t.A[2 * j] + t.A[2 * j - 2]


def _res_b_odd_from_a(t: ABSequence, s: int, j: int) -> Polynomial:
    return X * t.B[2 * j + 1] - s * t.A[2 * j]


def _res_b_even_from_a(t: ABSequence, s: int, j: int) -> Polynomial:
    return X * t.B[2 * j] - t.A[2 * j] + X * t.A[2 * j - 2]


def _res_b_even_from_b(t: ABSequence, s: int, j: int) -> Polynomial:
    return s * t.B[2 * j] - t.B[2 * j + 1] + X * t.B[2 * j - 1]


def _res_half_split(t: ABSequence, s: int, j: int) -> Polynomial:
    return 2 * X * t.B[j] - t.A[j] - X * t.B[j - 2]


def _res_b_even_weighted_sum(t: ABSequence, s: int, k: int) -> Polynomial:
    acc = t.A[0]
    for j in range(1, k + 1):
        acc = acc + (1 << (j - 1)) * t.A[2 * j]
    return (1 << k) * X * t.B[2 * k] - acc


def _res_b_odd_weighted_sum(t: ABSequence, s: int, k: int) -> Polynomial:
    acc = Polynomial.zero()
    for j in range(0, k + 1):
        acc = acc + (1 << j) * t.A[2 * j + 1]
    return (1 << (k + 1)) * X * t.B[2 * k + 1] - acc


def _res_a_even_gap(t: ABSequence, s: int, j: int) -> Polynomial:
    return t.A[2 * j - 2] * t.A[2 * j + 2] - t.A[2 * j] * t.A[2 * j] + X ** (j + 2)


def _res_b_even_gap(t: ABSequence, s: int, j: int) -> Polynomial:
    return t.B[2 * j - 2] * t.B[2 * j + 2] - t.B[2 * j] * t.B[2 * j] - s * X ** (j + 1)


def _res_a_odd_gap(t: ABSequence, s: int, j: int) -> Polynomial:
    return t.A[2 * j - 3] * t.A[2 * j + 1] - t.A[2 * j - 1] * t.A[2 * j - 1] - s * X ** j


def _res_b_odd_gap(t: ABSequence, s: int, j: int) -> Polynomial:
    return t.B[2 * j - 3] * t.B[2 * j + 1] - t.B[2 * j - 1] * t.B[2 * j - 1] + s * s * X ** (j - 1)


def _quad_literal(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * a - Polynomial([-1, 2]) * a * b - X * b * b


def _quad_matched(a: Polynomial, b: Polynomial, s: int) -> Polynomial:
    return s * (a * a) - Polynomial([-1, s + 1]) * a * b - X * (b * b)


def _res_quad_form_even(t: ABSequence, s: int, j: int) -> Polynomial:
    return _quad_literal(t.A[2 * j], t.B[2 * j]) + X ** (j + 2)


def _res_quad_form_odd(t: ABSequence, s: int, j: int) -> Polynomial:
    return _quad_literal(t.A[2 * j - 1], t.B[2 * j - 1]) - s * X ** j


def _res_quad_form_even_s(t: ABSequence, s: int, j: int) -> Polynomial:
    return _quad_matched(t.A[2 * j], t.B[2 * j], s) + X ** (j + 2)


def _res_quad_form_odd_s(t: ABSequence, s: int, j: int) -> Polynomial:
    return _quad_matched(t.A[2 * j - 1], t.B[2 * j - 1], s) - s * X ** j


_ALWAYS = lambda s: True  # noqa: E731
_ONLY_S1 = lambda s: s == 1  # noqa: E731

IDENTITY_REGISTRY: dict[str, IdentityEntry] = {
    e.name: e
    for e in (
        IdentityEntry(
            "a-odd-from-even",
            "A_{2j+1} = (s+1) A_{2j} - A_{2j-2}",
            1,
            False,
            _ALWAYS,
            _res_a_odd_from_even,
            2,
        ),
        IdentityEntry(
            "b-odd-from-a",
            "x B_{2j+1} = s A_{2j}",
            0,
            False,
            _ALWAYS,
            _res_b_odd_from_a,
            2,
        ),
        IdentityEntry(
            "b-even-from-a",
            "x B_{2j} = A_{2j} - x A_{2j-2}",
            1,
            False,
            _ALWAYS,
            _res_b_even_from_a,
            1,
        ),
        IdentityEntry(
            "b-even-from-b",
            "s B_{2j} = B_{2j+1} - x B_{2j-1}",
            1,
            False,
            _ALWAYS,
            _res_b_even_from_b,
            2,
        ),
        IdentityEntry(
            "half-split",
            "2x B_j = A_j + x B_{j-2} (s = 1 only; j counts single steps)",
            2,
            True,
            _ONLY_S1,
            _res_half_split,
            1,
        ),
        IdentityEntry(
            "b-even-weighted-sum",
            "2^k x B_{2k} = A_0 + sum_{j<=k} 2^(j-1) A_{2j} (s = 1 only)",
            0,
            True,
            _ONLY_S1,
            _res_b_even_weighted_sum,
            1,
        ),
        IdentityEntry(
            "b-odd-weighted-sum",
            "2^(k+1) x B_{2k+1} = sum_{j<=k} 2^j A_{2j+1} (s = 1 only)",
            0,
            True,
            _ONLY_S1,
            _res_b_odd_weighted_sum,
            2,
        ),
        IdentityEntry(
            "a-even-gap",
            "A_{2j-2} A_{2j+2} - A_{2j}^2 = -x^(j+2)",
            1,
            False,
            _ALWAYS,
            _res_a_even_gap,
            3,
        ),
        IdentityEntry(
            "b-even-gap",
            "B_{2j-2} B_{2j+2} - B_{2j}^2 = s x^(j+1)",
            1,
            False,
            _ALWAYS,
            _res_b_even_gap,
            3,
        ),
        IdentityEntry(
            "a-odd-gap",
            "A_{2j-3} A_{2j+1} - A_{2j-1}^2 = s x^j",
            2,
            False,
            _ALWAYS,
            _res_a_odd_gap,
            2,
        ),
        IdentityEntry(
            "b-odd-gap",
            "B_{2j-3} B_{2j+1} - B_{2j-1}^2 = -s^2 x^(j-1)",
            2,
            False,
            _ALWAYS,
            _res_b_odd_gap,
            2,
        ),
        IdentityEntry(
            "quad-form-even",
            "A_{2j}^2 - (2x-1) A_{2j} B_{2j} - x B_{2j}^2 = -x^(j+2) (zero only at s = 1)",
            0,
            False,
            _ONLY_S1,
            _res_quad_form_even,
            1,
        ),
        IdentityEntry(
            "quad-form-odd",
            "A_{2j-1}^2 - (2x-1) A_{2j-1} B_{2j-1} - x B_{2j-1}^2 = s x^j (zero only at s = 1)",
            1,
            False,
            _ONLY_S1,
            _res_quad_form_odd,
            1,
        ),
        IdentityEntry(
            "quad-form-even-s",
            "s A_{2j}^2 - ((s+1)x-1) A_{2j} B_{2j} - x B_{2j}^2 = -x^(j+2)",
            0,
            False,
            _ALWAYS,
            _res_quad_form_even_s,
            1,
        ),
        IdentityEntry(
            "quad-form-odd-s",
            "s A_{2j-1}^2 - ((s+1)x-1) A_{2j-1} B_{2j-1} - x B_{2j-1}^2 = s x^j",
            1,
            False,
            _ALWAYS,
            _res_quad_form_odd_s,
            1,
        ),
    )
}


def identity_names() -> list[str]:
    return list(IDENTITY_REGISTRY)


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one registry identity over an index range."""

    name: str
    s: int
    jmin: int
    jmax: int
    checked: int
    expected_zero: bool
    nonzero: tuple  # (j, residual polynomial) pairs

    @property
    def all_zero(self) -> bool:
        return not self.nonzero

    @property
    def consistent(self) -> bool:
        """True when the observed residuals match the expectation."""
        return self.all_zero == self.expected_zero


def check_identity(
    name: str, s: int, jmax: int, table: Optional[ABSequence] = None
) -> IdentityReport:
    """Evaluate one identity's residual for jmin <= j <= jmax at parameter s.

    Identities marked s = 1 only reject other s values; the literal
    quadratic-form variants run at any s and are expected to be nonzero
    away from s = 1 (their reports record the residuals).
    """
    _check_s(s)
    if name not in IDENTITY_REGISTRY:
        raise DomainError(f"unknown identity {name!r}; see identity_names()")
    entry = IDENTITY_REGISTRY[name]
    if entry.s_restricted and s != 1:
        raise DomainError(f"identity {name!r} holds only at s = 1")
    if jmax < entry.jmin:
        raise DomainError(f"identity {name!r} needs jmax >= {entry.jmin}")
    if table is None:
        table = ab_polynomials(s, 2 * jmax + entry.table_margin)
    elif table.s != s:
        raise DomainError("table was generated for a different s")
    elif table.jmax < 2 * jmax + entry.table_margin:
        raise DomainError("table too short for the requested range")
    nonzero = []
    checked = 0
    for j in range(entry.jmin, jmax + 1):
        r = entry.residual(table, s, j)
        checked += 1
        if not r.is_zero():
            nonzero.append((j, r))
    return IdentityReport(
        name=name,
        s=s,
        jmin=entry.jmin,
        jmax=jmax,
        checked=checked,
        expected_zero=entry.expected_zero(s),
        nonzero=tuple(nonzero),
    )


def check_identity_suite(s: int, jmax: int, names: Optional[Sequence[str]] = None) -> list[IdentityReport]:
    """Run many identities over one shared polynomial table."""
    _check_s(s)
    if names is None:
        names = [n for n, e in IDENTITY_REGISTRY.items() if not (e.s_restricted and s != 1)]
    margin = max(IDENTITY_REGISTRY[n].table_margin for n in names)
    table = ab_polynomials(s, 2 * jmax + margin)
    return [check_identity(n, s, jmax, table) for n in names]


# ---------------------------------------------------------------------------
# Generating functions.
# ---------------------------------------------------------------------------

GF_KINDS = ("A-even", "A-odd", "B-even", "B-odd")


def gf_check(kind: str, s: int, order: int) -> PowerSeries:
    """Residual of a convergent-polynomial generating function, as a series in t.

    Each parity class has the rational generating function

        sum_j R_j t^j = numerator(t) / (1 - ((s+1)x + 1) t + x t^2)

    with numerators x (A-even), (s+1)x - x t (A-odd), 1 - x t (B-even) and
    s (B-odd). The returned series is denominator * sum - numerator truncated
    at `order`; it is identically zero within the truncation.
    """
    _check_s(s)
    if order < 3:
        raise DomainError("order must be at least 3")
    if kind not in GF_KINDS:
        raise DomainError(f"kind must be one of {GF_KINDS}")
    table = ab_polynomials(s, 2 * order + 1)
    if kind == "A-even":
        coeffs = [table.A[2 * j] for j in range(order)]
        numerator = [X]
    elif kind == "A-odd":
        coeffs = [table.A[2 * j + 1] for j in range(order)]
        numerator = [(s + 1) * X, -X]
    elif kind == "B-even":
        coeffs = [table.B[2 * j] for j in range(order)]
        numerator = [Polynomial.one(), -X]
    else:
        coeffs = [table.B[2 * j + 1] for j in range(order)]
        numerator = [Polynomial.const(s)]
    denominator = PowerSeries(
        (Polynomial.one(), -Polynomial([1, s + 1]), X), order
    )
    running = PowerSeries(coeffs, order)
    return denominator * running - PowerSeries(numerator, order)


# ---------------------------------------------------------------------------
# Convergence certificates.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """Exact truncation-error certificate for one convergent.

    `residual` is P(x, A/B, s) * B^2 evaluated exactly; equality with
    `predicted` (s x^k on the odd side, -x^(k+1) on the even side) proves the
    monomial error law. `above_root` records the side of the limit the
    convergent falls on, confirmed independently by exact surd comparison.
    """

    x: int
    s: int
    k: int
    side: str
    index: int
    convergent: Fraction
    residual: int
    predicted: int
    above_root: bool


def convergence_certificate(x: int, s: int, k: int, side: str) -> Certificate:
    """Certify the k-th odd or even convergent of tilde-F(x, s).

    side 'odd' certifies A_{2k-1}/B_{2k-1} (falls above the limit, P > 0);
    side 'even' certifies A_{2k-2}/B_{2k-2} (falls below, P < 0). Raises
    IdentityViolation if the exact residual differs from the predicted
    monomial or the two sign routes disagree.
    """
    if not isinstance(x, int) or x < 1:
        raise DomainError("x must be a positive integer")
    _check_s(s)
    if k < 1:
        raise DomainError("k must be >= 1")
    if side == "odd":
        index = 2 * k - 1
        predicted = s * x ** k
    elif side == "even":
        index = 2 * k - 2
        predicted = -(x ** (k + 1))
    else:
        raise DomainError("side must be 'odd' or 'even'")
    table = ab_polynomials(s, index)
    a_val = table.A[index](x)
    b_val = table.B[index](x)
    residual = s * a_val * a_val - ((s + 1) * x - 1) * a_val * b_val - x * b_val * b_val
    if residual != predicted:
        raise IdentityViolation(
            f"certificate failed at x={x}, s={s}, k={k}, {side}: "
            f"residual {residual} != predicted {predicted}"
        )
    conv = Fraction(a_val, b_val)
    root = limit_root(x, s)
    above_by_sign = residual > 0
    above_by_order = root.compare_rational(conv) < 0
    if above_by_sign != above_by_order:
        raise IdentityViolation(
            f"sign routes disagree at x={x}, s={s}, k={k}, {side}"
        )
    expected_above = side == "odd"
    if above_by_sign != expected_above:
        raise IdentityViolation(
            f"convergent on the wrong side of the limit at x={x}, s={s}, k={k}, {side}"
        )
    return Certificate(
        x=x,
        s=s,
        k=k,
        side=side,
        index=index,
        convergent=conv,
        residual=residual,
        predicted=predicted,
        above_root=above_by_sign,
    )


# ---------------------------------------------------------------------------
# Constant-quotient analogy.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FibonacciAnalogy:
    """u^2 - x u - 1 evaluated at the n-term constant fraction [x; x, .., x].

    The exact value is (-1)^n / f_n(x)^2 where f_n are the Fibonacci
    polynomials f_1 = 1, f_2 = x, f_n = x f_{n-1} + f_{n-2}.
    """

    x: int
    n: int
    value: Fraction
    residual: Fraction
    predicted: Fraction

    @property
    def ok(self) -> bool:
        return self.residual == self.predicted


def fibonacci_polynomial(n: int) -> Polynomial:
    """f_1 = 1, f_2 = x, f_n = x f_{n-1} + f_{n-2}."""
    if n < 1:
        raise DomainError("n must be >= 1")
    prev, cur = Polynomial.one(), X
    if n == 1:
        return prev
    for _ in range(n - 2):
        prev, cur = cur, X * cur + prev
    return cur


def fibonacci_analogy_check(x: int, n: int) -> FibonacciAnalogy:
    """Exact check of the constant-fraction residual law for one (x, n)."""
    if not isinstance(x, int) or x < 1:
        raise DomainError("x must be a positive integer")
    if n < 1:
        raise DomainError("n must be >= 1")
    p_prev, q_prev = 1, 0
    p_cur, q_cur = x, 1
    for _ in range(n - 1):
        p_cur, p_prev = x * p_cur + p_prev, p_cur
        q_cur, q_prev = x * q_cur + q_prev, q_cur
    u = Fraction(p_cur, q_cur)
    residual = u * u - x * u - 1
    fib = fibonacci_polynomial(n)(x)
    predicted = Fraction((-1) ** n, fib * fib)
    return FibonacciAnalogy(x=x, n=n, value=u, residual=residual, predicted=predicted)


# ---------------------------------------------------------------------------
# Closed form via the characteristic roots (s = 1).
# ---------------------------------------------------------------------------


def characteristic_form(x: int, parity: str, k: int) -> tuple[Fraction, Fraction]:
    """A and B values from the closed form in the roots of y^2 - (2x+1)y + x.

    At s = 1 the even-index subsequences A_{2k}, B_{2k} and the odd-index
    subsequences A_{2k-1}, B_{2k-1} are linear combinations of powers of the
    two roots l1 > l2 of y^2 - (2x+1)y + x (l1 l2 = x). The combination
    coefficients live in the quadratic field of sqrt(4x^2+1); the k-th values
    must come out rational and match the recurrence table, else
    IdentityViolation is raised.

    parity 'even' returns (A_{2k}(x), B_{2k}(x)); parity 'odd' returns
    (A_{2k-1}(x), B_{2k-1}(x)); k >= 1.
    """
    if not isinstance(x, int) or x < 1:
        raise DomainError("x must be a positive integer")
    if k < 1:
        raise DomainError("k must be >= 1")
    if parity not in ("even", "odd"):
        raise DomainError("parity must be 'even' or 'odd'")
    d = 4 * x * x + 1
    half = Fraction(1, 2)
    sqrt_d = QuadFieldElement.sqrt_part(d)
    trace = QuadFieldElement.rational(d, Fraction(2 * x + 1))
    l1 = (trace + sqrt_d) * half
    l2 = (trace - sqrt_d) * half

    if parity == "even":
        index = 2 * k
        top_a = l2 * x - (2 * x * x + x)
        bot_a = l1 * x - (2 * x * x + x)
        coeff_a = (top_a / (-sqrt_d), bot_a / sqrt_d)
        top_b = l2 - (x + 1)
        bot_b = l1 - (x + 1)
        coeff_b = (top_b / (-sqrt_d), bot_b / sqrt_d)
    else:
        index = 2 * k - 1
        den1 = l1 * l2 - l1 * l1
        den2 = l1 * l2 - l2 * l2
        coeff_a = (
            (l2 * (2 * x) - (4 * x * x + x)) / den1,
            (l1 * (2 * x) - (4 * x * x + x)) / den2,
        )
        coeff_b = ((l2 - (2 * x + 1)) / den1, (l1 - (2 * x + 1)) / den2)

    l1_k = l1 ** k
    l2_k = l2 ** k
    out = []
    for c1, c2 in (coeff_a, coeff_b):
        value = c1 * l1_k + c2 * l2_k
        if value.b != 0:
            raise IdentityViolation(
                f"closed form produced an irrational value at x={x}, {parity}, k={k}"
            )
        out.append(value.a)
    a_val, b_val = out

    table = ab_polynomials(1, index)
    if a_val != table.A[index](x) or b_val != table.B[index](x):
        raise IdentityViolation(
            f"closed form disagrees with the recurrence at x={x}, {parity}, k={k}"
        )
    if a_val.denominator != 1 or b_val.denominator != 1:
        raise IdentityViolation("closed form produced a non-integer value")
    return a_val, b_val
