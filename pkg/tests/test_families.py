"""Tests for the interlaced-geometric family builders and their identities."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from geomcf.errors import DomainError, UnsupportedFamily
from geomcf.families import (
    GF_KINDS,
    InterlaceParams,
    ab_polynomials,
    characteristic_form,
    check_identity,
    check_identity_suite,
    convergence_certificate,
    convergents,
    fibonacci_analogy_check,
    fibonacci_polynomial,
    gf_check,
    identity_names,
    interlace_scale_sequence,
    limit_root,
    make_interlaced,
    make_tilde,
    reference_rows,
    tilde_polynomial_spec,
)
from geomcf.polynomial import Polynomial, X
from geomcf.surd import QuadraticSurd

FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377]


# -- reference table -----------------------------------------------------------


def test_reference_rows_match_the_recurrence_seeds():
    rows = reference_rows()
    assert len(rows) == 11
    seq = ab_polynomials(1, 10)
    for j, (a_ref, b_ref) in enumerate(rows):
        assert a_ref == seq.A[j]
        assert b_ref == seq.B[j]


def test_reference_rows_first_entries():
    rows = reference_rows()
    assert rows[0] == (X, Polynomial.one())
    assert rows[1] == (2 * X, Polynomial.one())
    assert rows[2] == (2 * X * X + X, X + 1)


# -- numerator/denominator polynomial tables -----------------------------------


@pytest.mark.parametrize("s", [1, 2, 3, 5])
def test_ab_seeds(s):
    seq = ab_polynomials(s, 3)
    assert seq.A[0] == X
    assert seq.A[1] == (s + 1) * X
    assert seq.A[2] == ((s + 1) * X + 1) * X
    assert seq.A[3] == X * Polynomial(((0, (s + 1) ** 2))) + s * X
    assert seq.B[0] == Polynomial.one()
    assert seq.B[1] == Polynomial.const(s)
    assert seq.B[2] == s * X + 1
    assert seq.B[3] == s * ((s + 1) * X + 1)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_ab_degrees_and_positivity(s):
    seq = ab_polynomials(s, 21)
    for j, p in enumerate(seq.A):
        k = j // 2
        assert p.degree == k + 1
        assert all(c >= 0 for c in p.coeffs)
    for j, q in enumerate(seq.B):
        k = j // 2
        assert q.degree == k
        assert all(c >= 0 for c in q.coeffs)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_ab_four_step_recurrence(s):
    seq = ab_polynomials(s, 16)
    step = (s + 1) * X + 1
    for j in range(4, 17):
        assert seq.A[j] == step * seq.A[j - 2] - X * seq.A[j - 4]
        assert seq.B[j] == step * seq.B[j - 2] - X * seq.B[j - 4]


def test_ab_rejects_bad_arguments():
    with pytest.raises(DomainError):
        ab_polynomials(0, 4)
    with pytest.raises(DomainError):
        ab_polynomials(1, -1)


# -- family constructors --------------------------------------------------------


def test_interlaced_quotients_are_geometric():
    cf = make_interlaced(InterlaceParams(x=2, s=1))
    assert cf.b0 == 2
    assert [cf.partial_num(j) for j in range(1, 5)] == [1, 1, 1, 1]
    assert [cf.partial_den(j) for j in range(1, 7)] == [
        Fraction(1, 2),
        Fraction(4),
        Fraction(1, 4),
        Fraction(8),
        Fraction(1, 8),
        Fraction(16),
    ]


def test_tilde_form_has_integer_terms():
    cf = make_tilde(InterlaceParams(x=2, s=3))
    assert cf.b0 == 2
    assert [cf.partial_num(j) for j in range(1, 5)] == [2, 1, 2, 1]
    assert [cf.partial_den(j) for j in range(1, 5)] == [3, 2, 3, 2]


def test_tilde_and_raw_forms_share_every_convergent_value():
    for x, s in [(1, 1), (2, 1), (2, 2), (3, 2)]:
        raw = convergents(make_interlaced(InterlaceParams(x=x, s=s)), 12)
        til = convergents(make_tilde(InterlaceParams(x=x, s=s)), 12)
        for u, v in zip(raw, til):
            assert Fraction(u.A) / Fraction(u.B) == Fraction(v.A) / Fraction(v.B)


def test_scale_sequence_generates_the_tilde_form():
    x = 3
    r = interlace_scale_sequence(x)
    assert r(0) == 1
    raw = make_interlaced(InterlaceParams(x=x, s=2))
    til = make_tilde(InterlaceParams(x=x, s=2))
    for j in range(1, 10):
        assert r(j - 1) * r(j) * raw.partial_num(j) == til.partial_num(j)
        assert r(j) * raw.partial_den(j) == til.partial_den(j)


def test_two_base_progression_family():
    cf = make_interlaced(InterlaceParams(x=1, s=1, bases=(2, 3)))
    assert cf.b0 == 2
    assert [cf.partial_num(j) for j in range(1, 7)] == [1] * 6
    assert [cf.partial_den(j) for j in range(1, 7)] == [3, 4, 9, 8, 27, 16]


def test_progression_family_has_no_tilde_form():
    with pytest.raises(UnsupportedFamily):
        make_tilde(InterlaceParams(x=1, s=1, bases=(2, 3)))


def test_family_parameter_validation():
    with pytest.raises(DomainError):
        make_interlaced(InterlaceParams(x=0))
    with pytest.raises(DomainError):
        make_interlaced(InterlaceParams(x=1, s=0))
    with pytest.raises(DomainError):
        make_interlaced(InterlaceParams(x=2, s=1, bases=(2,)))


def test_polynomial_tilde_spec():
    cf = tilde_polynomial_spec(2)
    assert cf.b0 == X
    assert [cf.partial_num(j) for j in range(1, 5)] == [X, Polynomial.one(), X, Polynomial.one()]
    assert [cf.partial_den(j) for j in range(1, 5)] == [
        Polynomial.const(2),
        X,
        Polynomial.const(2),
        X,
    ]


def test_polynomial_spec_convergents_reproduce_the_table():
    cf = tilde_polynomial_spec(1)
    cv = convergents(cf, 11)
    rows = reference_rows()
    for c, (a_ref, b_ref) in zip(cv, rows):
        # seeds are plain scalars, so normalise through the ring product
        assert Polynomial.one() * c.A == a_ref
        assert Polynomial.one() * c.B == b_ref


# -- limits ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "x,s,triple",
    [(1, 1, (1, 5, 2)), (2, 1, (3, 17, 2)), (2, 2, (5, 41, 4)), (3, 1, (5, 37, 2))],
)
def test_limit_root_known_values(x, s, triple):
    u = limit_root(x, s)
    assert (u.P, u.D, u.Q) == triple


@given(st.integers(1, 9), st.integers(1, 5))
@settings(max_examples=30)
def test_limit_root_satisfies_its_quadratic(x, s):
    u = limit_root(x, s)
    e = u.to_field()
    # s*u^2 - ((s+1)x - 1)*u - x == 0
    lhs = e * e * Fraction(s) - e * Fraction((s + 1) * x - 1)
    assert lhs == type(e).rational(u.D, Fraction(x))


@given(st.integers(1, 9), st.integers(1, 5))
@settings(max_examples=30)
def test_limit_root_lies_between_consecutive_convergents(x, s):
    cv = convergents(make_tilde(InterlaceParams(x=x, s=s)), 8)
    vals = [Fraction(c.A) / Fraction(c.B) for c in cv]
    root = limit_root(x, s)
    for even, odd in zip(vals[::2], vals[1::2]):
        assert root.compare_rational(even) > 0
        assert root.compare_rational(odd) < 0


# -- identities -------------------------------------------------------------------


def test_identity_catalogue_is_stable():
    assert identity_names() == [
        "a-odd-from-even",
        "b-odd-from-a",
        "b-even-from-a",
        "b-even-from-b",
        "half-split",
        "b-even-weighted-sum",
        "b-odd-weighted-sum",
        "a-even-gap",
        "b-even-gap",
        "a-odd-gap",
        "b-odd-gap",
        "quad-form-even",
        "quad-form-odd",
        "quad-form-even-s",
        "quad-form-odd-s",
    ]


def test_full_suite_is_clean_at_s_equal_one():
    reports = check_identity_suite(1, 30)
    assert len(reports) == 15
    for r in reports:
        assert r.expected_zero
        assert r.nonzero == (), r.name


@pytest.mark.parametrize("s", [2, 3])
def test_suite_isolates_the_two_unit_only_forms(s):
    reports = check_identity_suite(s, 12)
    assert len(reports) == 12  # unit-only identities are skipped automatically
    failing = {r.name for r in reports if r.nonzero}
    assert failing == {"quad-form-even", "quad-form-odd"}
    for r in reports:
        assert bool(r.nonzero) != r.expected_zero or not r.nonzero


def test_unit_only_identity_rejected_elsewhere():
    with pytest.raises(DomainError):
        check_identity("half-split", 2, 10)


def test_unknown_identity_name():
    with pytest.raises(DomainError):
        check_identity("nope", 1, 4)


def test_quad_form_residuals_at_s_two_are_reproducible():
    even = check_identity("quad-form-even", 2, 3)
    assert dict(even.nonzero) == {
        1: Polynomial((0, 0, 0, -1, -3)),
        2: Polynomial((0, 0, 0, -1, -8, -24, -27)),
        3: Polynomial((0, 0, 0, -1, -12, -65, -195, -324, -243)),
    }
    odd = check_identity("quad-form-odd", 2, 3)
    assert dict(odd.nonzero) == {
        1: Polynomial((0, 0, -3)),
        2: Polynomial((0, 0, 0, -6, -27)),
        3: Polynomial((0, 0, 0, -4, -42, -162, -243)),
    }


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("kind", GF_KINDS)
def test_generating_function_residuals_vanish(kind, s):
    assert gf_check(kind, s, 16).is_zero()


def test_generating_function_rejects_unknown_kind():
    with pytest.raises(DomainError):
        gf_check("C-even", 1, 8)


# -- formulas at integer arguments ------------------------------------------------


@pytest.mark.parametrize(
    "x,parity,k,expected",
    [
        (2, "even", 1, (Fraction(10), Fraction(3))),
        (1, "odd", 1, (Fraction(2), Fraction(1))),
        (1, "even", 2, (Fraction(8), Fraction(5))),
    ],
)
def test_characteristic_form_examples(x, parity, k, expected):
    assert characteristic_form(x, parity, k) == expected


@given(st.integers(1, 6), st.integers(1, 8))
@settings(max_examples=40)
def test_characteristic_form_agrees_with_the_polynomial_table(x, k):
    seq = ab_polynomials(1, 2 * k)
    even = characteristic_form(x, "even", k)
    assert even == (seq.A[2 * k].evaluate_fraction(x), seq.B[2 * k].evaluate_fraction(x))
    odd = characteristic_form(x, "odd", k)
    assert odd == (
        seq.A[2 * k - 1].evaluate_fraction(x),
        seq.B[2 * k - 1].evaluate_fraction(x),
    )


def test_characteristic_form_validates_parity():
    with pytest.raises(DomainError):
        characteristic_form(2, "sideways", 1)


# -- convergence certificates ------------------------------------------------------


def test_certificate_examples():
    c = convergence_certificate(3, 1, 2, "odd")
    assert (c.index, c.convergent, c.residual, c.above_root) == (3, Fraction(39, 7), 9, True)
    c = convergence_certificate(2, 1, 1, "even")
    assert (c.index, c.convergent, c.residual, c.above_root) == (0, Fraction(2), -4, False)
    c = convergence_certificate(1, 1, 1, "odd")
    assert c.residual == 1


@pytest.mark.parametrize("x", [2, 3])
@pytest.mark.parametrize("s", [1, 2])
def test_certificates_match_the_quadratic_form(x, s):
    cv = convergents(make_tilde(InterlaceParams(x=x, s=s)), 13)
    for k in range(1, 7):
        for side in ("odd", "even"):
            c = convergence_certificate(x, s, k, side)
            assert c.residual == c.predicted
            assert c.index == (2 * k - 1 if side == "odd" else 2 * k - 2)
            num, den = cv[c.index].A, cv[c.index].B
            assert c.convergent == Fraction(num) / Fraction(den)
            # the residual is the defining quadratic form on the raw pair
            form = s * num * num - ((s + 1) * x - 1) * num * den - x * den * den
            assert form == c.residual
            if side == "odd":
                assert c.residual == s * x**k and c.above_root
                assert limit_root(x, s).compare_rational(c.convergent) < 0
            else:
                assert c.residual == -(x ** (k + 1)) and not c.above_root
                assert limit_root(x, s).compare_rational(c.convergent) > 0


def test_certificate_validates_side():
    with pytest.raises(DomainError):
        convergence_certificate(2, 1, 1, "middle")


# -- Fibonacci analogue -------------------------------------------------------------


def test_fibonacci_polynomials():
    assert [str(fibonacci_polynomial(n)) for n in range(1, 6)] == [
        "1",
        "x",
        "x^2 + 1",
        "x^3 + 2x",
        "x^4 + 3x^2 + 1",
    ]
    for n in range(3, 12):
        assert fibonacci_polynomial(n) == X * fibonacci_polynomial(
            n - 1
        ) + fibonacci_polynomial(n - 2)
        assert fibonacci_polynomial(n)(1) == FIB[n]


def test_fibonacci_analogy_reduces_to_fibonacci_ratios_at_one():
    for n in range(1, 13):
        rep = fibonacci_analogy_check(1, n)
        assert rep.value == Fraction(FIB[n + 1], FIB[n])
        assert rep.residual == rep.predicted


@pytest.mark.parametrize("x", [1, 2, 3])
def test_fibonacci_analogy_residual_law(x):
    # convergents u_n of [x; x, x, ...] satisfy
    # u^2 - x*u - 1 = (-1)^n / f_n(x)^2 with f_n the Fibonacci polynomials
    f_prev, f_cur = 0, 1
    for n in range(1, 13):
        rep = fibonacci_analogy_check(x, n)
        assert rep.residual == rep.value * rep.value - x * rep.value - 1
        assert rep.residual == rep.predicted
        assert rep.predicted == Fraction((-1) ** n, f_cur * f_cur)
        f_prev, f_cur = f_cur, x * f_cur + f_prev


def test_fibonacci_analogy_rejects_bad_input():
    with pytest.raises(DomainError):
        fibonacci_analogy_check(0, 3)
    with pytest.raises(DomainError):
        fibonacci_analogy_check(1, 0)
