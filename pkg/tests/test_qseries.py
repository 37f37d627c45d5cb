"""Tests for the formal power-series limits of the polynomial continued fraction."""

import pytest
from hypothesis import given, settings, strategies as st

from geomcf.errors import DomainError
from geomcf.polynomial import Polynomial, X, poly_gcd
from geomcf.qseries import (
    OEIS_TAGS,
    SELECTORS,
    auluck_series,
    coprimality_witness,
    ramanujan_series,
    stabilization_report,
    truncation_rational,
    truncation_table,
)

ONE = Polynomial.one()


# -- truncations as rational functions ------------------------------------------


def test_first_truncations():
    assert truncation_rational(1) == (ONE, ONE)
    assert truncation_rational(2) == (X + 1, X)
    assert truncation_rational(3) == (X + 2, X + 1)
    assert truncation_rational(4) == (
        Polynomial((1, 1, 2, 1)),
        Polynomial((0, 1, 1, 1)),
    )
    assert truncation_rational(5) == (
        Polynomial((3, 2, 2, 1)),
        Polynomial((1, 2, 1, 1)),
    )
    assert truncation_rational(6) == (
        Polynomial((1, 1, 2, 4, 2, 2, 1)),
        Polynomial((0, 1, 1, 2, 2, 1, 1)),
    )
    assert truncation_rational(7) == (
        Polynomial((4, 3, 4, 5, 2, 2, 1)),
        Polynomial((1, 3, 2, 3, 2, 1, 1)),
    )


def test_truncation_continuant_recurrence():
    # p_k = b_k p_{k-1} + p_{k-2} where the partial denominators alternate
    # between 1 and the growing powers 1, x^2, 1, x^3, 1, x^4, ...
    pairs = truncation_table(12)
    num = [p for p, _ in pairs]
    den = [q for _, q in pairs]
    b = lambda i: X ** ((i + 1) // 2) if i % 2 else ONE  # noqa: E731
    for i in range(3, 12):
        assert num[i] == b(i) * num[i - 1] + num[i - 2]
        assert den[i] == b(i) * den[i - 1] + den[i - 2]


def test_truncation_table_matches_single_calls():
    table = truncation_table(8)
    assert len(table) == 8
    assert table[4] == truncation_rational(5)


@given(st.integers(1, 16))
@settings(max_examples=24)
def test_truncations_are_coprime(k):
    p, q = truncation_rational(k)
    assert poly_gcd(p, q).degree == 0
    assert coprimality_witness(k)


def test_truncation_rejects_nonpositive_index():
    with pytest.raises(DomainError):
        truncation_rational(0)


# -- classical partition-like series ---------------------------------------------


def test_auluck_series_prefix():
    s = auluck_series(14)
    assert [s[i] for i in range(14)] == [0, 1, 1, 2, 3, 5, 8, 12, 18, 26, 38, 53, 75, 103]


def test_ramanujan_series_prefix():
    s = ramanujan_series(14)
    assert [s[i] for i in range(14)] == [0, 1, 2, 4, 6, 10, 15, 23, 33, 49, 69, 98, 136, 188]


# -- stabilization ----------------------------------------------------------------


def test_selector_catalogue():
    assert SELECTORS == ("D-all", "N-odd", "D-odd-reversed")
    assert OEIS_TAGS == {
        "D-all": "A001524",
        "N-odd": "A143184",
        "D-odd-reversed": "A005576",
    }


@pytest.mark.parametrize("selector", ["D-all", "N-odd"])
def test_targeted_rows_stabilize_one_degree_per_step(selector):
    rep = stabilization_report(selector, 24, 30)
    assert rep.catalogue_tag == OEIS_TAGS[selector]
    assert rep.nondecreasing
    agreements = [row.agreement for row in rep.rows]
    assert agreements == list(range(2, 14))
    assert max(agreements) >= 10


def test_reversed_denominators_stabilize_against_each_other():
    rep = stabilization_report("D-odd-reversed", 24, 30)
    assert rep.catalogue_tag == OEIS_TAGS["D-odd-reversed"]
    assert rep.nondecreasing
    assert [row.agreement for row in rep.rows] == list(range(2, 13))


def test_stabilized_coefficients_are_consistent_across_kmax():
    small = stabilization_report("D-all", 12, 30)
    large = stabilization_report("D-all", 24, 30)
    for row_s, row_l in zip(small.rows, large.rows):
        assert row_s.k == row_l.k
        assert row_s.coefficients == row_l.coefficients


def test_stabilization_rejects_bad_arguments():
    with pytest.raises(DomainError):
        stabilization_report("nope", 10, 20)
    with pytest.raises(DomainError):
        stabilization_report("D-all", 1, 20)
