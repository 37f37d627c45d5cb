"""Generalized continued fractions: recurrences, transforms, and expansions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geomcf import (
    BigFloat,
    GCFSpec,
    QuadraticSurd,
    backward_value,
    convergents,
    detect_period,
    determinant,
    equivalence_transform,
    eval_gcf_numeric,
    rational_simple_cf,
    real_simple_cf,
    surd_simple_cf,
)
from geomcf.errors import DomainError, PrecisionInsufficient, SingularEvaluation

# small generalized CFs with nonzero integer terms
gcf_terms = st.lists(
    st.tuples(st.integers(1, 6), st.integers(1, 6)), min_size=2, max_size=8
)


def _spec(b0, terms):
    return GCFSpec.from_sequences(b0, [a for a, _ in terms], [b for _, b in terms])


def test_from_sequences_term_access():
    cf = GCFSpec.from_sequences(7, [1, 2], [3, 4])
    assert cf.b0 == 7
    assert cf.term(1) == (1, 3)
    assert cf.term(2) == (2, 4)
    with pytest.raises(DomainError):
        cf.term(3)
    with pytest.raises(DomainError):
        cf.term(0)


def test_convergents_of_the_golden_cf_are_fibonacci_ratios():
    cf = GCFSpec.from_sequences(1, [1] * 9, [1] * 9)
    got = [c.value() for c in convergents(cf, 6)]
    assert got == [
        Fraction(1), Fraction(2), Fraction(3, 2),
        Fraction(5, 3), Fraction(8, 5), Fraction(13, 8),
    ]


@given(st.integers(0, 5), gcf_terms)
def test_determinant_identity(b0, terms):
    cf = _spec(b0, terms)
    convs = convergents(cf, len(terms) + 1)
    prod = 1
    for j in range(1, len(convs)):
        prod *= terms[j - 1][0]
        expected = prod if (j - 1) % 2 == 0 else -prod
        assert determinant(convs[j - 1], convs[j]) == expected


def test_determinant_requires_consecutive_convergents():
    cf = GCFSpec.from_sequences(1, [1] * 5, [1] * 5)
    convs = convergents(cf, 4)
    with pytest.raises(DomainError):
        determinant(convs[0], convs[2])


@given(
    st.integers(0, 5),
    gcf_terms,
    st.lists(
        st.fractions(min_value=Fraction(-3), max_value=Fraction(3), max_denominator=4)
        .filter(lambda q: q != 0),
        min_size=8,
        max_size=8,
    ),
)
@settings(max_examples=60)
def test_equivalence_transform_preserves_convergent_values(b0, terms, scales):
    cf = _spec(b0, terms)
    table = {0: Fraction(1)}
    for j, r in enumerate(scales, start=1):
        table[j] = r
    transformed = equivalence_transform(cf, lambda j: table[j])
    n = len(terms) + 1
    before = [c.value() for c in convergents(cf, n)]
    after = [c.value() for c in convergents(transformed, n)]
    assert before == after


def test_equivalence_transform_term_structure():
    cf = GCFSpec.from_sequences(2, [3, 5, 7], [1, 2, 3])
    r = {0: Fraction(1), 1: Fraction(2), 2: Fraction(1, 3), 3: Fraction(-1)}
    out = equivalence_transform(cf, lambda j: r[j])
    assert out.b0 == 2
    for j in range(1, 4):
        a, b = cf.term(j)
        ta, tb = out.term(j)
        assert ta == r[j - 1] * r[j] * a
        assert tb == r[j] * b


def test_equivalence_transform_rejects_scaled_head():
    cf = GCFSpec.from_sequences(1, [1, 1], [1, 1])
    with pytest.raises(DomainError):
        equivalence_transform(cf, lambda j: Fraction(2))


def test_equivalence_transform_rejects_zero_scale_when_used():
    cf = GCFSpec.from_sequences(1, [1, 1, 1], [1, 1, 1])
    out = equivalence_transform(cf, lambda j: Fraction(1) if j < 2 else Fraction(0))
    out.term(1)
    with pytest.raises(DomainError):
        out.term(2)


def test_backward_value_matches_exact_convergent():
    cf = GCFSpec.from_sequences(1, [2, 3, 4, 5], [1, 2, 3, 4])
    exact = convergents(cf, 5)[4].value()
    approx = backward_value(cf, 4, 128)
    assert abs(approx - exact) < BigFloat.pow2(-100, 128)


def test_backward_value_reports_singular_level():
    cf = GCFSpec.from_sequences(0, [1, 1, 1], [0, 0, 0])
    with pytest.raises(SingularEvaluation) as exc:
        backward_value(cf, 2, 64)
    assert isinstance(exc.value.level, int)


def test_eval_gcf_numeric_bound_tracks_the_true_error():
    cf = GCFSpec.from_sequences(1, [1] * 50, [1] * 50)
    ev = eval_gcf_numeric(cf, 40, 128)
    golden = BigFloat.from_surd(1, 5, 2, 128)
    err = abs(ev.value - golden)
    # the depth-to-depth movement is a proxy: same order as the true error
    assert err <= ev.bound * 2
    assert ev.bound <= BigFloat.pow2(-50, 128)
    assert ev.depth == 40


# -- simple continued fraction expansions -------------------------------------


def test_sqrt2_expansion():
    e = surd_simple_cf(QuadraticSurd(0, 2, 1), 12)
    assert e.preperiod == 1 and e.period == 1
    assert e.terms == (1, 2)  # stored terms stop once the cycle is proven
    assert e.exact and e.is_periodic
    assert [e.quotient(i) for i in range(6)] == [1, 2, 2, 2, 2, 2]


def test_golden_expansion_is_all_ones():
    e = surd_simple_cf(QuadraticSurd(1, 5, 2), 12)
    assert e.preperiod == 0 and e.period == 1
    assert e.terms == (1,)


def test_sqrt3_expansion_has_period_two():
    e = surd_simple_cf(QuadraticSurd(0, 3, 1), 16)
    assert e.preperiod == 1 and e.period == 2
    assert e.terms == (1, 1, 2)


def test_sqrt7_expansion_has_period_four():
    e = surd_simple_cf(QuadraticSurd(0, 7, 1), 20)
    assert (e.preperiod, e.period) == (1, 4)
    assert e.terms == (2, 1, 1, 1, 4)


@given(st.integers(2, 120))
@settings(max_examples=40)
def test_surd_expansion_convergents_bracket_the_value(d):
    import math

    if math.isqrt(d) ** 2 == d:
        return
    u = QuadraticSurd(0, d, 1)
    e = surd_simple_cf(u, 12)
    fracs = e.convergent_fractions(min(6, len(e.terms)))
    for i, q in enumerate(fracs):
        cmp = u.compare_rational(q)
        assert cmp == (1 if i % 2 == 0 else -1)  # below, above, below, ...


def test_rational_expansion_terminates():
    e = rational_simple_cf(Fraction(7, 3))
    assert e.terms == (2, 3)
    e2 = rational_simple_cf(Fraction(-7, 3))
    assert e2.terms == (-3, 1, 2)


@given(st.fractions(min_value=-50, max_value=50, max_denominator=40))
def test_rational_expansion_reconstructs(q):
    e = rational_simple_cf(q)
    value = Fraction(e.terms[-1])
    for a in reversed(e.terms[:-1]):
        value = a + 1 / value
    assert value == q


def test_real_expansion_of_golden_is_validated_ones():
    e = real_simple_cf(lambda bits: BigFloat.from_surd(1, 5, 2, bits), 128, 40)
    assert not e.exact
    assert e.validated == len(e.terms)
    assert set(e.terms) == {1}
    assert len(e.terms) == 40


def test_real_expansion_validated_prefix_grows_with_precision():
    def producer(bits):
        return BigFloat.sqrt_int(2, bits)

    low = real_simple_cf(producer, 64, 200)
    high = real_simple_cf(producer, 256, 200)
    assert low.validated <= high.validated
    assert high.terms[: low.validated] == low.terms


def test_real_expansion_rational_passthrough_is_exact():
    e = real_simple_cf(lambda bits: Fraction(7, 3), 64, 10)
    assert e.exact and e.terms == (2, 3)


def test_real_expansion_rejects_tiny_precision():
    with pytest.raises(DomainError):
        real_simple_cf(lambda bits: Fraction(1), 8, 10)


def test_detect_period_plain_cycle():
    assert detect_period([1, 2, 3] * 4) == (0, 3)


def test_detect_period_with_preperiod():
    assert detect_period([9, 1, 2, 1, 2, 1, 2, 1, 2]) == (1, 2)


def test_detect_period_finds_smallest():
    assert detect_period([5, 5, 5, 5, 5, 5, 5, 5]) == (0, 1)


def test_detect_period_rejects_aperiodic_and_short_evidence():
    assert detect_period([1, 2, 4, 8, 16, 32, 64, 128]) is None
    assert detect_period([1, 2]) is None
    # one full repeat only: not enough evidence
    assert detect_period([1, 2, 3, 4, 1, 2, 3, 4], min_repeats=3) is None


@given(
    st.lists(st.integers(1, 5), min_size=1, max_size=4),
    st.integers(3, 6),
)
def test_detect_period_consistency(block, repeats):
    terms = block * repeats
    found = detect_period(terms)
    if found is None:
        return
    pre, per = found
    # the reported period must actually tile the tail
    for i in range(pre, len(terms) - per):
        assert terms[i] == terms[i + per]
