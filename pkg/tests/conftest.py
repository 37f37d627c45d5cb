"""Shared hypothesis strategies for the exact-arithmetic test suite."""

from fractions import Fraction
from math import isqrt

from hypothesis import strategies as st

from geomcf import Polynomial, QuadraticSurd

small_ints = st.integers(-9, 9)

coeff_lists = st.lists(small_ints, min_size=0, max_size=6)

polynomials = coeff_lists.map(Polynomial)

nonzero_fractions = st.fractions(
    min_value=Fraction(-5), max_value=Fraction(5), max_denominator=6
).filter(lambda q: q != 0)


def _nonsquare(n: int) -> int:
    """Smallest non-square integer >= n (n >= 2)."""
    while isqrt(n) ** 2 == n:
        n += 1
    return n


nonsquare_discriminants = st.integers(2, 400).map(_nonsquare)

surds = st.builds(
    QuadraticSurd,
    st.integers(-20, 20),
    nonsquare_discriminants,
    st.integers(-12, 12).filter(lambda q: q != 0),
)
