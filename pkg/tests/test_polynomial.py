from fractions import Fraction
from math import comb

import pytest
from hypothesis import assume, given, settings, strategies as st

from lieweyl.polynomial import (
    CompatibilityError,
    Poly,
    binomial_poly,
    divide_by_falling_factorials,
    falling_factorial,
    format_poly,
    is_compatible,
)

a1, a2, a3 = Poly.var(0), Poly.var(1), Poly.var(2)

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, nvars=3, max_terms=4, max_deg=3):
    out = Poly()
    for _ in range(draw(st.integers(0, max_terms))):
        term = Poly.const(draw(coeffs))
        for v in range(nvars):
            term = term * Poly.var(v) ** draw(st.integers(0, max_deg))
        out = out + term
    return out


def test_ring_examples():
    assert (a1 + 1) * (a1 - 1) == a1 * a1 - 1
    assert (a1 * a1).substitute(0, a1 - 2) == a1 * a1 - 4 * a1 + 4
    assert (a1 * a1).shift(0, -2) == a1 * a1 - 4 * a1 + 4
    half = (a1 * (a1 - 1)) / 2
    assert half.substitute(0, 3) == 3
    assert half.evaluate([3]) == 3


def test_binomial_examples():
    assert binomial_poly(a1, 0) == 1
    assert binomial_poly(a1, 2) == (a1 * a1 - a1) / 2
    assert binomial_poly(a1, 1).evaluate([5]) == 5


@given(st.integers(0, 12), st.integers(0, 12))
def test_binomial_matches_integer_binomial(m, c):
    assert binomial_poly(a1, c).evaluate([m]) == comb(m, c)


@given(st.integers(-3, 3), st.integers(0, 12), st.integers(0, 6))
def test_binomial_of_shifted_argument(shift, m, c):
    value = binomial_poly(a1 + shift, c).evaluate([m])
    top = m + shift
    expected = Fraction(1)
    for i in range(c):
        expected *= top - i
    for i in range(1, c + 1):
        expected /= i
    assert value == expected


def test_divide_examples():
    assert divide_by_falling_factorials(a1 * (a1 - 1), (2, 0)) == 1
    p = 3 * Poly.var(3) * Poly.var(4) ** 2 - 3 * Poly.var(3) * Poly.var(4)
    # b_4 = 1 and b_5 = 2: divide by a_4 * a_5 (a_5 - 1)
    assert divide_by_falling_factorials(p, (0, 0, 0, 1, 2)) == 3
    # only b_4 = b_5 = 1
    assert divide_by_falling_factorials(p, (0, 0, 0, 1, 1)) == 3 * Poly.var(4) - 3
    with pytest.raises(CompatibilityError):
        divide_by_falling_factorials(a1, (2, 0))
    assert not is_compatible(a1, (2,))
    assert is_compatible(a1, (1,))


def test_negative_shifts_impose_nothing():
    assert divide_by_falling_factorials(a1 + 7, (-3, 0)) == a1 + 7
    assert is_compatible(Poly.const(5), (-1, -2))


@settings(max_examples=150, deadline=None)
@given(polys(), st.lists(st.integers(-2, 3), min_size=3, max_size=3))
def test_product_with_falling_factorials_is_compatible(q, b):
    p = q
    for k, bk in enumerate(b):
        if bk > 0:
            p = p * falling_factorial(k, bk)
    assert is_compatible(p, b)
    assert divide_by_falling_factorials(p, b) == q


@settings(max_examples=150, deadline=None)
@given(polys(nvars=1), st.integers(1, 3))
def test_missing_root_is_detected(q, b):
    assume(not q.is_zero())
    # drop one linear factor: (a - b + 1) is not a factor of the product any more
    p = q * falling_factorial(0, b - 1)
    if is_compatible(p, (b,)):
        # q itself vanishes at a = b - 1
        assert q.evaluate([b - 1]) == 0
    else:
        with pytest.raises(CompatibilityError):
            divide_by_falling_factorials(p, (b,))


@settings(max_examples=150, deadline=None)
@given(polys(), st.lists(st.integers(-2, 2), min_size=3, max_size=3), st.integers(0, 2), st.integers(0, 3))
def test_compatibility_stable_under_shift_and_binomial(q, b, j, c):
    p = q
    for k, bk in enumerate(b):
        if bk > 0:
            p = p * falling_factorial(k, bk)
    assert is_compatible(p, b)
    moved = binomial_poly(Poly.var(j), c) * p.shift(j, -c)
    b2 = list(b)
    b2[j] += c
    assert is_compatible(moved, b2)


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == Poly()


@settings(max_examples=100, deadline=None)
@given(polys(), st.lists(st.integers(-4, 6), min_size=3, max_size=3))
def test_evaluate_is_a_ring_map(p, point):
    q = p * p + p
    assert q.evaluate(point) == p.evaluate(point) ** 2 + p.evaluate(point)


def test_format_poly():
    p = 9 * Poly.var(3) ** 2 * Poly.var(4) ** 2 - 9 * Poly.var(3) * Poly.var(4) ** 2 - 9 * Poly.var(3) ** 2 * Poly.var(4) + 9 * Poly.var(3) * Poly.var(4)
    assert format_poly(p, latex=True) == "9a_{4}^{2}a_{5}^{2}-9a_{4}a_{5}^{2}-9a_{4}^{2}a_{5}+9a_{4}a_{5}"
    assert format_poly(Poly(), latex=True) == "0"
    assert format_poly(a1 / 3 - 1, latex=False) == "1/3*a_1-1"
