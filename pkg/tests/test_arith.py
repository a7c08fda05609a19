from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from eisenpq.arith import (bernoulli1, crt, dedekind, dedekind_sum, dedekind_sum_fast, egcd,
                           inverse_mod, is_prime)
from eisenpq.errors import DegenerateInput, NotCoprime


def test_examples():
    assert dedekind_sum(0, 7) == 0
    assert dedekind_sum(1, 3) == Fraction(1, 18)
    assert dedekind_sum(1, 15) == Fraction(91, 90)
    assert dedekind_sum_fast(1, 3) == Fraction(1, 18)
    assert dedekind_sum_fast(2, 3) == Fraction(-1, 18)
    assert dedekind_sum_fast(1, 1) == 0


def test_closed_form_for_u_equal_one():
    for v in range(1, 60):
        assert dedekind_sum(1, v) == Fraction((v - 1) * (v - 2), 12 * v)


def test_errors():
    with pytest.raises(NotCoprime):
        dedekind_sum_fast(2, 4)
    with pytest.raises(DegenerateInput):
        dedekind_sum(1, 0)
    with pytest.raises(DegenerateInput):
        egcd(0, 0)
    with pytest.raises(NotCoprime):
        inverse_mod(3, 15)


def test_bernoulli1():
    assert bernoulli1(0) == 0 and bernoulli1(3) == 0
    assert bernoulli1(Fraction(1, 4)) == Fraction(-1, 4)
    assert bernoulli1(Fraction(-1, 4)) == Fraction(1, 4)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_egcd(a, b):
    if a == 0 and b == 0:
        return
    g, u, v = egcd(a, b)
    assert g == gcd(a, b) and a * u + b * v == g


@given(st.integers(0, 10**4), st.integers(0, 10**4))
def test_crt(a, b):
    x = crt([a % 9, b % 35], [9, 35])
    assert x % 9 == a % 9 and x % 35 == b % 35 and 0 <= x < 315


@given(st.integers(1, 400), st.integers(-2000, 2000))
def test_general_dedekind_matches_bruteforce(v, u):
    assert dedekind(u, v) == dedekind_sum(u, v)


@given(st.integers(1, 5000), st.integers(1, 5000))
def test_reciprocity(u, v):
    if gcd(u, v) != 1:
        return
    lhs = dedekind_sum_fast(u, v) + dedekind_sum_fast(v, u)
    assert lhs == Fraction(-1, 4) + Fraction(u * u + v * v + 1, 12 * u * v)


@given(st.integers(-500, 500), st.integers(1, 200))
def test_odd_and_periodic(u, v):
    assert dedekind(-u, v) == -dedekind(u, v)
    assert dedekind(u + 7 * v, v) == dedekind(u, v)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
