import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eisenpq.errors import DegenerateInput, NotConjugable, NotInstantiable
from eisenpq.mat2 import (IDENTITY, INFINITY, T, Mat2, build_exceptional_pair, h_conjugate, in_gamma,
                          membership, random_gamma_element, s_of, t_of)
from eisenpq.p1 import Level

L15 = Level(3, 5)


def test_determinant_enforced():
    with pytest.raises(DegenerateInput):
        Mat2(1, 1, 1, 1)


def test_membership_examples():
    assert membership(Mat2(1, 0, 15, 1), "Gamma0", 15)
    assert not membership(T, "Gamma2")
    assert membership(Mat2(181, -26, -1260, 181), "GammaIntersection", 15)


def test_apply():
    assert Mat2(1, 0, 3, 1).apply(0) == 0
    assert Mat2(1, 0, 3, 1).apply(INFINITY) == Fraction(1, 3)
    assert T.apply(INFINITY) == INFINITY


def test_h_conjugate_examples():
    assert h_conjugate(IDENTITY) == IDENTITY
    # (b + d - a - c)/2 = 617; an entry of 824 would give determinant 522641
    assert h_conjugate(Mat2(181, -26, -1260, 181)) == Mat2(-1079, 617, -2520, 1441)
    assert h_conjugate(Mat2(1, -2, 0, 1)) == Mat2(1, -1, 0, 1)
    with pytest.raises(NotConjugable):
        h_conjugate(T)


def test_h_conjugate_is_homomorphism(level):
    rng = random.Random(9)
    for _ in range(100):
        a = random_gamma_element(level, 5, rng)
        b = random_gamma_element(level, 5, rng)
        assert h_conjugate(a @ b) == h_conjugate(a) @ h_conjugate(b)


def test_exceptional_pair_example():
    pair = build_exceptional_pair(5, 1, L15)
    assert pair.gamma1 == Mat2(181, -26, -1260, 181)
    assert pair.gamma2 == Mat2(49, -10, -240, 49)
    assert (pair.s, pair.l, pair.s_prime, pair.l_prime) == (3, 13, 4, 5)
    assert pair.gamma1.apply(Fraction(1, 7)) == Fraction(-1, 7)
    assert pair.gamma2.apply(Fraction(1, 5)) == Fraction(-1, 5)


def test_not_instantiable():
    with pytest.raises(NotInstantiable) as exc:
        build_exceptional_pair(3, 1, L15)
    assert exc.value.gcd == 5 and exc.value.which == "gamma1"


def _pairs(level):
    for x in (level.p, level.q):
        for k in range(1, 2 * level.pq):
            try:
                yield build_exceptional_pair(x, k, level)
            except NotInstantiable:
                pass


def test_exceptional_pair_invariants(level):
    n = level.pq
    count = 0
    for pr in _pairs(level):
        count += 1
        m = pr.s_k * pr.x
        assert pr.s_k % 2 == 1
        assert pr.l * (m + 2) - 2 * pr.s * n == 1
        assert pr.l_prime * m - 2 * pr.s_prime * (n // pr.x) == 1
        assert in_gamma(pr.gamma1, level) and in_gamma(pr.gamma2, level)
        assert s_of(pr.gamma1) == 1 - 4 * pr.s * n * (1 + m)
        assert t_of(pr.gamma1) == -2 * (pr.l - 2 * pr.s * (m + 2) * n)
        assert s_of(pr.gamma2) == 1 - 4 * pr.s_prime * n * pr.s_k + 4 * pr.s_prime * (n // pr.x)
        assert t_of(pr.gamma2) == -2 * (pr.l_prime - 2 * pr.s_prime * pr.s_k * n)
    assert count > 0


@settings(max_examples=60)
@given(st.integers(1, 60), st.integers(-3, 3))
def test_shifted_witnesses_still_valid(k, shift):
    try:
        pr = build_exceptional_pair(5, k, L15, shift=shift)
    except NotInstantiable:
        return
    u = Fraction(1, pr.s_k * 5 + 2)
    assert pr.gamma1.apply(u) == -u
