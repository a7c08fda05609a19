import random
import time
from fractions import Fraction

import pytest

from eisenpq.boundary import boundary_symbol_sum
from eisenpq.eisenstein import SymbolSum, eisenstein_element
from eisenpq.errors import LevelMismatch
from eisenpq.homology import (build_presentation, coordinate_boundary, expected_dimension, genus_data,
                              reduce, winding_element, winding_metadata)
from eisenpq.mat2 import R, S
from eisenpq.p1 import Level, act, enumerate_points


def test_genus_oracle():
    assert genus_data(Level(3, 5))["genus"] == 1
    assert genus_data(Level(3, 7))["genus"] == 1
    assert genus_data(Level(5, 7))["genus"] == 3
    assert genus_data(Level(3, 11))["genus"] == 3
    assert genus_data(Level(7, 11))["genus"] == 7


@pytest.mark.parametrize("p,q,dim", [(3, 5, 5), (3, 7, 5), (3, 11, 9), (5, 7, 9), (7, 11, 17)])
def test_dimensions(p, q, dim):
    level = Level(p, q)
    pres = build_presentation(level)
    assert pres.dimension == dim == expected_dimension(level)


def test_reduce_kills_relations_and_is_linear(level):
    pres = build_presentation(level)
    rng = random.Random(8)
    pts = enumerate_points(level)
    for _ in range(60):
        g = rng.choice(pts)
        gr = act(g, R, level)
        assert not any(reduce(SymbolSum(level, {g: 1}).add(act(g, S, level), 1), pres))
        assert not any(reduce(SymbolSum(level, {g: 1}).add(gr, 1).add(act(gr, R, level), 1), pres))
        X = SymbolSum(level, {rng.choice(pts): rng.randint(-3, 3) for _ in range(4)})
        Y = SymbolSum(level, {rng.choice(pts): rng.randint(-3, 3) for _ in range(4)})
        a, b = Fraction(rng.randint(-4, 4), 3), rng.randint(-4, 4)
        lhs = reduce(a * X + b * Y, pres)
        rhs = tuple(a * x + b * y for x, y in zip(reduce(X, pres), reduce(Y, pres)))
        assert lhs == rhs


def test_reduce_level_mismatch():
    with pytest.raises(LevelMismatch):
        reduce(SymbolSum(Level(3, 7)), build_presentation(Level(3, 5)))


def test_reduce_commutes_with_boundary(level):
    pres = build_presentation(level)
    for n in (level.p, level.q, level.pq):
        X = eisenstein_element(n, level)
        assert coordinate_boundary(reduce(X, pres), pres) == boundary_symbol_sum(X)


def test_winding(level):
    W = winding_element(level)
    assert boundary_symbol_sum(W).is_zero()
    pres = build_presentation(level)
    assert coordinate_boundary(reduce(W, pres), pres).is_zero()


def test_winding_metadata():
    assert winding_metadata(Level(3, 5)) == {"nu": 2, "n": 7}


def test_build_time_pq35():
    build_presentation.cache_clear()
    t = time.perf_counter()
    build_presentation(Level(5, 7))
    assert time.perf_counter() - t < 60
