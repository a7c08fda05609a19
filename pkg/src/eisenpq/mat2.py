"""Unimodular 2x2 integer matrices, subgroup membership and special elements."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .arith import inverse_mod
from .errors import DegenerateInput, NotConjugable, NotInSubgroup, NotInstantiable
from .p1 import Level, s_parity_shift

INFINITY = "inf"


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DegenerateInput(f"determinant of {self.rows()} is not 1")

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, n: int) -> "Mat2":
        base = self if n >= 0 else self.inverse()
        out = IDENTITY
        for _ in range(abs(n)):
            out = out @ base
        return out

    def apply(self, x):
        """Exact Moebius action on Q u {inf}; ``x`` is a Fraction/int or INFINITY."""
        if x == INFINITY:
            num, den = self.a, self.c
        else:
            x = Fraction(x)
            num = self.a * x.numerator + self.b * x.denominator
            den = self.c * x.numerator + self.d * x.denominator
        if den == 0:
            return INFINITY
        return Fraction(num, den)

    def trace(self) -> int:
        return self.a + self.d


IDENTITY = Mat2(1, 0, 0, 1)
T = Mat2(1, 1, 0, 1)
S = Mat2(0, -1, 1, 0)
R = Mat2(0, -1, 1, -1)


def in_gamma0(m: Mat2, n: int) -> bool:
    return m.c % n == 0


def in_gamma2(m: Mat2) -> bool:
    return m.b % 2 == 0 and m.c % 2 == 0 and m.a % 2 == 1 and m.d % 2 == 1


def in_gamma(m: Mat2, level: Level) -> bool:
    """Membership in Gamma0(pq) & Gamma(2)."""
    return in_gamma0(m, level.pq) and in_gamma2(m)


def membership(m: Mat2, group: str, n: int | None = None) -> bool:
    """``group`` is "Gamma0" (needs n), "Gamma2" or "GammaIntersection" (needs n)."""
    if group == "Gamma0":
        return in_gamma0(m, n)
    if group == "Gamma2":
        return in_gamma2(m)
    if group == "GammaIntersection":
        return in_gamma0(m, n) and in_gamma2(m)
    raise ValueError(f"unknown group {group!r}")


def h_conjugate(g: Mat2) -> Mat2:
    """h g h^-1 with h = (1 1; 0 2)."""
    t = g.b + g.d - g.a - g.c
    if t % 2:
        raise NotConjugable(f"b + d - a - c = {t} is odd")
    return Mat2(g.a + g.c, t // 2, 2 * g.c, g.d - g.c)


def s_of(g: Mat2) -> int:
    return g.a + g.c


def t_of(g: Mat2) -> int:
    return g.b + g.d - g.a - g.c


@dataclass(frozen=True)
class ExceptionalPair:
    gamma1: Mat2
    gamma2: Mat2
    x: int
    k: int
    s_k: int
    s: int
    l: int
    s_prime: int
    l_prime: int


def build_exceptional_pair(x: int, k: int, level: Level, shift: int = 0) -> ExceptionalPair:
    """Two elements of Gamma0(pq) & Gamma(2) negating 1/(s_k x + 2) and 1/(s_k x).

    ``shift`` moves both Bezout witnesses along their solution lines; the
    default gives the least non-negative l and l'.
    """
    n = level.pq
    if x not in (level.p, level.q):
        raise DegenerateInput(f"x = {x} must be p or q")
    y = n // x
    sk = s_parity_shift(k, level)
    m = sk * x
    g1 = gcd(m + 2, 2 * n)
    if g1 != 1:
        raise NotInstantiable(f"gcd(s_k x + 2, 2pq) = gcd({m + 2}, {2 * n}) = {g1}",
                              gcd=g1, which="gamma1")
    g2 = gcd(m, 2 * y)
    if g2 != 1:
        raise NotInstantiable(f"gcd(s_k x, 2pq/x) = gcd({m}, {2 * y}) = {g2}",
                              gcd=g2, which="gamma2")
    # l (m + 2) - 2 s pq = 1
    l = inverse_mod(m + 2, 2 * n) + shift * 2 * n
    s, rem = divmod(l * (m + 2) - 1, 2 * n)
    assert rem == 0
    # l' m - 2 s' y = 1
    lp = inverse_mod(m, 2 * y) + shift * 2 * y
    sp, rem = divmod(lp * m - 1, 2 * y)
    assert rem == 0
    gamma1 = Mat2(1 + 4 * s * n, -2 * l, -4 * s * (m + 2) * n, 1 + 4 * s * n)
    gamma2 = Mat2(1 + 4 * sp * y, -2 * lp, -4 * sp * sk * n, 1 + 4 * sp * y)
    u1, u2 = Fraction(1, m + 2), Fraction(1, m)
    assert gamma1.apply(u1) == -u1 and gamma2.apply(u2) == -u2
    assert in_gamma(gamma1, level) and in_gamma(gamma2, level)
    return ExceptionalPair(gamma1, gamma2, x, k, sk, s, l, sp, lp)


def require_gamma0(m: Mat2, level: Level):
    if not in_gamma0(m, level.pq):
        raise NotInSubgroup(f"{m.rows()} is not in Gamma0({level.pq})")


def require_gamma(m: Mat2, level: Level):
    if not in_gamma(m, level):
        raise NotInSubgroup(f"{m.rows()} is not in Gamma0({level.pq}) & Gamma(2)")


def random_word(gens, word_length: int, rng: random.Random, bound: int | None = None) -> Mat2:
    """Random product of generators and their inverses, optionally entry-bounded."""
    while True:
        m = IDENTITY
        for _ in range(word_length):
            g = rng.choice(gens)
            m = m @ (g if rng.random() < 0.5 else g.inverse())
        if bound is None or max(abs(m.a), abs(m.b), abs(m.c), abs(m.d)) <= bound:
            return m


def random_gamma0_element(level: Level, word_length: int, rng: random.Random,
                          bound: int | None = None) -> Mat2:
    gens = [T, Mat2(1, 0, level.pq, 1), Mat2(1 + level.pq, 1, level.pq, 1)]
    return random_word(gens, word_length, rng, bound)


def random_gamma_element(level: Level, word_length: int, rng: random.Random,
                         bound: int | None = None) -> Mat2:
    """Random element of Gamma0(pq) & Gamma(2)."""
    n = level.pq
    gens = [Mat2(1, 2, 0, 1), Mat2(1, 0, 2 * n, 1), Mat2(1 + 4 * n, 2, 2 * n, 1)]
    return random_word(gens, word_length, rng, bound)
