"""Cusps of Gamma0(pq), constant terms of the E_N basis and boundary maps."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import NotACusp
from .mat2 import INFINITY, Mat2
from .p1 import (Level, alpha_prime, beta_prime, bottom_row_point, gamma_prime, normalize,
                 twist_s)


class CuspClass(Enum):
    ZERO = "0"
    INFINITY = "inf"
    ONE_OVER_P = "1/p"
    ONE_OVER_Q = "1/q"


CUSP_ORDER = (CuspClass.INFINITY, CuspClass.ZERO, CuspClass.ONE_OVER_P, CuspClass.ONE_OVER_Q)


class CuspDivisor:
    """Rational combination of the four cusp classes."""

    def __init__(self, coeffs=None):
        self.coeffs = {c: Fraction(0) for c in CUSP_ORDER}
        for k, v in (coeffs or {}).items():
            self.coeffs[k] += Fraction(v)

    def __getitem__(self, cls):
        return self.coeffs[cls]

    @property
    def degree(self) -> Fraction:
        return sum(self.coeffs.values(), Fraction(0))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeffs.values())

    def __add__(self, other):
        return CuspDivisor({c: self[c] + other[c] for c in CUSP_ORDER})

    def __neg__(self):
        return CuspDivisor({c: -self[c] for c in CUSP_ORDER})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, s):
        return CuspDivisor({c: self[c] * s for c in CUSP_ORDER})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CuspDivisor) and self.coeffs == other.coeffs

    def as_dict(self) -> dict:
        return {c.value: str(self[c]) for c in CUSP_ORDER}

    def __repr__(self):
        terms = [f"{v}[{c.value}]" for c, v in self.coeffs.items() if v]
        return "CuspDivisor(" + (" + ".join(terms) or "0") + ")"


def _class_of_denominator(c: int, level: Level) -> CuspClass:
    g = gcd(c, level.pq)
    if g == level.pq:
        return CuspClass.INFINITY
    if g == 1:
        return CuspClass.ZERO
    return CuspClass.ONE_OVER_P if g == level.p else CuspClass.ONE_OVER_Q


def cusp_class(a: int, c: int, level: Level) -> CuspClass:
    """Class of the cusp a/c (infinity is 1/0); depends only on gcd(c, pq)."""
    if gcd(a, c) != 1:
        raise NotACusp(f"{a}/{c} is not in lowest terms")
    return _class_of_denominator(c, level)


def cusp_class_of(x, level: Level) -> CuspClass:
    if x == INFINITY:
        return CuspClass.INFINITY
    x = Fraction(x)
    return _class_of_denominator(x.denominator, level)


def ramification(cls: CuspClass, level: Level) -> int:
    return {CuspClass.INFINITY: 1, CuspClass.ONE_OVER_P: level.q,
            CuspClass.ONE_OVER_Q: level.p, CuspClass.ZERO: level.pq}[cls]


def _denominator(cls: CuspClass, level: Level) -> int:
    return {CuspClass.INFINITY: level.pq, CuspClass.ONE_OVER_P: level.p,
            CuspClass.ONE_OVER_Q: level.q, CuspClass.ZERO: 1}[cls]


def a0_table(n: int, level: Level) -> dict:
    """Constant term of E_N = N E2(Nz) - E2(z) at each cusp (constant N - 1 at infinity).

    At the cusp 1/m (m | pq) the value is gcd(m, N)^2 / N - 1, read off
    from the order of Delta(Nz)/Delta(z) there.
    """
    level.series(n)
    out = {}
    for cls in CUSP_ORDER:
        m = _denominator(cls, level)
        out[cls] = Fraction(gcd(m, n) ** 2, n) - 1
    return out


def divisor_of_eisenstein(n: int, level: Level) -> CuspDivisor:
    a0 = a0_table(n, level)
    return CuspDivisor({c: ramification(c, level) * a0[c] for c in CUSP_ORDER})


def symbol_boundary(g, level: Level) -> CuspDivisor:
    """[class(g 0)] - [class(g inf)] for the point g = (c : d).

    A lift (a b; c d) sends 0 to b/d and inf to a/c, so only gcd(d, pq)
    and gcd(c, pq) matter.
    """
    return CuspDivisor({_class_of_denominator(g.d, level): 1}) - \
        CuspDivisor({_class_of_denominator(g.c, level): 1})


def boundary_symbol_sum(X) -> CuspDivisor:
    out = CuspDivisor()
    for g, v in X.items():
        out = out + v * symbol_boundary(g, X.level)
    return out


def boundary_even_parts(X) -> dict:
    """The sums A', B', C' over the Gamma(2) representatives, as exact rationals.

    Returned divisor conventions follow boundary_symbol_sum: the cusp 1/p
    carries -A', 1/q carries -B', infinity -C' and 0 the sum A' + B' + C'.
    """
    level = X.level
    p, q, n = level.p, level.q, level.pq

    def F(m: Mat2):
        return X[bottom_row_point(m, level)]

    # l q + m p = 1 (mod pq) with 1 <= l <= p - 1, 1 <= m <= q - 1
    l = pow(q, -1, p)
    m = pow(p, -1, q)
    A = (sum(F(beta_prime(k, level)) for k in range(q))
         - sum(F(alpha_prime(k * p, level)) for k in range(1, q))
         - F(gamma_prime(l, level)))
    B = (sum(F(gamma_prime(k, level)) for k in range(p))
         - sum(F(alpha_prime(k * q, level)) for k in range(1, p))
         - F(beta_prime(m, level)))
    C = X[normalize(0, 1, level)] - F(alpha_prime(n, level))
    A_twice_beta = 2 * sum(F(beta_prime(k, level)) for k in range(q))
    return {"A": A, "B": B, "C": C, "A_via_beta": A_twice_beta, "l": l, "m": m}


def boundary_even(X) -> CuspDivisor:
    parts = boundary_even_parts(X)
    A, B, C = parts["A"], parts["B"], parts["C"]
    return CuspDivisor({CuspClass.ONE_OVER_P: -A, CuspClass.ONE_OVER_Q: -B,
                        CuspClass.INFINITY: -C, CuspClass.ZERO: A + B + C})


@lru_cache(maxsize=None)
def pinned_sigma() -> int:
    """Global sign relating boundaries of Eisenstein elements to divisors, fixed at pq = N = 15."""
    from .eisenstein import eisenstein_element

    level = Level(3, 5)
    bd = boundary_symbol_sum(eisenstein_element(15, level))
    div = divisor_of_eisenstein(15, level)
    if bd == div:
        return 1
    if bd == -div:
        return -1
    raise ArithmeticError(f"boundary {bd} is not +-{div}")


def twist_image(level: Level) -> list:
    return sorted({twist_s(k, level) for k in range(1, level.q)})
