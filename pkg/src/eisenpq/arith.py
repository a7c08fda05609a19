"""Exact integer and rational kernels.

Everything here is pure and works on Python integers and
:class:`fractions.Fraction`, so nothing can overflow or round.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, gcd

from .errors import DegenerateInput, NotCoprime

ExactRational = Fraction


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``a*u + b*v == g == gcd(a, b) > 0``."""
    if a == 0 and b == 0:
        raise DegenerateInput("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_u, u = u, old_u - quo * u
        old_v, v = v, old_v - quo * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def crt(residues, moduli) -> int:
    """Smallest non-negative solution of ``x = r_i (mod m_i)`` for coprime moduli."""
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        g, u, _ = egcd(m, n)
        if g != 1:
            raise NotCoprime(f"moduli {m} and {n} are not coprime")
        # x + m*t = r (mod n)  =>  t = (r - x) * m^{-1} (mod n)
        t = ((r - x) * u) % n
        x += m * t
        m *= n
    return x % m


def bernoulli1(x) -> Fraction:
    """Periodic first Bernoulli function: 0 on integers, x - floor(x) - 1/2 otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - Fraction(1, 2)


def dedekind_sum(u: int, v: int) -> Fraction:
    """Brute-force Dedekind sum ``sum_{t=1}^{v-1} B1(t/v) * B1(t*u/v)``.

    Works for any integer ``u``; costs O(v). This is the reference
    definition the faster routines are checked against.
    """
    if v < 1:
        raise DegenerateInput(f"Dedekind sum needs v >= 1, got v={v}")
    # B1(t/v) = t/v - 1/2 for 0 < t < v; accumulate over a common denominator.
    total = 0
    for t in range(1, v):
        r = (t * u) % v
        if r:
            total += (2 * t - v) * (2 * r - v)
    return Fraction(total, 4 * v * v)


def dedekind_sum_fast(u: int, v: int) -> Fraction:
    """Dedekind sum for coprime ``u, v`` in O(log v) steps via reciprocity."""
    if v < 1:
        raise DegenerateInput(f"Dedekind sum needs v >= 1, got v={v}")
    if gcd(u, v) != 1:
        raise NotCoprime(f"gcd({u}, {v}) != 1")
    sign = 1
    u %= v
    total = Fraction(0)
    # s(u,v) = -1/4 + (u^2+v^2+1)/(12uv) - s(v mod u, u)
    while u:
        total += sign * (Fraction(-1, 4) + Fraction(u * u + v * v + 1, 12 * u * v))
        u, v = v % u, u
        sign = -sign
    return total


def dedekind(u: int, v: int) -> Fraction:
    """Dedekind sum for arbitrary ``u`` using ``S(gu, gv) = S(u, v)`` and reciprocity."""
    if v < 1:
        raise DegenerateInput(f"Dedekind sum needs v >= 1, got v={v}")
    g = gcd(u, v)
    return dedekind_sum_fast(u // g, v // g)


def sgn(x) -> int:
    return (x > 0) - (x < 0)


def is_prime(n: int) -> bool:
    """Deterministic trial division; adequate for the level sizes this package targets."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def inverse_mod(a: int, m: int) -> int:
    try:
        return pow(a, -1, m)
    except ValueError:
        raise NotCoprime(f"{a} is not invertible modulo {m}") from None
