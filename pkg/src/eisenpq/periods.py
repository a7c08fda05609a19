"""The period homomorphism of E_N on Gamma0(pq) and the invariant P_N."""

from __future__ import annotations

from fractions import Fraction

from .arith import dedekind, sgn
from .errors import DegenerateTrace
from .mat2 import Mat2, h_conjugate, require_gamma, require_gamma0, s_of, t_of
from .p1 import Level


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to the non-integer {x}")
    return x.numerator


def period_raw(g: Mat2, n: int) -> int:
    """Period of E_N on any g in Gamma0(N), no level check."""
    if g.c % n:
        raise ValueError(f"{g.rows()} is not in Gamma0({n})")
    if g.c == 0:
        return _as_int(Fraction(g.b, g.d) * (n - 1), "period")
    c = abs(g.c)
    val = Fraction(g.a + g.d, g.c) * (n - 1) + 12 * sgn(g.c) * (dedekind(g.d, c) - dedekind(g.d, c // n))
    return _as_int(val, "period")


def period(g: Mat2, n: int, level: Level) -> int:
    require_gamma0(g, level)
    level.series(n)
    return period_raw(g, n)


def p_value(g: Mat2, n: int, level: Level) -> Fraction:
    """(2 pi(g) - pi(h g h^-1)) / 12 for g in Gamma0(pq) & Gamma(2).

    Returned as an exact rational: the value is a half-integer in general
    (T^2 gives (N - 1)/4) and an integer on the elements used by f_value.
    """
    require_gamma(g, level)
    level.series(n)
    return Fraction(2 * period_raw(g, n) - period_raw(h_conjugate(g), n), 12)


def p_value_closed(g: Mat2, n: int, level: Level) -> Fraction:
    """Dedekind-sum closed form of P_N in terms of s = a + c and t = b + d - a - c."""
    require_gamma(g, level)
    level.series(n)
    s, t = s_of(g), t_of(g)
    if t == 0:
        raise DegenerateTrace("t(g) = 0; use p_value instead")
    at = abs(t)
    val = sgn(t) * (2 * (dedekind(s, at * n) - dedekind(s, at))
                    - dedekind(s, at * n // 2) + dedekind(s, at // 2))
    return val
