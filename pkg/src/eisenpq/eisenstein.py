"""Coefficients of the Eisenstein element on P^1(Z/pqZ)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import bernoulli1, dedekind, inverse_mod
from .errors import LevelMismatch, NotInstantiable, PrecisionFailure
from .mat2 import build_exceptional_pair
from .p1 import Level, P1Point, enumerate_points
from .periods import p_value

# S(r, 2N) depends on r mod 2N; only odd lifts of r give integer values.
REPRESENTATIVE_RULE = "odd-lift"
ROUNDING_BOUND = 0.4
DEFAULT_ORACLE_TOL = 1e-8


class SymbolSum:
    """Finite formal sum of Manin symbols with exact rational coefficients."""

    def __init__(self, level: Level, coeffs=None):
        self.level = level
        self.coeffs: dict[P1Point, Fraction] = {}
        for g, v in (coeffs or {}).items():
            self.add(g, v)

    def add(self, g: P1Point, v):
        if g.pq != self.level.pq:
            raise LevelMismatch(f"point {g} does not live at level {self.level.pq}")
        v = Fraction(v) + self.coeffs.get(g, 0)
        if v:
            self.coeffs[g] = v
        else:
            self.coeffs.pop(g, None)
        return self

    @classmethod
    def symbol(cls, g: P1Point, level: Level, coefficient=1):
        return cls(level, {g: coefficient})

    def __getitem__(self, g):
        return self.coeffs.get(g, Fraction(0))

    def items(self):
        return sorted(self.coeffs.items())

    def _check(self, other):
        if self.level != other.level:
            raise LevelMismatch("symbol sums at different levels")

    def __add__(self, other):
        self._check(other)
        out = SymbolSum(self.level, self.coeffs)
        for g, v in other.coeffs.items():
            out.add(g, v)
        return out

    def __neg__(self):
        return SymbolSum(self.level, {g: -v for g, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return SymbolSum(self.level, {g: v * scalar for g, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, SymbolSum) and self.level == other.level and self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        body = " + ".join(f"{v}*{g}" for g, v in self.items()) or "0"
        return f"SymbolSum[{self.level.pq}]({body})"


@dataclass(frozen=True)
class Generic:
    r: int


@dataclass(frozen=True)
class ExceptionalX:
    x: int
    k: int
    side: str  # "LeftOfOne" for (e : 1) rows, "RightOfOne" for (1 : e)
    sign: int  # +1 for e = 1 + kx, -1 for e = -1 - kx
    instantiable: bool = True


@dataclass(frozen=True)
class UnitClass:
    pass


def odd_lift(r: int, level: Level) -> int:
    """The odd representative of r mod pq in [0, 2pq)."""
    r %= level.pq
    return r if r % 2 else r + level.pq


def _exceptional_forms(g: P1Point, level: Level):
    """Every table form (+-(1 + kx) : 1) or (1 : +-(1 + kx)) that g matches."""
    n = level.pq
    forms = []
    for x in (level.p, level.q):
        y = n // x
        for side in ("LeftOfOne", "RightOfOne"):
            num, den = (g.c, g.d) if side == "LeftOfOne" else (g.d, g.c)
            if gcd(den, n) != 1:
                continue
            e = num * inverse_mod(den, n) % n
            for sign in (1, -1):
                kx = (sign * e - 1) % n
                if kx % x:
                    continue
                k = kx // x
                if k % y == 0:
                    continue
                forms.append((x, k, side, sign))
    return forms


def _instantiable(x, k, level):
    try:
        build_exceptional_pair(x, k, level)
    except NotInstantiable:
        return False
    return True


def classify(g: P1Point, level: Level):
    n = level.pq
    u = gcd(g.d - g.c, n)
    if u == 1:
        r = (g.c + g.d) * inverse_mod(g.d - g.c, n) % n
        return Generic(r)
    if u == n:
        return UnitClass()
    forms = _exceptional_forms(g, level)
    for x, k, side, sign in forms:
        if _instantiable(x, k, level):
            return ExceptionalX(x, k, side, sign)
    # nothing instantiable: report a form whose prime is gcd(d - c, pq)
    x, k, side, sign = next(f for f in forms if f[0] == u)
    return ExceptionalX(x, k, side, sign, instantiable=False)


@dataclass(frozen=True)
class Coefficient:
    value: int
    source: str  # "formula" or "oracle"
    error_bound: float | None = None
    raw: float | None = None


def generic_value(r: int, n: int, level: Level) -> int:
    r = odd_lift(r, level)
    v = 2 * (dedekind(r, n) - 2 * dedekind(r, 2 * n))
    if v.denominator != 1:
        raise ArithmeticError(f"generic coefficient for r = {r}, N = {n} is {v}")
    return v.numerator


def exceptional_value(tag: ExceptionalX, n: int, level: Level, shift: int = 0) -> int:
    pair = build_exceptional_pair(tag.x, tag.k, level, shift=shift)
    v = p_value(pair.gamma1, n, level) - p_value(pair.gamma2, n, level)
    if tag.side == "RightOfOne":
        v = -v
    if v.denominator != 1:
        raise ArithmeticError(f"exceptional coefficient {v} is not an integer")
    return v.numerator


@lru_cache(maxsize=None)
def _oracle_coefficient(g: P1Point, n: int, level: Level, tol: float) -> Coefficient:
    from .oracle import numeric_F

    res = numeric_F(g, n, level, tol)
    val, err = res.value / 6, res.error / 6
    nearest = round(val)
    if err >= ROUNDING_BOUND or abs(val - nearest) + err >= 0.5:
        raise PrecisionFailure(
            f"oracle value {val} for {g} (N = {n}) is not certified to round", error_bound=err)
    return Coefficient(int(nearest), "oracle", err, res.value)


def coefficient(g: P1Point, n: int, level: Level, tol: float = DEFAULT_ORACLE_TOL) -> Coefficient:
    level.series(n)
    tag = classify(g, level)
    if isinstance(tag, UnitClass):
        return Coefficient(0, "formula")
    if isinstance(tag, Generic):
        return Coefficient(generic_value(tag.r, n, level), "formula")
    if tag.instantiable:
        return Coefficient(exceptional_value(tag, n, level), "formula")
    return _oracle_coefficient(g, n, level, tol)


def f_value(g: P1Point, n: int, level: Level) -> int:
    return coefficient(g, n, level).value


def f_value_bernoulli(r: int, level: Level) -> Fraction:
    """Sum of B1(h r / 2pq) over h = 0 .. pq - 1, with r lifted like f_value."""
    n = level.pq
    r = odd_lift(r, level)
    return sum((bernoulli1(Fraction(h * r, 2 * n)) for h in range(n)), Fraction(0))


def coefficient_table(n: int, level: Level) -> list:
    """``[(point, Coefficient)]`` over all of P^1 in canonical order."""
    return [(g, coefficient(g, n, level)) for g in enumerate_points(level)]


def eisenstein_element(n: int, level: Level) -> SymbolSum:
    return SymbolSum(level, {g: c.value for g, c in coefficient_table(n, level)})


def even_eisenstein_coefficients(n: int, level: Level) -> SymbolSum:
    return 6 * eisenstein_element(n, level)


