"""Floating-point oracle, independent of the Dedekind-sum formulas.

Weight-2 quantities are evaluated from q-series only, after moving each
sample point into the standard fundamental domain with the quasi-modular
law of E2. Integrals along geodesics between cusps are split at the apex
into two vertical rays and integrated with Gauss-Legendre panels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import egcd
from .errors import PrecisionFailure
from .mat2 import Mat2, require_gamma0
from .p1 import Level, P1Point, gamma2cap_rep_table

TWO_PI_I = 2j * math.pi
FD_TERMS = 40  # enough for |q| <= exp(-pi sqrt 3) in double precision
MIN_IMAG = 1e-9
MAX_SERIES_TERMS = 2**22


@dataclass(frozen=True)
class NumericResult:
    value: complex | float
    error: float

    def __iter__(self):
        return iter((self.value, self.error))


@dataclass(frozen=True)
class QExpansion:
    """Power series sum a_n q^n, q = exp(2 pi i z), truncated below ``order``.

    ``eta_quotient`` optionally records ``((delta, r), ...)`` when the series is
    the eta product prod eta(delta z)^r, which lets it be evaluated anywhere.
    """

    coeffs: tuple
    order: int
    eta_quotient: tuple | None = None

    def __getitem__(self, n):
        return self.coeffs[n]

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        q = np.exp(TWO_PI_I * z)
        out = np.zeros_like(z)
        for a in reversed(self.coeffs):
            out = out * q + a
        return out


@lru_cache(maxsize=None)
def _sigma1(n: int) -> np.ndarray:
    s = np.zeros(n + 1, dtype=np.int64)
    for d in range(1, n + 1):
        s[d::d] += d
    return s


def sigma1(n: int) -> int:
    return int(_sigma1(n)[n])


def e2_expansion(order: int) -> QExpansion:
    if order < 1:
        raise ValueError("order must be >= 1")
    sig = _sigma1(order)
    return QExpansion(tuple([1] + [-24 * int(sig[n]) for n in range(1, order)]), order)


def _e2_series(tau, terms):
    q = np.exp(TWO_PI_I * np.asarray(tau, dtype=complex))
    sig = _sigma1(terms).astype(float)
    out = np.zeros_like(q)
    for n in range(terms, 0, -1):
        out = (out + sig[n]) * q
    return 1 - 24 * out


def e2_direct(z, order: int | None = None):
    """E2 from its q-series at z itself; ``order`` defaults to what Im z requires."""
    z = np.asarray(z, dtype=complex)
    y = float(np.min(z.imag))
    if y < MIN_IMAG:
        raise PrecisionFailure(f"Im z = {y} too small for the direct series")
    if order is None:
        order = int(40 / (2 * math.pi * y)) + 10
    return _e2_series(z, order)


def reduce_to_fundamental_domain(tau):
    """Return ``(tau', c, d)`` with tau' = M tau in the standard domain, M = (* *; c d)."""
    tau = np.array(tau, dtype=complex)
    if np.min(tau.imag) <= 0:
        raise PrecisionFailure("point not in the upper half plane")
    a = np.ones(tau.shape)
    b = np.zeros(tau.shape)
    c = np.zeros(tau.shape)
    d = np.ones(tau.shape)
    for _ in range(10000):
        n = np.floor(tau.real + 0.5)
        tau = tau - n
        a, b = a - n * c, b - n * d
        inside = np.abs(tau) < 1 - 1e-14
        if not inside.any():
            return tau, c, d
        tau = np.where(inside, -1 / tau, tau)
        a, b, c, d = (np.where(inside, -c, a), np.where(inside, -d, b),
                      np.where(inside, a, c), np.where(inside, b, d))
    raise PrecisionFailure("fundamental-domain reduction did not terminate")


def e2_reduced(tau):
    """E2(tau) = [E2(M tau) - (6/(pi i)) c j] / j^2, j = c tau + d."""
    tau = np.asarray(tau, dtype=complex)
    if np.min(tau.imag) < MIN_IMAG:
        raise PrecisionFailure(f"Im z = {np.min(tau.imag)} too close to the real line")
    t2, c, d = reduce_to_fundamental_domain(tau)
    j = c * tau + d
    return (_e2_series(t2, FD_TERMS) - 6 / (math.pi * 1j) * c * j) / j**2


def eval_EN(z, n: int, order: int | None = None, method: str = "reduce"):
    """E_N(z) = N E2(N z) - E2(z); ``method`` is "reduce" or "direct"."""
    z = np.asarray(z, dtype=complex)
    if method == "direct":
        return n * e2_direct(n * z, order) - e2_direct(z, order)
    return n * e2_reduced(n * z) - e2_reduced(z)


# -- pullbacks along integer matrices -------------------------------------

def _mul(A, B):
    return (A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
            A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3])


def hermite(M):
    """Split an integer matrix of positive determinant as gamma * U.

    gamma is in SL2(Z) and U = (u1 u2; 0 u3) with u1 > 0.
    """
    a, b, c, d = M
    g, x, y = egcd(a, c)
    gi = (x, y, -c // g, a // g)
    U = _mul(gi, M)
    gam = (gi[3], -gi[1], -gi[2], gi[0])
    if U[0] < 0:
        U = tuple(-v for v in U)
        gam = tuple(-v for v in gam)
    assert U[2] == 0
    return gam, U


def e2_pullback(M, u):
    """E2(M u) * d(M u)/du for an integer matrix M of positive determinant."""
    gam, U = hermite(M)
    tau = (U[0] * u + U[1]) / U[3]
    cg, dg = gam[2], gam[3]
    # E2(gam tau) = j^2 E2(tau) + (6/(pi i)) c j,  d(gam tau)/dtau = 1/j^2
    return (e2_reduced(tau) + 6 / (math.pi * 1j) * cg / (cg * tau + dg)) * U[0] / U[3]


def _decay(M):
    _, U = hermite(M)
    return U[0] / U[3]


# -- quadrature ------------------------------------------------------------

_GL = {n: np.polynomial.legendre.leggauss(n) for n in (15, 30)}


def ray_integral(func, t0: float, decay: float, tol: float, max_t: float = 1e5) -> NumericResult:
    """Integral of func(t) dt over [t0, inf) for exponentially decaying func.

    ``decay`` is a lower bound for the exponential rate, used for the tail.
    The returned error is the sum over panels of |GL30 - GL15| plus the tail.
    """
    total, err = 0j, 0.0
    x30, w30 = _GL[30]
    x15, w15 = _GL[15]
    t, length = t0, 0.25
    scale = 0.0
    while t < max_t:
        half = length / 2
        v30 = np.sum(func(t + half * (x30 + 1)) * w30) * half
        v15 = np.sum(func(t + half * (x15 + 1)) * w15) * half
        total += v30
        err += abs(v30 - v15)
        scale = max(scale, abs(v30))
        t += length
        end = abs(func(np.array([t]))[0])
        tail = 2 * end / decay
        if tail < tol * 1e-3 and abs(v30) < tol * 1e-3:
            return NumericResult(total, err + tail + 1e-15 * scale)
        length = min(length * 1.5, 4.0 / decay)
    raise PrecisionFailure(f"ray integral did not converge by t = {max_t}")


# -- F_{E_N}: integral of the twisted form along g(1) -> g(-1) ---------------

def _omega(B, n):
    """The pulled-back form 2[E(N z) - E(z)] - [E(N h z) - E(h z)] along B, as a function of u."""
    DN = (n, 0, 0, 1)
    h = (1, 1, 0, 2)
    mats = [(2, _mul(DN, B)), (-2, B), (-1, _mul(_mul(DN, h), B)), (1, _mul(h, B))]

    def f(u):
        return sum(w * e2_pullback(M, u) for w, M in mats)

    return f, 2 * math.pi * min(_decay(M) for _, M in mats)


def _twisted_ray(B, x0, n, tol):
    f, decay = _omega(B, n)
    return ray_integral(lambda t: f(x0 + 1j * t) * 1j, 0.5, decay, tol)


def numeric_F_matrix(g: Mat2, n: int, tol: float = 1e-8) -> NumericResult:
    """F_{E_N} for a representative g in Gamma(2).

    The semicircle from 1 to -1 is rho1(1/2 + it) for t in [1/2, inf) reversed,
    followed by rho2(-1/2 + it); rho1 = (1 -1; 1 0), rho2 = (-1 -1; 1 0).
    Only the real part is returned. The imaginary part is a class-dependent
    constant coming from the moduli of the eta quotient at the endpoints.
    """
    G = (g.a, g.b, g.c, g.d)
    A = _twisted_ray(_mul(G, (1, -1, 1, 0)), 0.5, n, tol / 4)
    B = _twisted_ray(_mul(G, (-1, -1, 1, 0)), -0.5, n, tol / 4)
    val = -A.value + B.value
    return NumericResult(float(val.real), A.error + B.error)


def numeric_F(g: P1Point, n: int, level: Level, tol: float = 1e-8) -> NumericResult:
    """Numerical F_{E_N}(g) (which should equal 6 F_N(g)) on the Gamma(2) representative of g."""
    level.series(n)
    rep = gamma2cap_rep_table(level)[g]
    res = numeric_F_matrix(rep, n, tol)
    if res.error > tol:
        raise PrecisionFailure(f"numeric_F error bound {res.error} exceeds {tol}", error_bound=res.error)
    return res


# -- periods ---------------------------------------------------------------

def _q_powers(x: Fraction, y: float, step: int, terms: int):
    """exp(2 pi i (x + i y) step m) for m = 1..terms with exact phase reduction."""
    m = np.arange(1, terms + 1, dtype=object if abs(x.numerator * step) * terms > 2**62 else np.int64)
    res = (m * (x.numerator * step)) % x.denominator
    phase = np.exp(TWO_PI_I * np.asarray(res, dtype=float) / x.denominator)
    return np.exp(-2 * math.pi * y * step * np.arange(1, terms + 1)) * phase


def _series_part(x: Fraction, y: float, n: int, terms: int):
    """sum sigma(m)/m (q^{Nm} - q^m) at z = x + i y, and a rounding estimate."""
    coef = _sigma1(terms)[1:].astype(float) / np.arange(1, terms + 1)
    qa = _q_powers(x, y, 1, terms)
    qn = _q_powers(x, y, n, terms)
    val = np.sum(coef * (qn - qa))
    mag = float(np.sum(coef * (np.abs(qa) + np.abs(qn))))
    return complex(val), 8 * np.finfo(float).eps * (1 + math.log2(terms)) * mag


def numeric_period(g: Mat2, n: int, level: Level, tol: float = 1e-8) -> NumericResult:
    """Period of E_N along z0 -> g z0 from the termwise-integrated q-series.

    The antiderivative is (N-1) z - (24/(2 pi i)) sum sigma(m)/m (q^{Nm} - q^m).
    With z0 = (-d + i)/c one has g z0 = (a + i)/c, both at height 1/|c|.
    """
    require_gamma0(g, level)
    level.series(n)
    if g.c < 0:
        g = -g
    if g.c == 0:
        x0, x1, y = Fraction(0), Fraction(g.b, g.d), 1.0
    else:
        x0, x1, y = Fraction(-g.d, g.c), Fraction(g.a, g.c), 1 / g.c
    x = math.exp(-2 * math.pi * y)
    terms = 16
    while True:
        # sum_{m > M} (1 + ln m) x^m bounds the tail of each of the four series
        tail = (x ** (terms + 1) / (1 - x) * (1 + math.log(terms))
                + x ** (terms + 1) / (terms * (1 - x) ** 2))
        tail *= 4 * 24 / (2 * math.pi)
        if tail < tol * 1e-2:
            break
        terms *= 2
        if terms > MAX_SERIES_TERMS:
            raise PrecisionFailure(f"|c| = {abs(g.c)} needs more than {MAX_SERIES_TERMS} series terms")
    s1, r1 = _series_part(x1, y, n, terms)
    s0, r0 = _series_part(x0, y, n, terms)
    diff = s1 - s0
    linear = (n - 1) * (x1 - x0)
    val = float(linear) - (24 / TWO_PI_I * diff).real
    err = tail + (r0 + r1) * 24 / (2 * math.pi)
    imag = abs((24 / TWO_PI_I * diff).imag)
    if err > tol or imag > tol + err:
        raise PrecisionFailure(f"period error bound {err} exceeds {tol}", error_bound=err)
    return NumericResult(val, err)


# -- constant terms at cusps -----------------------------------------------

def numeric_constant_term(n: int, cusp: tuple, width: int, samples: int = 256) -> NumericResult:
    """Constant term of E_N at the cusp sigma(inf), sigma = ``cusp`` in SL2(Z).

    Averages (E_N | sigma)(x + i) over one period of length ``width``.
    """
    DN = (n, 0, 0, 1)
    u = np.arange(samples) * (width / samples) + 1j
    vals = e2_pullback(_mul(DN, cusp), u) - e2_pullback(cusp, u)
    mean = complex(np.mean(vals))
    # aliasing from modes that are multiples of ``samples``
    alias = 24 * 50 * n * math.exp(-2 * math.pi * samples / width)
    return NumericResult(mean.real, abs(mean.imag) + alias + 1e-12)


# -- eta products and cusp-form pairing ------------------------------------

def _eta_series(tau):
    q = np.exp(TWO_PI_I * tau)
    s = np.ones_like(q)
    for k in range(1, 40):
        s = s + (-1) ** k * (q ** (k * (3 * k - 1) // 2) + q ** (k * (3 * k + 1) // 2))
    return np.exp(TWO_PI_I * tau / 24) * s


def eta_transformed(gam, tau):
    """eta(gam tau) for gam in SL2(Z), peeling off T^n S factors."""
    a, b, c, d = gam
    factor = np.ones_like(tau)
    while True:
        if c < 0:
            a, b, c, d = -a, -b, -c, -d
        if c == 0:
            # gam acts as tau -> tau + b/d with d = +-1
            return factor * np.exp(1j * math.pi * b * d / 12) * _eta_series(tau)
        k = a // c
        a, b, c, d = c, d, -(a - k * c), -(b - k * d)
        z2 = (a * tau + b) / (c * tau + d)
        # eta(k + S z2) = exp(pi i k/12) sqrt(-i z2) eta(z2)
        factor = factor * np.exp(1j * math.pi * k / 12) * np.sqrt(-1j * z2)


def eta_at(M, w):
    """eta(M w) for an integer matrix M of positive determinant."""
    gam, U = hermite(M)
    return eta_transformed(gam, (U[0] * w + U[1]) / U[3])


def eta_product_expansion(exponents: dict, order: int) -> QExpansion:
    """q-expansion of prod eta(delta z)^r for a weight-2 product with integer q-shift."""
    shift = sum(dl * r for dl, r in exponents.items())
    if shift % 24:
        raise ValueError("eta product has fractional q-order")
    shift //= 24
    series = np.zeros(order, dtype=object)
    series[0] = 1
    for dl, r in exponents.items():
        for m in range(1, order):
            if dl * m >= order:
                break
            for _ in range(abs(r)):
                if r > 0:
                    # multiply by (1 - q^{dl m})
                    series[dl * m:] = series[dl * m:] - series[:order - dl * m]
                else:
                    for i in range(dl * m, order):
                        series[i] += series[i - dl * m]
    coeffs = [0] * order
    for i in range(order - shift):
        coeffs[i + shift] = int(series[i])
    return QExpansion(tuple(coeffs), order, tuple(sorted(exponents.items())))


def eta_newform_level15(order: int) -> QExpansion:
    """q prod (1 - q^n)(1 - q^3n)(1 - q^5n)(1 - q^15n)."""
    return eta_product_expansion({1: 1, 3: 1, 5: 1, 15: 1}, order)


def _form_pullback(f: QExpansion, B):
    """u -> f(B u) d(B u)/du for B in SL2(Z), plus a decay-rate lower bound."""
    a, b, c, d = B
    if f.eta_quotient is not None:
        def val(u):
            out = np.ones_like(u)
            for dl, r in f.eta_quotient:
                out = out * eta_at(_mul((dl, 0, 0, 1), B), u) ** r
            return out / (c * u + d) ** 2

        rate = sum(2 * math.pi * _decay(_mul((dl, 0, 0, 1), B)) * r / 24 for dl, r in f.eta_quotient)
        return val, rate

    def val(u):
        z = (a * u + b) / (c * u + d)
        if np.min(z.imag) < 0.05:
            raise PrecisionFailure("direct q-series evaluation too close to the real line")
        return f(z) / (c * u + d) ** 2

    return val, 2 * math.pi * 0.05


def geodesic_integral(f: QExpansion, B, tol: float = 1e-10) -> NumericResult:
    """Integral of f(z) dz from B(0) to B(inf), split at B(i)."""
    if isinstance(B, Mat2):
        B = (B.a, B.b, B.c, B.d)
    up, r1 = _form_pullback(f, B)
    down, r2 = _form_pullback(f, _mul(B, (0, -1, 1, 0)))
    A = ray_integral(lambda t: up(1j * t) * 1j, 1.0, r1, tol / 2)
    C = ray_integral(lambda t: down(1j * t) * 1j, 1.0, r2, tol / 2)
    return NumericResult(complex(A.value - C.value), A.error + C.error)


def lift_point(g: P1Point):
    """A matrix in SL2(Z) whose bottom row reduces to g."""
    n = g.pq
    c, d = g.c, g.d
    if c == 0:
        return (1, 0, 0, 1)
    # shift d by multiples of n until gcd(c, d) = 1
    while math.gcd(c, d) != 1:
        d += n
    _, x, y = egcd(c, d)
    # x c + y d = 1 -> (y, -x; c, d)
    return (y, -x, c, d)


def pair_with_cusp_form(X, f: QExpansion, tol: float = 1e-10) -> NumericResult:
    """Sum over the support of X of coefficient * integral of f over g(0) -> g(inf)."""
    total, err = 0j, 0.0
    for g, coeff in X.items():
        res = geodesic_integral(f, lift_point(g), tol / max(1, len(X)))
        total += float(coeff) * res.value
        err += abs(float(coeff)) * res.error
    return NumericResult(total, err)


def integral_zero_to_infinity(f: QExpansion, tol: float = 1e-12) -> NumericResult:
    return geodesic_integral(f, (1, 0, 0, 1), tol)
