"""The projective line over Z/pqZ and explicit coset representatives.

Points of P^1(Z/pqZ) label the right cosets of Gamma0(pq) in SL2(Z) through
the bottom row of a representative matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .arith import crt, inverse_mod, is_prime
from .errors import InvalidLevel, NotAUnit, NotProjectivePoint


@dataclass(frozen=True, order=True)
class Level:
    p: int
    q: int

    def __post_init__(self):
        for v in (self.p, self.q):
            if not isinstance(v, int) or isinstance(v, bool):
                raise InvalidLevel(f"level primes must be integers, got {v!r}")
            if v == 2 or not is_prime(v):
                raise InvalidLevel(f"{v} is not an odd prime")
        if self.p == self.q:
            raise InvalidLevel(f"p and q must be distinct, got p = q = {self.p}")

    @property
    def pq(self) -> int:
        return self.p * self.q

    def series(self, label) -> int:
        """Translate a series label ("p", "q", "pq" or an integer) into N."""
        table = {"p": self.p, "q": self.q, "pq": self.pq}
        if isinstance(label, str):
            if label not in table:
                raise InvalidLevel(f"unknown series label {label!r}")
            return table[label]
        if label not in table.values():
            raise InvalidLevel(f"N = {label} is not one of p, q, pq for level {self.pq}")
        return label

    def __str__(self):
        return f"{self.p}*{self.q}"


@dataclass(frozen=True, order=True)
class P1Point:
    c: int
    d: int
    pq: int

    def __str__(self):
        return f"({self.c}:{self.d})"


def normalize(c: int, d: int, level: Level) -> P1Point:
    """Canonical representative: the lexicographically least unit rescaling."""
    n = level.pq
    c %= n
    d %= n
    if gcd(gcd(c, d), n) != 1:
        raise NotProjectivePoint(f"gcd({c}, {d}, {n}) > 1")
    if c == 0:
        return P1Point(0, 1, n)
    g = gcd(c, n)
    m = n // g
    # every unit u with c*u = g (mod n) is u0 + j*m; c*u cannot be smaller than g
    u0 = inverse_mod(c // g, m) if m > 1 else 0
    best = None
    for j in range(g):
        u = u0 + j * m
        if gcd(u, n) != 1:
            continue
        cand = (d * u) % n
        if best is None or cand < best:
            best = cand
    return P1Point(g, best, n)


def point(c: int, d: int, level: Level) -> P1Point:
    return normalize(c, d, level)


@lru_cache(maxsize=None)
def _enumerate(level: Level) -> tuple:
    n = level.pq
    pts = {P1Point(0, 1, n)}
    pts.update(P1Point(1, d, n) for d in range(n))
    for g in (level.p, level.q):
        for d in range(n):
            if gcd(d, g) == 1:
                pts.add(normalize(g, d, level))
    return tuple(sorted(pts))


def enumerate_points(level: Level) -> list:
    """All pq + p + q + 1 points, sorted by canonical form."""
    return list(_enumerate(level))


def act(g: P1Point, m, level: Level) -> P1Point:
    """Right action ``(c, d) . m``, i.e. the bottom row of ``(* *; c d) m``."""
    if g.pq != level.pq:
        raise NotProjectivePoint("point and level disagree")
    return normalize(g.c * m.a + g.d * m.c, g.c * m.b + g.d * m.d, level)


def bottom_row_point(m, level: Level) -> P1Point:
    return normalize(m.c, m.d, level)


def coset_reps_gamma0(level: Level) -> list:
    """Identity, alpha_k (0 <= k < pq), beta_r (0 <= r < q), gamma_s (0 <= s < p)."""
    from .mat2 import Mat2

    p, q, n = level.p, level.q, level.pq
    reps = [Mat2(1, 0, 0, 1)]
    reps += [Mat2(0, -1, 1, k) for k in range(n)]
    reps += [Mat2(-1, -r, p, r * p - 1) for r in range(q)]
    reps += [Mat2(-1, -s, q, s * q - 1) for s in range(p)]
    return reps


def s_parity_shift(k: int, level: Level) -> int:
    """Odd lift ``s_k`` of k: k itself when k is odd, k - pq otherwise."""
    return k if k % 2 else k - level.pq


def alpha_prime(k: int, level: Level):
    from .mat2 import Mat2

    n = level.pq
    if k == n:
        return Mat2(n, n - 1, n + 1, n)
    s = s_parity_shift(k, level)
    return Mat2(s * n * n, s * n - 1, s * n + 1, s)


def beta_prime(r: int, level: Level):
    from .mat2 import Mat2

    p, q, n = level.p, level.q, level.pq
    t = r if r % 2 == 0 else r + q
    return Mat2(-1, -t, p + n, -1 + t * (p + n))


def gamma_prime(s: int, level: Level):
    from .mat2 import Mat2

    q, n = level.q, level.pq
    t = s if s % 2 == 0 else s + n
    return Mat2(-1, -t, q + n, -1 + t * (q + n))


def coset_reps_gamma2cap(level: Level) -> list:
    """Representatives of Gamma0(pq) & Gamma(2) inside Gamma(2), one per P^1 class."""
    from .mat2 import Mat2

    reps = [Mat2(1, 0, 0, 1)]
    # k = pq takes the place of k = 0 (both sit over the class (1:0))
    reps += [alpha_prime(k, level) for k in range(1, level.pq + 1)]
    reps += [beta_prime(r, level) for r in range(level.q)]
    reps += [gamma_prime(s, level) for s in range(level.p)]
    return reps


@lru_cache(maxsize=None)
def gamma2cap_rep_table(level: Level) -> dict:
    """Map each P^1 point to its representative in the Gamma(2) family."""
    table = {}
    for m in coset_reps_gamma2cap(level):
        table.setdefault(bottom_row_point(m, level), m)
    return table


def twist_s(k: int, level: Level) -> int:
    """The residue s(k) mod q with (kp : -1) = (p : s(k)p - 1)."""
    p, q = level.p, level.q
    if k % q == 0:
        raise NotAUnit(f"{k} is not a unit modulo {q}")
    x = crt([p - 1, (-inverse_mod(k, q)) % q], [p, q])
    return ((x + 1) // p) % q
