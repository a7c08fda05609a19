"""Manin-symbol presentation of relative homology over Q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .boundary import CUSP_ORDER, CuspDivisor, symbol_boundary
from .eisenstein import SymbolSum, f_value
from .errors import LevelMismatch
from .mat2 import R, S
from .p1 import Level, act, enumerate_points, normalize


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def genus_data(level: Level) -> dict:
    """Index, elliptic point counts, cusp count and genus of X0(pq)."""
    primes = (level.p, level.q)
    index = 1
    nu2 = nu3 = 1
    for ell in primes:
        index *= ell + 1
        nu2 *= 1 + legendre(-1, ell)
        nu3 *= 1 + legendre(-3, ell)
    cusps = 4
    g = 1 + Fraction(index, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(cusps, 2)
    assert g.denominator == 1
    return {"index": index, "nu2": nu2, "nu3": nu3, "cusps": cusps, "genus": int(g)}


def expected_dimension(level: Level) -> int:
    d = genus_data(level)
    return 2 * d["genus"] + d["cusps"] - 1


class SparseRowReducer:
    """Incremental reduced row echelon form over Q with dict-of-columns rows."""

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}  # pivot column -> row

    def _reduce(self, row):
        row = {k: Fraction(v) for k, v in row.items() if v}
        changed = True
        while changed:
            changed = False
            for col in [c for c in row if c in self.rows]:
                coef = row.get(col)
                if not coef:
                    continue
                for k, v in self.rows[col].items():
                    nv = row.get(k, 0) - coef * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
                changed = True
        return row

    def add(self, row) -> bool:
        row = self._reduce(row)
        if not row:
            return False
        piv = min(row)
        inv = 1 / row[piv]
        row = {k: v * inv for k, v in row.items()}
        # keep existing rows reduced with respect to the new pivot
        for prow in self.rows.values():
            coef = prow.get(piv)
            if coef:
                for k, v in row.items():
                    nv = prow.get(k, 0) - coef * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        self.rows[piv] = row
        return True


@dataclass
class ManinPresentation:
    level: Level
    basis: list
    table: dict  # P1Point -> {basis index: Fraction}

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _relations(level: Level):
    pts = enumerate_points(level)
    seen = set()
    for g in pts:
        for rel in ((g, act(g, S, level)),
                    (g, act(g, R, level), act(act(g, R, level), R, level))):
            row = {}
            for h in rel:
                row[h] = row.get(h, 0) + 1
            key = tuple(sorted(row.items()))
            if key not in seen:
                seen.add(key)
                yield row


@lru_cache(maxsize=None)
def build_presentation(level: Level) -> ManinPresentation:
    pts = enumerate_points(level)
    index = {g: i for i, g in enumerate(pts)}
    red = SparseRowReducer()
    for rel in _relations(level):
        red.add({index[g]: v for g, v in rel.items()})
    free = [i for i in range(len(pts)) if i not in red.rows]
    pos = {col: j for j, col in enumerate(free)}
    table = {}
    for i, g in enumerate(pts):
        if i in pos:
            table[g] = {pos[i]: Fraction(1)}
        else:
            row = red.rows[i]
            table[g] = {pos[k]: -v for k, v in row.items() if k != i}
    return ManinPresentation(level, [pts[i] for i in free], table)


def reduce(X: SymbolSum, pres: ManinPresentation) -> tuple:
    if X.level != pres.level:
        raise LevelMismatch(f"symbol sum at level {X.level.pq}, presentation at {pres.level.pq}")
    vec = [Fraction(0)] * pres.dimension
    for g, v in X.items():
        for j, w in pres.table[g].items():
            vec[j] += v * w
    return tuple(vec)


def coordinate_boundary(vec, pres: ManinPresentation) -> CuspDivisor:
    """Boundary of the class with the given coordinates (boundary of basis symbols)."""
    out = CuspDivisor()
    for j, v in enumerate(vec):
        if v:
            out = out + v * symbol_boundary(pres.basis[j], pres.level)
    return out


def winding_element(level: Level) -> SymbolSum:
    """Sum over units x of F_pq((1 : x)) times the symbol of (1 0; x 1), i.e. of {0, 1/x}."""
    n = level.pq
    X = SymbolSum(level)
    for x in range(1, n):
        if gcd(x, n) == 1:
            X.add(normalize(x, 1, level), f_value(normalize(1, x, level), n, level))
    return X


def winding_metadata(level: Level) -> dict:
    nu = gcd(level.pq - 1, 12)
    return {"nu": nu, "n": (level.pq - 1) // nu}


__all__ = ["genus_data", "expected_dimension", "ManinPresentation", "build_presentation",
           "reduce", "coordinate_boundary", "winding_element", "winding_metadata", "CUSP_ORDER"]
