"""The lattice (QSym / m^2)_n and projections onto it.

Degree-n QSym is coordinatised by the fundamental basis.  The square of the
maximal ideal is spanned in degree n by the products L_b * L_e with b, e
nonempty; saturating that span and choosing a free complement gives integer
coordinates on the quotient.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .lattice import complement_projection, hermite_rows
from .qsym import FUNDAMENTAL, QSymFn, compositions_of, product


def _mobius(n: int) -> int:
    out, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


@lru_cache(maxsize=None)
def quotient_ranks(nmax: int) -> tuple:
    """(r_1, ..., r_nmax) with prod_n (1 - t^n)^(-r_n) = (1 - t) / (1 - 2t)."""
    a = [1] + [2 ** (n - 1) for n in range(1, nmax + 1)]
    # b_m = m * [t^m] log H, from m a_m = sum_{k=1}^m b_k a_{m-k}
    b = [Fraction(0)] * (nmax + 1)
    for m in range(1, nmax + 1):
        b[m] = m * a[m] - sum(b[k] * a[m - k] for k in range(1, m))
    ranks = []
    for m in range(1, nmax + 1):
        s = sum(_mobius(m // d) * b[d] for d in range(1, m + 1) if m % d == 0)
        r = Fraction(s) / m
        assert r.denominator == 1
        ranks.append(int(r))
    return tuple(ranks)


@dataclass(frozen=True)
class QuotientPresentation:
    n: int
    compositions: tuple  # L-basis coordinate order (lex)
    pivots: tuple | None  # pivot compositions when the reduction is unit-pivot
    projection: tuple  # rows: one per composition; columns: quotient coords
    rank: int

    @property
    def free_compositions(self) -> tuple | None:
        if self.pivots is None:
            return None
        piv = set(self.pivots)
        return tuple(a for a in self.compositions if a not in piv)


@dataclass(frozen=True)
class QuotientVector:
    n: int
    coords: tuple

    def __add__(self, other: "QuotientVector") -> "QuotientVector":
        if self.n != other.n:
            raise ValueError("degree mismatch")
        return QuotientVector(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, k: int) -> "QuotientVector":
        return QuotientVector(self.n, tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


def m2_spanning_set(n: int) -> list:
    """L-coordinate vectors of every L_b * L_e with |b| + |e| = n, b, e nonempty."""
    rows = []
    for k in range(1, n):
        for b in compositions_of(k):
            for e in compositions_of(n - k):
                prod = product(QSymFn.L(b), QSymFn.L(e))
                rows.append(prod.vector(n, FUNDAMENTAL))
    return rows


@lru_cache(maxsize=None)
def quotient_presentation(n: int) -> QuotientPresentation:
    if n < 1:
        raise ValueError("degree must be positive")
    comps = tuple(compositions_of(n))
    N = len(comps)
    rows = m2_spanning_set(n)
    proj, pivots = complement_projection(rows, N)
    rank = len(proj[0]) if proj else 0
    expected = quotient_ranks(n)[-1]
    if rank != expected:
        raise ArithmeticError(f"quotient rank {rank} != expected r_{n} = {expected}")
    piv = None if pivots is None else tuple(comps[c] for c in pivots)
    return QuotientPresentation(n, comps, piv, tuple(tuple(r) for r in proj), rank)


def project_mod_m2(f: QSymFn, pres: QuotientPresentation | None = None) -> QuotientVector:
    deg = f.degree
    if pres is None:
        if not deg:
            raise ValueError("need a homogeneous function of positive degree")
        pres = quotient_presentation(deg)
    if f and deg != pres.n:
        raise ValueError(f"degree mismatch: {deg} vs presentation {pres.n}")
    v = f.vector(pres.n, FUNDAMENTAL) if f else [0] * len(pres.compositions)
    coords = tuple(
        sum(v[i] * pres.projection[i][j] for i in range(len(v)) if v[i])
        for j in range(pres.rank)
    )
    return QuotientVector(pres.n, coords)


def m2_rank(n: int) -> int:
    """Rank of (m^2)_n as computed from the spanning set."""
    basis, _ = hermite_rows(m2_spanning_set(n), 2 ** (n - 1))
    return len(basis)
