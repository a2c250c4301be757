"""The invariant F(M), its brute-force oracle and the identities around it."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

import numpy as np

from .config import DEFAULT_BUDGETS, BudgetExceeded
from .matroid import Matroid, direct_sum, elements_of, freedom_matroid, mask_of
from .posets import (
    check_sigma,
    diagonal_coefficient,
    enumerator,
    r_sigma,
    sigma_strings,
    strict_labelling,
)
from .qsym import (
    FUNDAMENTAL,
    MONOMIAL,
    QSymFn,
    TensorQSym,
    antipode,
    compositions_of,
    coproduct,
    reverse,
    specialize_ones,
)


def F(M: Matroid, max_n: int | None = None) -> QSymFn:
    """Sum over bases B of the strict-labelled enumerator of the base poset P_B.

    Returned in the fundamental basis.
    """
    max_n = DEFAULT_BUDGETS.max_invariant_n if max_n is None else max_n
    if M.n > max_n:
        raise BudgetExceeded(f"F(M) limited to n <= {max_n}")
    out = Counter()
    for b in M.bases:
        out.update(enumerator(M.strict_base_poset(b)).terms)
    return QSymFn(out, FUNDAMENTAL)


def _weight_patterns(n: int, k: int, chunk: int = 1 << 17):
    """Yield blocks of rows of [k]^n, in lexicographic order."""
    total = k ** n
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % k + 1


def vertex_matrix(M: Matroid) -> np.ndarray:
    """0/1 indicator rows of the bases, columns in ground-set order."""
    pos = {e: i for i, e in enumerate(M.ground)}
    bm = np.zeros((len(M.bases), M.n), dtype=np.int64)
    for row, b in enumerate(sorted(M.bases)):
        for e in elements_of(b):
            bm[row, pos[e]] = 1
    return bm


def minimizer_tally(V: np.ndarray, n: int, k: int, weight_of_count, budget: int | None = None) -> dict:
    """Tally f: [n] -> [k] by value multiplicities, weighting each f by
    ``weight_of_count(number of rows of V minimizing f . v)``.

    Returns the counts on compositions of n with at most k parts, which are
    the monomial coefficients of the corresponding quasisymmetric function.
    """
    budget = DEFAULT_BUDGETS.brute_force if budget is None else budget
    if n == 0:
        return {(): int(weight_of_count(np.array([len(V)]))[0])}
    if k ** n > budget:
        raise BudgetExceeded(f"{k}^{n} weight functions exceed budget {budget}")
    comps = [a for a in compositions_of(n) if len(a) <= k]
    keys = {}
    for a in comps:
        padded = list(a) + [0] * (k - len(a))
        keys[sum(c * (n + 1) ** i for i, c in enumerate(padded))] = a
    out = Counter({a: 0 for a in comps})
    vals = np.arange(1, k + 1)
    radix = (n + 1) ** np.arange(k, dtype=np.int64)
    for block in _weight_patterns(n, k):
        w = block @ V.T
        mins = w.min(axis=1)
        counts = (w == mins[:, None]).sum(axis=1)
        mult = (block[:, :, None] == vals[None, None, :]).sum(axis=1)
        code = mult @ radix
        wts = weight_of_count(counts)
        sel = wts != 0
        if not sel.any():
            continue
        uniq, inv = np.unique(code[sel], return_inverse=True)
        sums = np.bincount(inv, weights=wts[sel])
        for u, s in zip(uniq.tolist(), sums.tolist()):
            a = keys.get(u)
            if a is not None:
                out[a] += int(round(s))
    return dict(out)


def _unique_minimizer(counts):
    return (counts == 1).astype(np.int64)


def _all_minimizers(counts):
    return counts.astype(np.int64)


def F_bruteforce(M: Matroid, k: int | None = None, budget: int | None = None) -> dict:
    """Monomial coefficients of F(M) on compositions with at most k parts.

    Counts the M-generic f: E -> [k] whose value i appears exactly alpha_i
    times, directly from the definition.
    """
    k = M.n if k is None else k
    return minimizer_tally(vertex_matrix(M), M.n, k, _unique_minimizer, budget)


def F_star(M: Matroid) -> QSymFn:
    """(-1)^n S(F(M)), in the fundamental basis."""
    f = antipode(F(M))
    return -f if M.n % 2 else f


def F_star_bruteforce(M: Matroid, k: int | None = None, budget: int | None = None) -> dict:
    """Monomial coefficients of F*(M): each f weighted by its number of minimizing bases."""
    k = M.n if k is None else k
    return minimizer_tally(vertex_matrix(M), M.n, k, _all_minimizers, budget)


def monomial_coefficients(f: QSymFn, max_parts: int | None = None) -> dict:
    g = f.to(MONOMIAL)
    n = f.degree or 0
    return {
        a: g.coefficient(a)
        for a in compositions_of(n)
        if max_parts is None or len(a) <= max_parts
    }


def flag_coefficient(M: Matroid, alpha) -> int:
    """Number of flags with step sizes alpha whose subquotients split completely."""
    alpha = tuple(alpha)
    if sum(alpha) != M.n:
        return 0

    def rec(prev: int, i: int) -> int:
        if i == len(alpha):
            return 1
        rest = M.ground_mask & ~prev
        total = 0
        for add in combinations(elements_of(rest), alpha[i]):
            cur = prev | mask_of(add)
            piece = M.restrict(cur).contract(prev)
            if piece.splits_completely():
                total += rec(cur, i + 1)
        return total

    return rec(0, 0)


def phi(M: Matroid):
    return specialize_ones(F(M))


def phi_star(M: Matroid):
    return specialize_ones(F_star(M))


def check_reciprocity(M: Matroid) -> bool:
    """phi(M, -m) = (-1)^n phi*(M, m) as polynomials."""
    sign = -1 if M.n % 2 else 1
    return phi(M).reflect() == phi_star(M).scale(sign)


def hopf_coproduct_side(M: Matroid) -> TensorQSym:
    """Sum over A of F(M|A) (x) F(M/A)."""
    out = TensorQSym()
    for size in range(M.n + 1):
        for A in combinations(M.ground, size):
            a = mask_of(A)
            out = out + TensorQSym.tensor(F(M.restrict(a)), F(M.contract(a)))
    return out


def check_hopf_morphism(M: Matroid) -> bool:
    return coproduct(F(M)) == hopf_coproduct_side(M)


def check_multiplicative(M1: Matroid, M2: Matroid) -> bool:
    return F(direct_sum(M1, M2)) == F(M1) * F(M2)


def check_duality(M: Matroid) -> bool:
    """Monomial coefficients of F(M*) are those of F(M) at reversed compositions."""
    f = F(M).to(MONOMIAL)
    g = F(M.dual()).to(MONOMIAL)
    return g.terms == {reverse(a): c for a, c in f.terms.items()}


@dataclass
class LCoefficientReport:
    nonnegative: bool
    total: int
    expected_total: int
    all_ones: int
    bases: int
    two_part_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def two_part_prediction(M: Matroid) -> dict:
    """Predicted L-coefficients of F(M) on compositions with at most two parts.

    For M not splitting completely this is b * sum_j binom(l+c, j) L_(r+l-j, r*-l+j).
    When M splits completely F(M) = L_1^n, whose coefficient on L_(j, n-j) is
    binom(n, j) - 1 (a single descent exactly at position j) and on L_(n) is 1.
    """
    n, r = M.n, M.rank
    rs = n - r
    ell, c, b = len(M.loops()), len(M.coloops()), len(M.bases)
    pred = Counter()
    if n == 0:
        return {}
    if M.splits_completely():
        pred[(n,)] = 1
        for j in range(1, n):
            pred[(j, n - j)] = comb(n, j) - 1
    else:
        for j in range(ell + c + 1):
            parts = tuple(p for p in (r + ell - j, rs - ell + j) if p)
            pred[parts] += b * comb(ell + c, j)
    return {a: v for a, v in pred.items() if v}


def check_L_coefficients(M: Matroid) -> LCoefficientReport:
    f = F(M)
    terms = f.terms
    n = M.n
    total = sum(terms.values())
    ones = terms.get((1,) * n, 0) if n else terms.get((), 0)
    b = len(M.bases)
    fails = []
    nonneg = all(v >= 0 for v in terms.values())
    if not nonneg:
        fails.append("negative L-coefficient")
    if total != factorial(n):
        fails.append(f"coefficient sum {total} != {n}!")
    if n and ones != b:
        fails.append(f"coefficient of L_1..1 is {ones}, bases {b}")
    pred = two_part_prediction(M)
    actual = {a: v for a, v in terms.items() if 1 <= len(a) <= 2}
    two_ok = actual == pred
    if not two_ok:
        fails.append(f"one/two-part coefficients {actual} != predicted {pred}")
    return LCoefficientReport(nonneg, total, factorial(n), ones, b, two_ok, fails)


# --------------------------------------------------------- freedom matroids

def _inverse(columns: list) -> list:
    """Exact inverse of the square matrix whose columns are given."""
    N = len(columns)
    A = [
        [Fraction(columns[j][i]) for j in range(N)] + [Fraction(int(i == k)) for k in range(N)]
        for i in range(N)
    ]
    for col in range(N):
        piv = next(r for r in range(col, N) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [v / p for v in A[col]]
        for r in range(N):
            if r != col and A[r][col] != 0:
                m = A[r][col]
                A[r] = [a - m * b for a, b in zip(A[r], A[col])]
    return [row[N:] for row in A]


def strict_r_enumerator(tau: str) -> QSymFn:
    return enumerator(strict_labelling(r_sigma(tau)))


@lru_cache(maxsize=None)
def _strict_r_inverse(n: int) -> list:
    cols = [strict_r_enumerator(t).vector(n, FUNDAMENTAL) for t in sigma_strings(n)]
    return _inverse(cols)


def freedom_expansion(sigma: str) -> dict:
    """Coefficients of F(M_sigma) in the strict R_tau enumerators, keyed by tau."""
    n = len(check_sigma(sigma))
    inv = _strict_r_inverse(n)
    target = F(freedom_matroid(sigma)).vector(n, FUNDAMENTAL)
    out = {}
    for t, row in zip(sigma_strings(n), inv):
        x = sum(a * b for a, b in zip(row, target) if b)
        if x.denominator != 1:
            raise ArithmeticError(f"non-integral coefficient {x} at {t}")
        if x:
            out[t] = int(x)
    return out


@dataclass
class FreedomExpansionReport:
    sigma: str
    coefficients: dict
    diagonal: int
    expected_diagonal: int
    triangular: bool

    @property
    def ok(self) -> bool:
        return self.triangular and self.diagonal == self.expected_diagonal


def freedom_expansion_check(sigma: str) -> FreedomExpansionReport:
    coeffs = freedom_expansion(sigma)
    tri = all(t <= sigma for t in coeffs)  # equal-length 0/1 strings compare lex
    return FreedomExpansionReport(
        sigma, coeffs, coeffs.get(sigma, 0), diagonal_coefficient(sigma), tri
    )
