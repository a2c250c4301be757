"""Matroid polytope decompositions seen through QSym / m^2.

Decompositions are checked combinatorially: pieces are matroids whose base
families cover the parent, every nonempty multiple intersection must again
be a matroid, and the inclusion-exclusion identity for F must hold.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.optimize import linprog

from .catalog import weak_images
from .config import DEFAULT_BUDGETS, BudgetExceeded
from .invariant import F
from .matroid import Matroid, _popcount, exchange_witness, mask_of
from .quotient import QuotientVector, project_mod_m2, quotient_presentation
from .qsym import FUNDAMENTAL, QSymFn


def barF(M: Matroid) -> QuotientVector:
    """Image of F(M) in (QSym / m^2)_n."""
    if M.n == 0:
        raise ValueError("the quotient is only defined in positive degree")
    return project_mod_m2(F(M), quotient_presentation(M.n))


# ----------------------------------------------------------- certificates

@dataclass(frozen=True)
class DecompositionCertificate:
    parent: Matroid
    pieces: tuple

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))


@dataclass
class ValuationReport:
    structure_ok: bool
    intersections_ok: bool
    identity_ok: bool
    quotient_ok: bool
    problems: list = field(default_factory=list)
    inclusion_exclusion: QSymFn | None = None

    @property
    def ok(self) -> bool:
        return self.structure_ok and self.intersections_ok and self.identity_ok

    @property
    def status(self) -> str:
        if not (self.structure_ok and self.intersections_ok):
            return "invalid-certificate"
        if not self.identity_ok:
            return "identity-failure"
        return "verified"


def certificate_problems(cert: DecompositionCertificate) -> list:
    M, pieces = cert.parent, cert.pieces
    out = []
    if len(pieces) < 2:
        out.append("a decomposition needs at least two pieces")
    union = frozenset()
    for i, P in enumerate(pieces):
        if P.ground != M.ground or P.rank != M.rank:
            out.append(f"piece {i} differs in ground set or rank")
        if not P.bases <= M.bases:
            out.append(f"piece {i} has bases outside the parent")
        if P.bases == M.bases:
            out.append(f"piece {i} equals the parent")
        union |= P.bases
    if union != M.bases:
        out.append("pieces do not cover every base of the parent")
    return out


def check_valuation(cert: DecompositionCertificate) -> ValuationReport:
    """Inclusion-exclusion F(M) = sum_j (-1)^(j-1) sum F(M_i1 & ... & M_ij)."""
    probs = certificate_problems(cert)
    structure_ok = not probs
    inter_ok = True
    total = QSymFn.zero(FUNDAMENTAL)
    qtotal = None
    pieces = cert.pieces
    for j in range(1, len(pieces) + 1):
        sign = 1 if j % 2 else -1
        for combo in combinations(range(len(pieces)), j):
            fam = frozenset.intersection(*(pieces[i].bases for i in combo))
            if not fam:
                continue
            w = exchange_witness(fam)
            if w is not None:
                inter_ok = False
                probs.append(f"intersection of pieces {combo} is not a matroid: {w}")
                continue
            N = Matroid._make(cert.parent.ground, fam)
            if j >= 2 and len(N.min_separators()) <= len(cert.parent.min_separators()):
                probs.append(f"intersection of pieces {combo} does not drop dimension")
                inter_ok = False
            total = total + F(N) * sign
            if j == 1:
                v = barF(N)
                qtotal = v if qtotal is None else qtotal + v
    identity_ok = inter_ok and total == F(cert.parent)
    quotient_ok = qtotal is not None and qtotal == barF(cert.parent)
    if not identity_ok and inter_ok:
        probs.append("inclusion-exclusion identity fails")
    return ValuationReport(structure_ok, inter_ok, identity_ok, quotient_ok, probs, total)


# ------------------------------------------------------- hyperplane splits

@dataclass(frozen=True)
class HyperplaneSplit:
    S: tuple
    k: int
    certificate: DecompositionCertificate


def find_hyperplane_splits(M: Matroid, max_n: int | None = None) -> list:
    """Splits by a hyperplane sum_{e in S} x_e = k into two matroid polytopes.

    Both pieces must be matroids with as many connected components as M (so
    the pieces are full-dimensional).  Splits are reported once, keyed by
    the unordered pair of base families, with the smallest S found first.
    """
    max_n = DEFAULT_BUDGETS.split_max_n if max_n is None else max_n
    if M.n > max_n:
        raise BudgetExceeded(f"split search limited to n <= {max_n}")
    s_parent = len(M.min_separators())
    seen, out = set(), []
    for size in range(1, M.n):
        for S in combinations(M.ground, size):
            smask = mask_of(S)
            counts = {b: _popcount(b & smask) for b in M.bases}
            lo, hi = min(counts.values()), max(counts.values())
            for k in range(lo + 1, hi):
                b1 = frozenset(b for b, c in counts.items() if c <= k)
                b2 = frozenset(b for b, c in counts.items() if c >= k)
                key = frozenset((b1, b2))
                if key in seen:
                    continue
                seen.add(key)
                if exchange_witness(b1) or exchange_witness(b2):
                    continue
                P1 = Matroid._make(M.ground, b1)
                P2 = Matroid._make(M.ground, b2)
                if len(P1.min_separators()) != s_parent or len(P2.min_separators()) != s_parent:
                    continue
                out.append(HyperplaneSplit(S, k, DecompositionCertificate(M, (P1, P2))))
    return out


# ------------------------------------------------------ semigroup searches

@dataclass(frozen=True)
class SemigroupInstance:
    n: int
    generators: tuple  # of (label, QuotientVector)

    def __post_init__(self):
        gens = tuple(self.generators)
        lengths = {len(v.coords) for _, v in gens}
        if len(lengths) > 1:
            raise ValueError("generator vectors have different lengths")
        object.__setattr__(self, "generators", gens)

    def vectors(self) -> list:
        return [v.coords for _, v in self.generators]

    @classmethod
    def from_matroids(cls, matroids, labels=None) -> "SemigroupInstance":
        matroids = list(matroids)
        if not matroids:
            raise ValueError("need at least one matroid")
        labels = list(labels) if labels is not None else [str(i) for i in range(len(matroids))]
        return cls(matroids[0].n, tuple((lab, barF(M)) for lab, M in zip(labels, matroids)))


def positive_functional(vectors: list):
    """Integer c with c . v > 0 for every v, or None if none is found.

    A linear program proposes c with c . v >= 1; the result is rounded to a
    nearby rational, scaled to integers and re-verified exactly.
    """
    if not vectors:
        return None
    A = np.array(vectors, dtype=float)
    d = A.shape[1]
    res = linprog(
        c=np.zeros(d), A_ub=-A, b_ub=-np.ones(len(vectors)),
        bounds=[(None, None)] * d, method="highs",
    )
    if not res.success:
        return None
    for denom in (1, 2, 4, 8, 16, 64, 256, 1024, 10**6):
        fr = [Fraction(x).limit_denominator(denom) for x in res.x]
        scale = 1
        for f in fr:
            scale = scale * f.denominator // np.gcd(scale, f.denominator)
        c = [int(f * scale) for f in fr]
        if all(sum(a * b for a, b in zip(c, v)) > 0 for v in vectors):
            return tuple(c)
    return None


@dataclass
class SearchResult:
    status: str  # "found", "none" or "budget"
    witness: list | None = None  # labels
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def _dot(c, v) -> int:
    return sum(a * b for a, b in zip(c, v))


def decompositions(target: QuotientVector, inst: SemigroupInstance, max_terms: int,
                   min_terms: int = 2, node_budget: int | None = None, first_only: bool = False):
    """Multisets of generators (as index tuples) summing to ``target``.

    Returns (list of index tuples, status, nodes visited), status one of
    "complete" or "budget".  Zero generators are ignored.
    """
    node_budget = DEFAULT_BUDGETS.search_nodes if node_budget is None else node_budget
    vecs = inst.vectors()
    idx = [i for i, v in enumerate(vecs) if any(v)]
    c = positive_functional([vecs[i] for i in idx])
    goal = target.coords
    out = []
    failed = set()
    nodes = 0

    class _Stop(Exception):
        pass

    def rec(rem: tuple, start: int, chosen: list) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _Stop
        if not any(rem):
            if len(chosen) >= min_terms:
                out.append(tuple(chosen))
                return True
            return False
        if len(chosen) >= max_terms:
            return False
        key = (rem, start, len(chosen))
        if key in failed:
            return False
        hit = False
        crem = _dot(c, rem) if c is not None else None
        if c is not None and crem <= 0:
            failed.add(key)
            return False
        for pos in range(start, len(idx)):
            g = vecs[idx[pos]]
            if c is not None and _dot(c, g) > crem:
                continue
            nxt = tuple(a - b for a, b in zip(rem, g))
            chosen.append(idx[pos])
            got = rec(nxt, pos, chosen)
            chosen.pop()
            if got:
                hit = True
                if first_only:
                    return True
        if not hit:
            failed.add(key)
        return hit

    try:
        rec(tuple(goal), 0, [])
    except _Stop:
        return out, "budget", nodes
    return out, "complete", nodes


def decomposable_search(target: QuotientVector, inst: SemigroupInstance, max_terms: int,
                        node_budget: int | None = None) -> SearchResult:
    """Look for target = g_1 + ... + g_t with t >= 2 generators g_i."""
    found, status, nodes = decompositions(
        target, inst, max_terms, node_budget=node_budget, first_only=True
    )
    if found:
        labels = [inst.generators[i][0] for i in found[0]]
        vec = [0] * len(target.coords)
        for i in found[0]:
            vec = [a + b for a, b in zip(vec, inst.generators[i][1].coords)]
        if tuple(vec) != tuple(target.coords):
            raise ArithmeticError("witness does not re-verify")
        return SearchResult("found", labels, nodes)
    return SearchResult("budget" if status == "budget" else "none", None, nodes)


@dataclass
class HilbertBasisResult:
    indecomposable: list  # labels
    decomposable: dict  # label -> witness labels
    undecided: list  # labels whose search ran out of budget

    @property
    def complete(self) -> bool:
        return not self.undecided


def hilbert_basis(inst: SemigroupInstance, max_terms: int | None = None,
                  node_budget: int | None = None) -> HilbertBasisResult:
    """Split generators into those that are and are not sums of >= 2 generators."""
    ind, dec, und = [], {}, []
    for label, v in inst.generators:
        if not any(v.coords):
            dec[label] = []
            continue
        bound = max_terms if max_terms is not None else _term_bound(v, inst)
        res = decomposable_search(v, inst, bound, node_budget)
        if res.status == "found":
            dec[label] = res.witness
        elif res.status == "budget":
            und.append(label)
        else:
            ind.append(label)
    return HilbertBasisResult(ind, dec, und)


def _term_bound(v: QuotientVector, inst: SemigroupInstance) -> int:
    vecs = [g for g in inst.vectors() if any(g)]
    c = positive_functional(vecs)
    if c is None:
        return 2 ** inst.n
    return max(2, _dot(c, v.coords) // min(_dot(c, g) for g in vecs))


# ------------------------------------------------- weak-image decomposition

def weak_image_decomposition(M: Matroid, max_terms: int | None = None,
                             node_budget: int | None = None) -> SearchResult:
    """Is barF(M) a sum of >= 2 barF(M_i) with M_i connected proper weak images?"""
    gens = [W for W in weak_images(M, connected_only=True) if W.bases != M.bases]
    if not gens:
        return SearchResult("none")
    labels = [",".join("".join(map(str, b)) for b in W.base_list()) for W in gens]
    inst = SemigroupInstance.from_matroids(gens, labels)
    bound = max_terms if max_terms is not None else len(M.bases)
    return decomposable_search(barF(M), inst, bound, node_budget)
