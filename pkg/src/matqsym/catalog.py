"""Isomorphism testing and enumeration of small matroids.

Enumeration grows matroids one element at a time.  Every matroid on [n]
either has n as a coloop (so it is an isthmus added to a matroid on [n-1])
or deleting n leaves the rank unchanged, in which case it is a single-element
extension.  Single-element extensions of M correspond to linear subclasses
of hyperplanes of M: the new element e is placed so that I + e is a base
exactly when the hyperplane spanned by the (r-1)-set I lies outside the
subclass.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .config import DEFAULT_BUDGETS, BudgetExceeded
from .matroid import (
    Matroid,
    add_isthmus,
    elements_of,
    empty_matroid,
    exchange_witness,
    mask_of,
)


# ------------------------------------------------------------- invariants

def _pair_degrees(M: Matroid) -> dict:
    """Number of bases containing both e and f, for e != f (and e == f)."""
    out = {}
    for e in M.ground:
        be = 1 << (e - 1)
        for f in M.ground:
            bf = 1 << (f - 1)
            out[e, f] = sum(1 for b in M.bases if b & be and b & bf)
    return out


def element_colours(M: Matroid) -> dict:
    """Colour refinement on elements; isomorphisms preserve the colours."""
    pd = _pair_degrees(M)
    loops = M.loops()
    col = {e: hash((pd[e, e], e in loops)) for e in M.ground}
    for _ in range(M.n):
        new = {
            e: hash((col[e], tuple(sorted((col[f], pd[e, f]) for f in M.ground if f != e))))
            for e in M.ground
        }
        if len(set(new.values())) == len(set(col.values())):
            col = new
            break
        col = new
    return col


def invariant_key(M: Matroid) -> tuple:
    col = element_colours(M)
    return (M.n, M.rank, len(M.bases), tuple(sorted(col.values())))


def isomorphism(M1: Matroid, M2: Matroid, max_n: int | None = None):
    """A dict mapping ground(M1) -> ground(M2) carrying bases to bases, or None."""
    max_n = DEFAULT_BUDGETS.iso_max_n if max_n is None else max_n
    if M1.n != M2.n or M1.rank != M2.rank or len(M1.bases) != len(M2.bases):
        return None
    if M1.n > max_n:
        raise BudgetExceeded(f"isomorphism search limited to n <= {max_n}")
    c1, c2 = element_colours(M1), element_colours(M2)
    if sorted(c1.values()) != sorted(c2.values()):
        return None
    pd1, pd2 = _pair_degrees(M1), _pair_degrees(M2)
    # most constrained classes first
    sizes = {}
    for v in c1.values():
        sizes[v] = sizes.get(v, 0) + 1
    order = sorted(M1.ground, key=lambda e: (sizes[c1[e]], c1[e], e))
    phi, used = {}, set()

    def rec(i: int):
        if i == len(order):
            image = {mask_of(phi[e] for e in elements_of(b)) for b in M1.bases}
            return dict(phi) if image == M2.bases else None
        e = order[i]
        for f in M2.ground:
            if f in used or c2[f] != c1[e]:
                continue
            if any(pd1[e, a] != pd2[f, phi[a]] for a in phi):
                continue
            phi[e] = f
            used.add(f)
            got = rec(i + 1)
            if got is not None:
                return got
            del phi[e]
            used.discard(f)
        return None

    return rec(0)


def is_isomorphic(M1: Matroid, M2: Matroid, max_n: int | None = None) -> bool:
    return isomorphism(M1, M2, max_n) is not None


class IsoClasses:
    """Accumulates matroids, keeping one representative per isomorphism class."""

    def __init__(self):
        self._buckets = {}
        self.reps = []

    def add(self, M: Matroid) -> bool:
        key = invariant_key(M)
        bucket = self._buckets.setdefault(key, [])
        if M.bases in {N.bases for N in bucket}:
            return False
        for N in bucket:
            if is_isomorphic(M, N):
                return False
        bucket.append(M)
        self.reps.append(M)
        return True


# ------------------------------------------------------------- extensions

def hyperplanes(M: Matroid) -> list:
    """Flats of rank r-1, as sorted masks."""
    if M.rank == 0:
        return []
    out = set()
    for b in M.bases:
        for e in elements_of(b):
            out.add(M.closure(b & ~(1 << (e - 1))))
    return sorted(out)


def linear_subclasses(M: Matroid) -> list:
    """All linear subclasses of the hyperplanes of M, as frozensets of masks.

    A set of hyperplanes is a linear subclass when, for any two members
    meeting in a flat of rank r - 2, every hyperplane containing that flat is
    a member.  Listed with NextClosure in a fixed order.
    """
    H = hyperplanes(M)
    h = len(H)
    r = M.rank
    # for each pair meeting in rank r-2: the hyperplanes above their meet
    above = {}
    for i, j in combinations(range(h), 2):
        meet = H[i] & H[j]
        if M.rank_of(meet) == r - 2:
            above[i, j] = frozenset(k for k in range(h) if H[k] & meet == meet)

    def close(S: frozenset) -> frozenset:
        S = set(S)
        changed = True
        while changed:
            changed = False
            for (i, j), ks in above.items():
                if i in S and j in S and not ks <= S:
                    S |= ks
                    changed = True
        return frozenset(S)

    out = []
    A = close(frozenset())
    while True:
        out.append(A)
        if len(A) == h:
            break
        nxt = None
        for i in range(h - 1, -1, -1):
            if i in A:
                continue
            B = close(frozenset(x for x in A if x < i) | {i})
            if not any(x < i and x not in A for x in B):
                nxt = B
                break
        if nxt is None:
            break
        A = nxt
    return [frozenset(H[i] for i in S) for S in out]


def extension(M: Matroid, subclass) -> Matroid:
    """Add element max+1 placed according to a linear subclass of hyperplanes."""
    e = max(M.ground, default=0) + 1
    bit = 1 << (e - 1)
    new = set(M.bases)
    for b in M.bases:
        for x in elements_of(b):
            I = b & ~(1 << (x - 1))
            if M.closure(I) not in subclass:
                new.add(I | bit)
    return Matroid._make(M.ground + (e,), new)


def single_element_extensions(M: Matroid) -> list:
    if M.rank == 0:
        return [extension(M, frozenset())]
    return [extension(M, S) for S in linear_subclasses(M)]


@lru_cache(maxsize=None)
def _catalog(n: int, r: int) -> tuple:
    if r < 0 or r > n:
        return ()
    if n == 0:
        return (empty_matroid(),)
    classes = IsoClasses()
    for M in _catalog(n - 1, r - 1):
        classes.add(add_isthmus(M))
    for M in _catalog(n - 1, r):
        for N in single_element_extensions(M):
            classes.add(N)
    return tuple(sorted(classes.reps, key=_sort_key))


def _sort_key(M: Matroid) -> tuple:
    return (-len(M.bases), sorted(M.bases))


def _by_subsets(n: int, r: int) -> list:
    """Exhaustive search over families of r-subsets (small cases only)."""
    cand = [mask_of(c) for c in combinations(range(1, n + 1), r)]
    if len(cand) > 20:
        raise BudgetExceeded(f"binom({n},{r}) = {len(cand)} > 20 for subset search")
    classes = IsoClasses()
    for code in range(1, 1 << len(cand)):
        fam = frozenset(c for i, c in enumerate(cand) if code >> i & 1)
        if exchange_witness(fam) is None:
            classes.add(Matroid._make(range(1, n + 1), fam))
    return sorted(classes.reps, key=_sort_key)


def enumerate_matroids(n: int, r: int, connected_only: bool = False, method: str = "extension") -> list:
    """Matroids of rank r on [n], one per isomorphism class."""
    if not 0 <= r <= n:
        return []
    if method == "extension":
        if n > DEFAULT_BUDGETS.iso_max_n:
            raise BudgetExceeded(f"enumeration limited to n <= {DEFAULT_BUDGETS.iso_max_n}")
        out = list(_catalog(n, r))
    elif method == "subsets":
        out = _by_subsets(n, r)
    else:
        raise ValueError(f"unknown method {method!r}")
    if connected_only:
        out = [M for M in out if M.is_connected()]
    return out


def all_matroids(n: int, connected_only: bool = False) -> list:
    out = []
    for r in range(n + 1):
        out.extend(enumerate_matroids(n, r, connected_only))
    return out


def catalog_upto(nmax: int) -> list:
    out = []
    for n in range(nmax + 1):
        out.extend(all_matroids(n))
    return out


# ------------------------------------------------------------ weak images

def weak_images(M: Matroid, connected_only: bool = False, max_bases: int | None = None) -> list:
    """All matroids on the same ground set and rank whose bases lie inside B(M).

    Depth-first over include/exclude decisions for each base, pruning as soon
    as some exchange requirement between two included bases has no surviving
    candidate.
    """
    max_bases = DEFAULT_BUDGETS.weak_image_max_bases if max_bases is None else max_bases
    bases = sorted(M.bases)
    N = len(bases)
    if N > max_bases:
        raise BudgetExceeded(f"{N} bases > {max_bases} for weak-image search")
    index = {b: i for i, b in enumerate(bases)}
    # requirement (i, j, e): some base B_i - e + f (f in B_j - B_i) must be present
    reqs = []
    for i, bi in enumerate(bases):
        for j, bj in enumerate(bases):
            if i == j:
                continue
            for e in elements_of(bi & ~bj):
                rest = bi & ~(1 << (e - 1))
                cands = frozenset(
                    index[rest | (1 << (f - 1))]
                    for f in elements_of(bj & ~bi)
                    if rest | (1 << (f - 1)) in index
                )
                reqs.append((i, j, cands))
    by_pair_member = [[] for _ in range(N)]
    for req in reqs:
        i, j, cands = req
        by_pair_member[i].append(req)
        by_pair_member[j].append(req)
        for c in cands:
            by_pair_member[c].append(req)

    state = [None] * N  # True include, False exclude
    out = []

    def violated(k: int) -> bool:
        for i, j, cands in by_pair_member[k]:
            if state[i] and state[j] and all(state[c] is False for c in cands):
                return True
        return False

    def rec(k: int) -> None:
        if k == N:
            fam = frozenset(b for b, s in zip(bases, state) if s)
            if fam:
                out.append(Matroid._make(M.ground, fam))
            return
        for choice in (True, False):
            state[k] = choice
            if not violated(k):
                rec(k + 1)
        state[k] = None

    rec(0)
    if connected_only:
        out = [W for W in out if W.is_connected()]
    return sorted(out, key=_sort_key)


def iso_representatives(matroids) -> list:
    classes = IsoClasses()
    for M in matroids:
        classes.add(M)
    return classes.reps


def base_count_histogram(matroids) -> dict:
    out = {}
    for M in matroids:
        out[len(M.bases)] = out.get(len(M.bases), 0) + 1
    return dict(sorted(out.items()))


def permuted_images(M: Matroid) -> set:
    """All relabellings of M by permutations of its ground set (small n)."""
    g = M.ground
    out = set()
    for p in permutations(g):
        mp = dict(zip(g, p))
        out.add(frozenset(mask_of(mp[e] for e in elements_of(b)) for b in M.bases))
    return out
