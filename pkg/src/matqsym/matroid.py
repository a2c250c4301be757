"""Matroids given by their bases.

A matroid lives on a tuple of positive integer labels (``ground``); bases are
stored as bit masks where bit ``e - 1`` stands for element ``e``.  Minors keep
the original labels, so a contraction of a matroid on [5] by {2} lives on
(1, 3, 4, 5) until it is standardized.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .config import DEFAULT_BUDGETS, BudgetExceeded
from .posets import LabelledPoset, blocks_and_z, check_sigma, strict_labelling


class MatroidAxiomError(ValueError):
    """Raised when a family of sets violates the base axioms.

    ``witness`` is ``(B1, B2, e)`` for an exchange failure, otherwise None.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def mask_of(elements) -> int:
    out = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"elements must be positive, got {e}")
        out |= 1 << (e - 1)
    return out


def elements_of(mask: int) -> tuple:
    out, e = [], 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def exchange_witness(bases: frozenset):
    """Return (B1, B2, e) violating basis exchange, or None if none exists."""
    for b1 in bases:
        for b2 in bases:
            diff = b1 & ~b2
            if not diff:
                continue
            other = b2 & ~b1
            x = diff
            while x:
                low = x & -x
                x ^= low
                base = b1 ^ low
                y, ok = other, False
                while y:
                    lo2 = y & -y
                    y ^= lo2
                    if base | lo2 in bases:
                        ok = True
                        break
                if not ok:
                    return (elements_of(b1), elements_of(b2), elements_of(low)[0])
    return None


class Matroid:
    __slots__ = ("ground", "bases", "rank", "__dict__")

    def __init__(self, ground, bases, validate: bool = True):
        ground = tuple(sorted(int(e) for e in ground))
        if len(set(ground)) != len(ground):
            raise ValueError("repeated ground element")
        bases = frozenset(bases)
        if not bases:
            raise MatroidAxiomError("a matroid needs at least one base")
        gmask = mask_of(ground)
        sizes = {_popcount(b) for b in bases}
        if len(sizes) != 1:
            raise MatroidAxiomError(f"bases have different sizes {sorted(sizes)}")
        if any(b & ~gmask for b in bases):
            raise MatroidAxiomError("a base uses an element outside the ground set")
        if validate:
            w = exchange_witness(bases)
            if w is not None:
                raise MatroidAxiomError(
                    f"exchange fails for B1={set(w[0])}, B2={set(w[1])}, e={w[2]}", w
                )
        self.ground = ground
        self.bases = bases
        self.rank = sizes.pop()

    # -- construction ------------------------------------------------------
    @classmethod
    def from_bases(cls, n: int, base_lists) -> "Matroid":
        bases = set()
        for b in base_lists:
            b = list(b)
            if any(not 1 <= e <= n for e in b):
                raise MatroidAxiomError(f"base {b} not inside [1..{n}]")
            if len(set(b)) != len(b):
                raise MatroidAxiomError(f"base {b} repeats an element")
            bases.add(mask_of(b))
        return cls(range(1, n + 1), bases)

    @classmethod
    def _make(cls, ground, bases) -> "Matroid":
        return cls(ground, bases, validate=False)

    # -- basic data --------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.ground)

    @cached_property
    def ground_mask(self) -> int:
        return mask_of(self.ground)

    @cached_property
    def corank(self) -> int:
        return self.n - self.rank

    def base_list(self) -> list:
        return sorted((elements_of(b) for b in self.bases))

    def __len__(self) -> int:
        return len(self.bases)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self.bases == other.bases
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.bases))

    def __repr__(self) -> str:
        bs = ",".join("".join(map(str, b)) or "{}" for b in self.base_list())
        return f"Matroid(ground={list(self.ground)}, rank={self.rank}, bases=[{bs}])"

    def is_base(self, B) -> bool:
        return (B if isinstance(B, int) else mask_of(B)) in self.bases

    def rank_of(self, A) -> int:
        a = A if isinstance(A, int) else mask_of(A)
        return max(_popcount(b & a) for b in self.bases)

    def is_independent(self, A) -> bool:
        a = A if isinstance(A, int) else mask_of(A)
        return any(b & a == a for b in self.bases)

    def closure(self, A) -> int:
        a = A if isinstance(A, int) else mask_of(A)
        r = self.rank_of(a)
        out = a
        for e in self.ground:
            bit = 1 << (e - 1)
            if not a & bit and self.rank_of(a | bit) == r:
                out |= bit
        return out

    def loops(self) -> frozenset:
        union = 0
        for b in self.bases:
            union |= b
        return frozenset(e for e in self.ground if not union >> (e - 1) & 1)

    def coloops(self) -> frozenset:
        inter = self.ground_mask
        for b in self.bases:
            inter &= b
        return frozenset(elements_of(inter))

    def splits_completely(self) -> bool:
        return len(self.bases) == 1

    # -- derived matroids --------------------------------------------------
    def dual(self) -> "Matroid":
        g = self.ground_mask
        return Matroid._make(self.ground, (g & ~b for b in self.bases))

    def restrict(self, A) -> "Matroid":
        a = (A if isinstance(A, int) else mask_of(A)) & self.ground_mask
        r = self.rank_of(a)
        return Matroid._make(
            elements_of(a), {b & a for b in self.bases if _popcount(b & a) == r}
        )

    def delete(self, A) -> "Matroid":
        a = A if isinstance(A, int) else mask_of(A)
        return self.restrict(self.ground_mask & ~a)

    def contract(self, A) -> "Matroid":
        a = (A if isinstance(A, int) else mask_of(A)) & self.ground_mask
        r = self.rank_of(a)
        rest = self.ground_mask & ~a
        return Matroid._make(
            elements_of(rest), {b & rest for b in self.bases if _popcount(b & a) == r}
        )

    def relabel(self, mapping: dict) -> "Matroid":
        def move(b):
            return mask_of(mapping[e] for e in elements_of(b))

        return Matroid._make([mapping[e] for e in self.ground], {move(b) for b in self.bases})

    def standardize(self) -> "Matroid":
        return self.relabel({e: i + 1 for i, e in enumerate(self.ground)})

    def shift(self, offset: int) -> "Matroid":
        return self.relabel({e: e + offset for e in self.ground})

    # -- connectivity ------------------------------------------------------
    def min_separators(self) -> list:
        """Connected components as a sorted list of frozensets."""
        parent = {e: e for e in self.ground}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for b in self.bases:
            for e in elements_of(b):
                rest = b & ~(1 << (e - 1))
                for f in self.ground:
                    bit = 1 << (f - 1)
                    if not b & bit and rest | bit in self.bases:
                        parent[find(e)] = find(f)
        comps = {}
        for e in self.ground:
            comps.setdefault(find(e), set()).add(e)
        return sorted((frozenset(c) for c in comps.values()), key=min)

    def is_separator(self, A) -> bool:
        a = (A if isinstance(A, int) else mask_of(A)) & self.ground_mask
        return self.rank_of(a) + self.rank_of(self.ground_mask & ~a) == self.rank

    def is_connected(self) -> bool:
        return len(self.min_separators()) <= 1

    # -- weights -----------------------------------------------------------
    def _weights(self, f) -> dict:
        if isinstance(f, dict):
            w = {e: f[e] for e in self.ground}
        else:
            f = list(f)
            if len(f) != self.n:
                raise ValueError("weight vector length differs from ground set size")
            w = dict(zip(self.ground, f))
        return w

    def weight(self, B, f) -> int:
        w = self._weights(f)
        return sum(w[e] for e in elements_of(B if isinstance(B, int) else mask_of(B)))

    def min_weight_bases(self, f) -> tuple:
        """(minimum weight, sorted list of minimizing bases as tuples)."""
        w = self._weights(f)
        best, arg = None, []
        for b in self.bases:
            s = sum(w[e] for e in elements_of(b))
            if best is None or s < best:
                best, arg = s, [b]
            elif s == best:
                arg.append(b)
        return best, sorted(elements_of(b) for b in arg)

    def greedy_base(self, f) -> tuple:
        """Kruskal-style greedy: scan elements by increasing weight."""
        w = self._weights(f)
        cur = 0
        for e in sorted(self.ground, key=lambda e: (w[e], e)):
            bit = 1 << (e - 1)
            if self.is_independent(cur | bit):
                cur |= bit
        return elements_of(cur)

    def is_generic(self, f) -> bool:
        return len(self.min_weight_bases(f)[1]) == 1

    # -- posets ------------------------------------------------------------
    def base_poset(self, B) -> LabelledPoset:
        """Height-one poset: e < e' when e in B, e' not in B, B - e + e' a base."""
        b = B if isinstance(B, int) else mask_of(B)
        if b not in self.bases:
            raise ValueError(f"{elements_of(b)} is not a base")
        pairs = []
        for e in elements_of(b):
            rest = b & ~(1 << (e - 1))
            for f in self.ground:
                bit = 1 << (f - 1)
                if not b & bit and rest | bit in self.bases:
                    pairs.append((e, f))
        return LabelledPoset.from_relations(self.ground, pairs)

    def strict_base_poset(self, B) -> LabelledPoset:
        return strict_labelling(self.base_poset(B))

    def lambda_partition(self) -> tuple:
        """Parallel-class sizes of a loopless rank-2 matroid, decreasing."""
        if self.rank != 2:
            raise ValueError("lambda_partition needs a rank-2 matroid")
        if self.loops():
            raise ValueError("lambda_partition needs a loopless matroid")
        classes = []
        for e in self.ground:
            for c in classes:
                if self.rank_of({e, c[0]}) == 1:
                    c.append(e)
                    break
            else:
                classes.append([e])
        return tuple(sorted((len(c) for c in classes), reverse=True))


# --------------------------------------------------------------- builders

def empty_matroid() -> Matroid:
    return Matroid((), {0})


def loop(label: int = 1) -> Matroid:
    return Matroid((label,), {0})


def isthmus(label: int = 1) -> Matroid:
    return Matroid((label,), {mask_of([label])})


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got U({r},{n})")
    return Matroid._make(range(1, n + 1), (mask_of(c) for c in combinations(range(1, n + 1), r)))


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """Direct sum; M2 is shifted past M1 when labels collide."""
    if set(M1.ground) & set(M2.ground):
        M2 = M2.standardize().shift(max(M1.ground, default=0))
    return Matroid._make(M1.ground + M2.ground, {a | b for a in M1.bases for b in M2.bases})


def rank2_matroid(lam) -> Matroid:
    """Loopless rank-2 matroid on [sum lam] with parallel classes of sizes lam."""
    lam = tuple(lam)
    if len(lam) < 2 or any(x < 1 for x in lam):
        raise ValueError("need at least two positive class sizes")
    cls_of, e = {}, 1
    for i, size in enumerate(lam):
        for _ in range(size):
            cls_of[e] = i
            e += 1
    n = e - 1
    return Matroid._make(
        range(1, n + 1),
        (mask_of((a, b)) for a, b in combinations(range(1, n + 1), 2) if cls_of[a] != cls_of[b]),
    )


def add_isthmus(M: Matroid) -> Matroid:
    e = max(M.ground, default=0) + 1
    bit = 1 << (e - 1)
    return Matroid._make(M.ground + (e,), {b | bit for b in M.bases})


def principal_extension(M: Matroid) -> Matroid:
    """Free extension by a new element of unchanged rank (a loop on rank 0)."""
    e = max(M.ground, default=0) + 1
    bit = 1 << (e - 1)
    if M.rank == 0:
        return Matroid._make(M.ground + (e,), M.bases)
    new = set(M.bases)
    for b in M.bases:
        for x in elements_of(b):
            new.add((b & ~(1 << (x - 1))) | bit)
    return Matroid._make(M.ground + (e,), new)


def freedom_matroid(sigma: str) -> Matroid:
    """Build by reading sigma: 0 adds an isthmus, 1 a principal extension."""
    sigma = check_sigma(sigma)
    M = empty_matroid()
    for bit in sigma:
        M = add_isthmus(M) if bit == "0" else principal_extension(M)
    return M


def freedom_bases_direct(sigma: str) -> Matroid:
    """r-subsets meeting each flat F_i in at most z_1 + ... + z_i elements."""
    bz = blocks_and_z(sigma)
    n = len(sigma)
    r = sum(bz.z)
    flats, caps, acc, fl = [], [], 0, 0
    for block, z in zip(bz.blocks, bz.z):
        fl |= mask_of(block)
        acc += z
        flats.append(fl)
        caps.append(acc)
    bases = set()
    for c in combinations(range(1, n + 1), r):
        m = mask_of(c)
        if all(_popcount(m & F) <= k for F, k in zip(flats, caps)):
            bases.add(m)
    return Matroid._make(range(1, n + 1), bases)


# ------------------------------------------------------------ intersection

@dataclass(frozen=True)
class Intersection:
    bases: frozenset  # masks
    is_matroid: bool
    matroid: Matroid | None
    witness: tuple | None = None

    def base_list(self) -> list:
        return sorted(elements_of(b) for b in self.bases)


def intersect(M1: Matroid, M2: Matroid) -> Intersection:
    if M1.ground != M2.ground:
        raise ValueError("matroids live on different ground sets")
    if M1.rank != M2.rank:
        raise ValueError(f"rank mismatch {M1.rank} vs {M2.rank}")
    common = M1.bases & M2.bases
    if not common:
        return Intersection(frozenset(), False, None)
    w = exchange_witness(common)
    if w is not None:
        return Intersection(common, False, None, w)
    return Intersection(common, True, Matroid._make(M1.ground, common))


# ------------------------------------------------------------------ Tutte

class BivariatePoly:
    """Integer polynomial in x, y stored as {(i, j): coeff}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def swap(self) -> "BivariatePoly":
        return BivariatePoly({(j, i): c for (i, j), c in self.terms.items()})

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0])):
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                    "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
                ) if s
            )
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            sign = "-" if c < 0 else "+"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    __repr__ = __str__


def _shifted_powers(k: int) -> list:
    """Coefficients of (t - 1)^k."""
    from math import comb

    return [comb(k, i) * (-1) ** (k - i) for i in range(k + 1)]


def tutte(M: Matroid, max_n: int | None = None) -> BivariatePoly:
    """Corank-nullity sum over all subsets."""
    max_n = DEFAULT_BUDGETS.tutte_max_n if max_n is None else max_n
    if M.n > max_n:
        raise BudgetExceeded(f"Tutte polynomial limited to n <= {max_n}")
    counts = {}
    els = M.ground
    for size in range(M.n + 1):
        for A in combinations(els, size):
            r = M.rank_of(mask_of(A))
            key = (M.rank - r, size - r)
            counts[key] = counts.get(key, 0) + 1
    terms = {}
    for (a, b), cnt in counts.items():
        for i, cx in enumerate(_shifted_powers(a)):
            for j, cy in enumerate(_shifted_powers(b)):
                terms[(i, j)] = terms.get((i, j), 0) + cnt * cx * cy
    return BivariatePoly(terms)
