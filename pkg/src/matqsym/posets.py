"""Labelled posets, linear extensions and P-partition enumerators.

A labelled poset here is a strict partial order on a set of distinct positive
integer labels; the labels double as the labelling used in the P-partition
conditions (strict inequality where a relation goes from a larger label to
a smaller one).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product as iproduct
from math import comb

from .config import DEFAULT_BUDGETS, BudgetExceeded
from .qsym import FUNDAMENTAL, QSymFn, check_composition


@dataclass(frozen=True)
class LabelledPoset:
    labels: tuple
    relations: frozenset  # strict pairs (a, b) meaning a < b, transitively closed

    @classmethod
    def from_relations(cls, labels, pairs=()) -> "LabelledPoset":
        labels = tuple(sorted(int(x) for x in labels))
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        if any(x < 1 for x in labels):
            raise ValueError("labels must be positive")
        lab = set(labels)
        up = {x: set() for x in labels}
        for a, b in pairs:
            if a not in lab or b not in lab:
                raise ValueError(f"relation {a}<{b} uses an unknown label")
            up[a].add(b)
        closed = _closure(up)
        if any(x in closed[x] for x in labels):
            raise ValueError("relations contain a cycle")
        rel = frozenset((a, b) for a in labels for b in closed[a])
        return cls(labels, rel)

    @classmethod
    def antichain(cls, labels) -> "LabelledPoset":
        return cls.from_relations(labels)

    @classmethod
    def chain(cls, labels) -> "LabelledPoset":
        labels = list(labels)
        return cls.from_relations(labels, zip(labels, labels[1:]))

    def __len__(self) -> int:
        return len(self.labels)

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.relations

    def covers(self) -> list:
        rel = self.relations
        return sorted(
            (a, b) for a, b in rel
            if not any((a, c) in rel and (c, b) in rel for c in self.labels)
        )

    def is_natural(self) -> bool:
        return all(a < b for a, b in self.relations)

    def is_strict(self) -> bool:
        return all(a > b for a, b in self.relations)

    def relabel(self, mapping: dict) -> "LabelledPoset":
        return LabelledPoset.from_relations(
            [mapping[x] for x in self.labels],
            [(mapping[a], mapping[b]) for a, b in self.relations],
        )

    def __str__(self) -> str:
        return format_poset(self)


def _closure(up: dict) -> dict:
    closed = {}

    def visit(x, stack):
        if x in closed:
            return closed[x]
        if x in stack:
            closed[x] = {x}  # marks the cycle
            return closed[x]
        stack.add(x)
        out = set()
        for y in up[x]:
            out.add(y)
            out |= visit(y, stack)
        stack.discard(x)
        closed[x] = out
        return out

    for x in up:
        visit(x, set())
    return closed


# ------------------------------------------------------------- enumeration

def linear_extensions(P: LabelledPoset, limit: int | None = None) -> list:
    """All linear extensions, taking minimal elements in increasing label order."""
    limit = DEFAULT_BUDGETS.max_poset_size if limit is None else limit
    if len(P) > limit:
        raise BudgetExceeded(f"poset has {len(P)} > {limit} elements")
    below = {x: {a for a, b in P.relations if b == x} for x in P.labels}
    out = []
    seq = []

    def rec(placed: set) -> None:
        if len(seq) == len(P.labels):
            out.append(tuple(seq))
            return
        for x in P.labels:
            if x not in placed and below[x] <= placed:
                seq.append(x)
                placed.add(x)
                rec(placed)
                placed.discard(x)
                seq.pop()

    rec(set())
    return out


def descent_composition(w) -> tuple:
    """Lengths of the maximal increasing runs of ``w``."""
    w = list(w)
    if not w:
        return ()
    runs, cur = [], 1
    for a, b in zip(w, w[1:]):
        if b > a:
            cur += 1
        else:
            runs.append(cur)
            cur = 1
    runs.append(cur)
    return tuple(runs)


def enumerator(P: LabelledPoset) -> QSymFn:
    """P-partition enumerator, sum of L_{descent composition} over extensions.

    Computed by memoised recursion on (placed elements, last element), so the
    linear extensions are never listed individually.
    """
    labels = P.labels
    n = len(labels)
    if n == 0:
        return QSymFn.one(FUNDAMENTAL)
    idx = {x: i for i, x in enumerate(labels)}
    below = [0] * n
    for a, b in P.relations:
        below[idx[b]] |= 1 << idx[a]
    full = (1 << n) - 1
    memo = {}

    def rec(placed: int, last: int) -> Counter:
        key = (placed, last)
        if key in memo:
            return memo[key]
        if placed == full:
            res = Counter({(1,): 1})
        else:
            res = Counter()
            for i in range(n):
                if not (placed >> i) & 1 and below[i] & placed == below[i]:
                    sub = rec(placed | (1 << i), i)
                    if labels[i] > labels[last]:
                        for comp, c in sub.items():
                            res[(comp[0] + 1,) + comp[1:]] += c
                    else:
                        for comp, c in sub.items():
                            res[(1,) + comp] += c
        memo[key] = res
        return res

    total = Counter()
    for i in range(n):
        if below[i] == 0:
            total.update(rec(1 << i, i))
    return QSymFn(total, FUNDAMENTAL)


def ppartition_count(P: LabelledPoset, k: int, budget: int | None = None) -> Counter:
    """Brute-force count of P-partitions f: P -> [k], keyed by value multiplicities.

    The key is the tuple (|f^-1(1)|, ..., |f^-1(k)|).
    """
    budget = DEFAULT_BUDGETS.brute_force if budget is None else budget
    n = len(P)
    if k <= 0:
        return Counter()
    if k ** n > budget:
        raise BudgetExceeded(f"{k}^{n} exceeds brute-force budget {budget}")
    labels = P.labels
    idx = {x: i for i, x in enumerate(labels)}
    rels = [(idx[a], idx[b], a > b) for a, b in P.relations]
    out = Counter()
    for f in iproduct(range(1, k + 1), repeat=n):
        ok = True
        for i, j, strict in rels:
            if f[i] > f[j] or (strict and f[i] == f[j]):
                ok = False
                break
        if ok:
            mult = [0] * k
            for v in f:
                mult[v - 1] += 1
            out[tuple(mult)] += 1
    return out


# -------------------------------------------------------------- operations

def _require_disjoint(P1: LabelledPoset, P2: LabelledPoset) -> None:
    if set(P1.labels) & set(P2.labels):
        raise ValueError("label sets collide")


def disjoint_sum(P1: LabelledPoset, P2: LabelledPoset) -> LabelledPoset:
    _require_disjoint(P1, P2)
    return LabelledPoset.from_relations(P1.labels + P2.labels, P1.relations | P2.relations)


def ordinal_sum(P1: LabelledPoset, P2: LabelledPoset) -> LabelledPoset:
    """P1 below P2: every element of P1 is less than every element of P2."""
    _require_disjoint(P1, P2)
    extra = {(a, b) for a in P1.labels for b in P2.labels}
    return LabelledPoset.from_relations(
        P1.labels + P2.labels, P1.relations | P2.relations | extra
    )


def standardize(P: LabelledPoset) -> LabelledPoset:
    """Replace the i-th smallest label by i."""
    return P.relabel({x: i + 1 for i, x in enumerate(P.labels)})


def shift(P: LabelledPoset, offset: int) -> LabelledPoset:
    return P.relabel({x: x + offset for x in P.labels})


def psi(P: LabelledPoset, m: int) -> LabelledPoset:
    """P (+) (n+m) (+) antichain{n+1, ..., n+m-1}, for P on [n]."""
    n = len(P)
    if P.labels != tuple(range(1, n + 1)):
        raise ValueError("psi expects a poset on [n]")
    if m < 1:
        raise ValueError("m must be positive")
    top = LabelledPoset.antichain([n + m])
    tail = LabelledPoset.antichain(range(n + 1, n + m))
    return ordinal_sum(ordinal_sum(P, top), tail)


def natural_labelling(P: LabelledPoset) -> LabelledPoset:
    """Relabel by the first linear extension so labels increase upward."""
    order = _topological(P)
    return P.relabel({x: sorted(P.labels)[i] for i, x in enumerate(order)})


def strict_labelling(P: LabelledPoset) -> LabelledPoset:
    """Relabel so labels decrease upward (the reverse of natural_labelling)."""
    order = _topological(P)
    labs = sorted(P.labels, reverse=True)
    return P.relabel({x: labs[i] for i, x in enumerate(order)})


def _topological(P: LabelledPoset) -> list:
    below = {x: {a for a, b in P.relations if b == x} for x in P.labels}
    placed, order = set(), []
    while len(order) < len(P.labels):
        x = min(y for y in P.labels if y not in placed and below[y] <= placed)
        placed.add(x)
        order.append(x)
    return order


# --------------------------------------------------- appendix poset families

def check_sigma(sigma: str) -> str:
    sigma = str(sigma).strip()
    if not sigma or set(sigma) - {"0", "1"}:
        raise ValueError(f"sigma must be a nonempty 0/1 string: {sigma!r}")
    if sigma[0] != "0":
        raise ValueError(f"sigma must begin with 0: {sigma!r}")
    return sigma


def r_sigma(sigma: str) -> LabelledPoset:
    """Height-one poset on [n] with i < j whenever i < j, sigma_i = 0, sigma_j = 1."""
    sigma = check_sigma(sigma)
    n = len(sigma)
    pairs = [
        (i + 1, j + 1)
        for i in range(n) for j in range(i + 1, n)
        if sigma[i] == "0" and sigma[j] == "1"
    ]
    return LabelledPoset.from_relations(range(1, n + 1), pairs)


def q_sigma(sigma: str) -> LabelledPoset:
    sigma = check_sigma(sigma)
    zeros = len(sigma) - len(sigma.lstrip("0"))
    P = LabelledPoset.antichain(range(1, zeros + 1))
    for n, bit in enumerate(sigma[zeros:], start=zeros):
        if bit == "1":
            P = ordinal_sum(P, LabelledPoset.antichain([n + 1]))
        else:
            # new element n+1 above n, then swap the labels n and n+1
            below = {a for a, b in P.relations if b == n} | {n}
            grown = LabelledPoset.from_relations(
                P.labels + (n + 1,), P.relations | {(a, n + 1) for a in below}
            )
            P = grown.relabel({**{x: x for x in P.labels}, n: n + 1, n + 1: n})
    return P


def stanley_p_alpha(alpha) -> LabelledPoset:
    """Naturally labelled ordinal sum of antichains of sizes alpha_1, ..., alpha_k."""
    alpha = check_composition(alpha)
    P = LabelledPoset.antichain([])
    start = 1
    for a in alpha:
        P = ordinal_sum(P, LabelledPoset.antichain(range(start, start + a)))
        start += a
    return P


def stanley_index_composition(bits: str) -> tuple:
    """Composition read from a 0/1 string where each 1 opens a new level.

    E.g. ``"001" -> (2, 1)``, ``"011" -> (1, 1, 1)``.
    """
    bits = check_sigma(bits)
    parts = []
    for b in bits:
        if b == "1" or not parts:
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


@dataclass(frozen=True)
class BlocksAndZ:
    blocks: tuple  # tuple of tuples of positions (1-based)
    z: tuple

    def sigma(self) -> str:
        out = []
        for block, z in zip(self.blocks, self.z):
            out.append("0" * z + "1" * (len(block) - z))
        return "".join(out)


def blocks_and_z(sigma: str) -> BlocksAndZ:
    """Break [n] wherever sigma reads 1 then 0; count zeros per block."""
    sigma = check_sigma(sigma)
    blocks, cur = [], [1]
    for i in range(1, len(sigma)):
        if sigma[i - 1] == "1" and sigma[i] == "0":
            blocks.append(tuple(cur))
            cur = []
        cur.append(i + 1)
    blocks.append(tuple(cur))
    z = tuple(sum(sigma[p - 1] == "0" for p in b) for b in blocks)
    return BlocksAndZ(tuple(blocks), z)


def diagonal_coefficient(sigma: str) -> int:
    bz = blocks_and_z(sigma)
    out = 1
    for block, z in zip(bz.blocks, bz.z):
        out *= comb(len(block), z)
    return out


def w_sigma_descents(sigma: str) -> frozenset:
    sigma = check_sigma(sigma)
    return frozenset(i for i in range(1, len(sigma)) if sigma[i] == "0")


def sigma_strings(n: int) -> list:
    """All 0/1 strings of length n starting with 0, in lex order."""
    if n < 1:
        raise ValueError("n must be positive")
    return ["0" + "".join(bits) for bits in iproduct("01", repeat=n - 1)]


# ------------------------------------------------------------- text format

def format_poset(P: LabelledPoset) -> str:
    n = len(P)
    if P.labels != tuple(range(1, n + 1)):
        P = standardize(P)
    return f"{n}; " + ", ".join(f"{a}<{b}" for a, b in P.covers())


def parse_poset(text: str) -> LabelledPoset:
    head, _, body = text.partition(";")
    n = int(head.strip())
    pairs = []
    for chunk in body.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        a, _, b = chunk.partition("<")
        pairs.append((int(a), int(b)))
    return LabelledPoset.from_relations(range(1, n + 1), pairs)
