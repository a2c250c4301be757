"""F(Q) for generalized permutohedra given by their vertex-edge graphs.

Covers matroid base polytopes and graphic zonotopes.  A weight f is
Q-generic when f . x is minimized over Q at a unique vertex; the poset at a
vertex v has i < j for every edge from v in a direction e_j - e_i.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

import numpy as np

from .config import DEFAULT_BUDGETS, BudgetExceeded
from .invariant import _all_minimizers, _unique_minimizer, minimizer_tally
from .matroid import Matroid, elements_of
from .posets import LabelledPoset, enumerator, strict_labelling
from .qsym import FUNDAMENTAL, QSymFn, antipode, specialize_ones


@dataclass(frozen=True)
class GenPermGraph:
    n: int
    vertices: tuple  # tuples of ints, length n
    edges: tuple  # pairs (a, b) of vertex indices, a < b

    def __post_init__(self):
        verts = tuple(tuple(int(x) for x in v) for v in self.vertices)
        if not verts:
            raise ValueError("a polytope needs at least one vertex")
        if any(len(v) != self.n for v in verts):
            raise ValueError("vertex of the wrong dimension")
        if len(set(verts)) != len(verts):
            raise ValueError("repeated vertex")
        edges = tuple(sorted({tuple(sorted((int(a), int(b)))) for a, b in self.edges}))
        for a, b in edges:
            if a == b or not (0 <= a < len(verts) and 0 <= b < len(verts)):
                raise ValueError(f"bad edge {(a, b)}")
            edge_direction(verts[a], verts[b])
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        if not _connected(len(verts), edges):
            raise ValueError("vertex-edge graph is not connected")

    def neighbours(self, i: int) -> list:
        return [b if a == i else a for a, b in self.edges if i in (a, b)]


def edge_direction(u, v) -> tuple:
    """(i, j, t) with v - u = t (e_j - e_i), t > 0, coordinates 1-based."""
    d = [b - a for a, b in zip(u, v)]
    nz = [(k, x) for k, x in enumerate(d) if x]
    if len(nz) != 2 or nz[0][1] != -nz[1][1]:
        raise ValueError(f"edge {u} -> {v} is not parallel to some e_j - e_i")
    (k1, x1), (k2, x2) = nz
    if x1 < 0:
        return (k1 + 1, k2 + 1, x2)
    return (k2 + 1, k1 + 1, x1)


def _connected(nv: int, edges) -> bool:
    adj = {i: [] for i in range(nv)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen, stack = {0}, [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == nv


def vertex_poset(Q: GenPermGraph, v: int) -> LabelledPoset:
    pairs = []
    for w in Q.neighbours(v):
        i, j, _ = edge_direction(Q.vertices[v], Q.vertices[w])
        pairs.append((i, j))
    return LabelledPoset.from_relations(range(1, Q.n + 1), pairs)


def F_genperm(Q: GenPermGraph, max_vertices: int = 5040) -> QSymFn:
    if len(Q.vertices) > max_vertices:
        raise BudgetExceeded(f"{len(Q.vertices)} vertices > {max_vertices}")
    out = Counter()
    for v in range(len(Q.vertices)):
        out.update(enumerator(strict_labelling(vertex_poset(Q, v))).terms)
    return QSymFn(out, FUNDAMENTAL)


def F_star_genperm(Q: GenPermGraph) -> QSymFn:
    f = antipode(F_genperm(Q))
    return -f if Q.n % 2 else f


def phi_genperm(Q: GenPermGraph):
    return specialize_ones(F_genperm(Q))


def phi_star_genperm(Q: GenPermGraph):
    return specialize_ones(F_star_genperm(Q))


def _vertex_array(Q: GenPermGraph) -> np.ndarray:
    return np.array(Q.vertices, dtype=np.int64).reshape(len(Q.vertices), Q.n)


def F_genperm_bruteforce(Q: GenPermGraph, k: int | None = None, budget: int | None = None) -> dict:
    """Monomial coefficients counted from Q-generic f: [n] -> [k]."""
    k = Q.n if k is None else k
    return minimizer_tally(_vertex_array(Q), Q.n, k, _unique_minimizer, budget)


def F_star_genperm_bruteforce(Q: GenPermGraph, k: int | None = None, budget: int | None = None) -> dict:
    """Monomial coefficients of F*(Q): each f weighted by its minimizing vertices."""
    k = Q.n if k is None else k
    return minimizer_tally(_vertex_array(Q), Q.n, k, _all_minimizers, budget)


def reciprocity_check(Q: GenPermGraph, brute_force: bool = True) -> bool:
    """phi(Q, -m) = (-1)^n phi*(Q, m), with F* also checked against brute force."""
    sign = -1 if Q.n % 2 else 1
    ok = phi_genperm(Q).reflect() == phi_star_genperm(Q).scale(sign)
    if brute_force:
        fs = F_star_genperm(Q).to("M")
        ok = ok and all(fs.coefficient(a) == c for a, c in F_star_genperm_bruteforce(Q).items())
    return ok


def from_matroid(M: Matroid) -> GenPermGraph:
    """Base polytope: indicator vectors of bases, edges single exchanges."""
    bases = sorted(M.bases)
    pos = {e: i for i, e in enumerate(M.ground)}
    verts = []
    for b in bases:
        v = [0] * M.n
        for e in elements_of(b):
            v[pos[e]] = 1
        verts.append(tuple(v))
    edges = [
        (i, j)
        for i in range(len(bases))
        for j in range(i + 1, len(bases))
        if bin(bases[i] ^ bases[j]).count("1") == 2
    ]
    return GenPermGraph(M.n, tuple(verts), tuple(edges))


# ------------------------------------------------------------------ graphs

@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset  # pairs (i, j) with 1 <= i < j <= n

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            i, j = (int(x) for x in e)
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {(i, j)} outside [1..{self.n}]")
            clean.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset((i, i + 1) for i in range(1, n)))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, frozenset())

    def sorted_edges(self) -> list:
        return sorted(self.edges)


def all_graphs(n: int):
    """Every simple graph on [n] (labelled)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for bits in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for t, p in enumerate(pairs) if bits >> t & 1))


def acyclic_orientations(G: SimpleGraph, limit: int = 50000) -> list:
    """Acyclic orientations as tuples of directed pairs (tail, head), sorted."""
    edges = G.sorted_edges()
    out = []
    for choice in iproduct((0, 1), repeat=len(edges)):
        arcs = tuple(e if c == 0 else (e[1], e[0]) for e, c in zip(edges, choice))
        if _acyclic(G.n, arcs):
            out.append(arcs)
            if len(out) > limit:
                raise BudgetExceeded(f"more than {limit} acyclic orientations")
    return out


def _acyclic(n: int, arcs) -> bool:
    indeg = [0] * (n + 1)
    adj = [[] for _ in range(n + 1)]
    for a, b in arcs:
        adj[a].append(b)
        indeg[b] += 1
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def zonotope_graph(G: SimpleGraph) -> GenPermGraph:
    """Vertex-edge graph of the graphic zonotope, sum of segments [e_i, e_j].

    An acyclic orientation with arcs i -> j sits at the vertex whose i-th
    coordinate is the out-degree of i; flipping a single arc gives an edge.
    """
    oris = acyclic_orientations(G)
    verts = []
    for arcs in oris:
        v = [0] * G.n
        for a, _ in arcs:
            v[a - 1] += 1
        verts.append(tuple(v))
    index = {arcs: i for i, arcs in enumerate(oris)}
    edges = []
    for i, arcs in enumerate(oris):
        for t, (a, b) in enumerate(arcs):
            flipped = list(arcs)
            flipped[t] = (b, a)
            # canonical form matches acyclic_orientations: arcs listed by edge
            j = index.get(tuple(flipped))
            if j is not None and i < j:
                edges.append((i, j))
    return GenPermGraph(G.n, tuple(verts), tuple(edges))


def orientation_poset(G: SimpleGraph, arcs) -> LabelledPoset:
    return LabelledPoset.from_relations(range(1, G.n + 1), arcs)


def graphic_zonotope_F(G: SimpleGraph) -> QSymFn:
    """Sum over acyclic orientations of the strict enumerator of their closure."""
    out = Counter()
    for arcs in acyclic_orientations(G):
        out.update(enumerator(strict_labelling(orientation_poset(G, arcs))).terms)
    return QSymFn(out, FUNDAMENTAL)


def proper_coloring_counts(G: SimpleGraph, k: int | None = None, budget: int | None = None) -> dict:
    """Proper colourings [n] -> [k] tallied by colour multiplicities (compositions)."""
    n = G.n
    k = n if k is None else k
    budget = DEFAULT_BUDGETS.brute_force if budget is None else budget
    if k ** n > budget:
        raise BudgetExceeded(f"{k}^{n} colourings exceed budget {budget}")
    edges = G.sorted_edges()
    out = Counter()
    for col in iproduct(range(1, k + 1), repeat=n):
        if all(col[i - 1] != col[j - 1] for i, j in edges):
            mult = [0] * k
            for c in col:
                mult[c - 1] += 1
            # only colourings using an initial segment of colours index M_alpha
            used = len([m for m in mult if m])
            if all(mult[:used]) and not any(mult[used:]):
                out[tuple(mult[:used])] += 1
    return dict(out)


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: frozenset) -> tuple:
    if not edges:
        return tuple([0] * n + [1])
    e = min(edges)
    rest = edges - {e}
    deleted = _chromatic(n, rest)
    i, j = e
    # contract j into i, renumber vertices above j down by one
    def mv(x):
        x = i if x == j else x
        return x - 1 if x > j else x

    merged = frozenset(
        (min(mv(a), mv(b)), max(mv(a), mv(b))) for a, b in rest if mv(a) != mv(b)
    )
    contracted = _chromatic(n - 1, merged)
    out = list(deleted)
    for t, c in enumerate(contracted):
        out[t] -= c
    return tuple(out)


def chromatic_polynomial(G: SimpleGraph) -> list:
    """Coefficients [c_0, c_1, ..., c_n] of the chromatic polynomial in m."""
    return list(_chromatic(G.n, frozenset(G.edges)))


def eval_poly(coeffs: list, m: int) -> int:
    return sum(c * m**t for t, c in enumerate(coeffs))


def chromatic_poly_check(G: SimpleGraph, mmax: int | None = None) -> bool:
    mmax = G.n + 2 if mmax is None else mmax
    phi = specialize_ones(graphic_zonotope_F(G))
    chi = chromatic_polynomial(G)
    return all(phi(m) == eval_poly(chi, m) for m in range(1, mmax + 1))
