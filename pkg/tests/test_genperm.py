from math import factorial

import pytest
from hypothesis import given, strategies as st

from matqsym.catalog import all_matroids
from matqsym.genperm import (
    GenPermGraph,
    SimpleGraph,
    acyclic_orientations,
    all_graphs,
    chromatic_poly_check,
    chromatic_polynomial,
    edge_direction,
    F_genperm,
    F_genperm_bruteforce,
    F_star_genperm,
    from_matroid,
    graphic_zonotope_F,
    phi_genperm,
    phi_star_genperm,
    proper_coloring_counts,
    reciprocity_check,
    vertex_poset,
    zonotope_graph,
)
from matqsym.invariant import F, F_star, monomial_coefficients
from matqsym.matroid import direct_sum, isthmus, loop, uniform
from matqsym.posets import LabelledPoset
from matqsym.qsym import QSymFn, parse

from .strategies import CATALOG_5, matroids


@st.composite
def graphs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return SimpleGraph(n, frozenset(p for p in pairs if draw(st.booleans())))


def test_vertex_poset_examples():
    Q = from_matroid(uniform(1, 2))
    v = Q.vertices.index((1, 0))
    assert vertex_poset(Q, v) == LabelledPoset.chain([1, 2])
    point = GenPermGraph(3, ((1, 2, 3),), ())
    assert vertex_poset(point, 0) == LabelledPoset.antichain([1, 2, 3])
    Q3 = from_matroid(uniform(2, 3))
    v = Q3.vertices.index((1, 1, 0))
    assert vertex_poset(Q3, v) == LabelledPoset.from_relations([1, 2, 3], [(1, 3), (2, 3)])


def test_from_matroid_examples():
    Q = from_matroid(uniform(1, 2))
    assert len(Q.vertices) == 2 and len(Q.edges) == 1
    Q = from_matroid(uniform(2, 4))
    assert len(Q.vertices) == 6 and len(Q.edges) == 12
    Q = from_matroid(direct_sum(isthmus(), loop()))
    assert len(Q.vertices) == 1 and Q.edges == ()


def test_invalid_genperm():
    with pytest.raises(ValueError):
        GenPermGraph(2, ((0, 0), (1, 1)), ((0, 1),))
    with pytest.raises(ValueError):
        GenPermGraph(2, ((1, 0), (0, 1), (2, -1)), ((0, 1),))
    with pytest.raises(ValueError):
        GenPermGraph(2, (), ())
    with pytest.raises(ValueError):
        SimpleGraph(2, frozenset({(1, 1)}))
    assert edge_direction((1, 0), (0, 1)) == (1, 2, 1)
    assert edge_direction((0, 2), (2, 0)) == (2, 1, 2)


def test_zonotope_examples():
    assert graphic_zonotope_F(SimpleGraph.complete(2)) == parse("2*M[1,1]")
    assert graphic_zonotope_F(SimpleGraph.complete(3)) == parse("6*M[1,1,1]")
    assert graphic_zonotope_F(SimpleGraph.empty(2)) == QSymFn.M((1,)) ** 2
    P3 = SimpleGraph.path(3)
    f = monomial_coefficients(graphic_zonotope_F(P3), 3)
    assert {a: c for a, c in f.items() if c} == proper_coloring_counts(P3, 3)


def test_chromatic_examples():
    assert chromatic_polynomial(SimpleGraph.complete(3)) == [0, 2, -3, 1]
    assert chromatic_polynomial(SimpleGraph.empty(3)) == [0, 0, 0, 1]
    assert chromatic_polynomial(SimpleGraph.complete(2)) == [0, -1, 1]
    assert chromatic_poly_check(SimpleGraph.complete(3))


def test_star_examples():
    Z = zonotope_graph(SimpleGraph.complete(2))
    assert str(phi_star_genperm(Z)) == "m^2 + m"
    assert str(phi_genperm(Z).reflect()) == "m^2 + m"
    assert reciprocity_check(from_matroid(uniform(1, 2)))
    point = GenPermGraph(1, ((0,),), ())
    assert F_star_genperm(point) == parse("L[1]")


def test_matroid_polytopes_agree():
    for M in CATALOG_5:
        if M.n == 0:
            continue
        Q = from_matroid(M)
        assert F_genperm(Q) == F(M)
        assert F_star_genperm(Q) == F_star(M)


@pytest.mark.parametrize("n", range(1, 6))
def test_zonotopes_all_graphs(n):
    for G in all_graphs(n):
        f = graphic_zonotope_F(G)
        assert f == F_genperm(zonotope_graph(G))
        assert chromatic_poly_check(G, 7)
        mono = {a: c for a, c in monomial_coefficients(f, n).items() if c}
        assert mono == proper_coloring_counts(G, n)
        assert sum(f.terms.values()) == factorial(n)
        assert all(c > 0 for c in f.terms.values())
        assert f.coefficient((1,) * n) == len(acyclic_orientations(G))


@given(graphs(4))
def test_zonotope_bruteforce_and_reciprocity(G):
    Z = zonotope_graph(G)
    mono = monomial_coefficients(F_genperm(Z), G.n)
    assert F_genperm_bruteforce(Z) == mono
    assert reciprocity_check(Z)


@given(matroids(5, min_n=1))
def test_genperm_L_coefficients_for_matroids(M):
    f = F_genperm(from_matroid(M))
    assert all(c > 0 for c in f.terms.values())
    assert sum(f.terms.values()) == factorial(M.n)
    assert f.coefficient((1,) * M.n) == len(M.bases)
