import pytest
from hypothesis import given, strategies as st

from matqsym.catalog import is_isomorphic
from matqsym.matroid import (
    Matroid,
    MatroidAxiomError,
    direct_sum,
    elements_of,
    empty_matroid,
    freedom_bases_direct,
    freedom_matroid,
    intersect,
    isthmus,
    loop,
    principal_extension,
    rank2_matroid,
    tutte,
    uniform,
)
from matqsym.posets import LabelledPoset, linear_extensions, sigma_strings

from .strategies import CATALOG_6, matroids, weights


def test_from_bases_examples():
    M = Matroid.from_bases(3, [[1, 2], [1, 3], [2, 3]])
    assert M == uniform(2, 3)
    with pytest.raises(MatroidAxiomError) as err:
        Matroid.from_bases(4, [[1, 3], [2, 3], [2, 4]])
    assert err.value.witness is not None
    Z = Matroid.from_bases(2, [[]])
    assert Z.rank == 0 and Z.loops() == {1, 2}


def test_from_bases_errors():
    with pytest.raises(MatroidAxiomError):
        Matroid.from_bases(3, [])
    with pytest.raises(MatroidAxiomError):
        Matroid.from_bases(3, [[1], [1, 2]])
    with pytest.raises(MatroidAxiomError):
        Matroid.from_bases(2, [[3]])
    with pytest.raises(MatroidAxiomError):
        Matroid.from_bases(2, [[1, 1]])


def test_minor_examples():
    assert uniform(1, 3).dual() == uniform(2, 3)
    C = uniform(2, 3).contract({1})
    assert C.ground == (2, 3) and C.base_list() == [(2,), (3,)]
    R = uniform(2, 4).restrict({1, 2, 3})
    assert R == uniform(2, 3)
    assert uniform(2, 4).delete({4}) == uniform(2, 3)


def test_loops_coloops_and_splitting():
    assert isthmus().coloops() == {1}
    assert loop().loops() == {1}
    assert not uniform(1, 2).splits_completely()
    assert direct_sum(isthmus(), loop()).splits_completely()


def test_separators():
    free2 = uniform(2, 2)
    assert len(free2.min_separators()) == 2
    assert uniform(1, 2).is_connected()
    assert len(direct_sum(uniform(1, 2), uniform(1, 2)).min_separators()) == 2
    assert empty_matroid().min_separators() == []


def test_min_weight_examples():
    M = uniform(2, 3)
    assert M.min_weight_bases((1, 2, 3)) == (3, [(1, 2)])
    assert M.min_weight_bases((1, 1, 2)) == (2, [(1, 2)])
    assert M.is_generic((1, 1, 2))
    assert not M.is_generic((1, 1, 1))
    assert len(M.min_weight_bases((1, 1, 1))[1]) == 3


def test_base_poset_examples():
    P = uniform(2, 3).base_poset((1, 2))
    assert P == LabelledPoset.from_relations([1, 2, 3], [(1, 3), (2, 3)])
    free = direct_sum(isthmus(), loop())
    assert free.base_poset((1,)).relations == frozenset()
    assert uniform(1, 2).base_poset((1,)) == LabelledPoset.chain([1, 2])
    with pytest.raises(ValueError):
        uniform(1, 2).base_poset((1, 2))


def test_intersection_examples():
    M1 = Matroid.from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4]])
    M2 = Matroid.from_bases(4, [[1, 2], [1, 3], [2, 3], [2, 4], [3, 4]])
    I = intersect(M1, M2)
    assert I.base_list() == [(1, 3), (2, 3), (2, 4)]
    assert not I.is_matroid
    assert intersect(M2, M2).matroid == M2
    with pytest.raises(ValueError):
        intersect(uniform(1, 3), uniform(2, 3))


def test_intersection_of_split_pieces():
    A = Matroid.from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])
    B = Matroid.from_bases(4, [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]])
    I = intersect(A, B)
    assert I.is_matroid and I.base_list() == [(1, 3), (1, 4), (2, 3), (2, 4)]


def test_freedom_examples():
    M = freedom_matroid("01111")
    assert M.rank == 1 and M.base_list() == [(e,) for e in range(1, 6)]
    assert freedom_matroid("000").base_list() == [(1, 2, 3)]
    assert freedom_matroid("01") == uniform(1, 2)
    assert principal_extension(empty_matroid()) == loop()


@pytest.mark.parametrize("n", range(1, 9))
def test_freedom_two_constructions_agree(n):
    for s in sigma_strings(n):
        assert freedom_matroid(s) == freedom_bases_direct(s)


def test_isomorphism_examples():
    M = uniform(2, 3)
    assert is_isomorphic(M, M.relabel({1: 3, 2: 1, 3: 2}))
    assert not is_isomorphic(direct_sum(uniform(1, 2), uniform(1, 1)), uniform(1, 3))
    assert is_isomorphic(uniform(2, 4), uniform(2, 4).dual())


def test_lambda_partition():
    assert uniform(2, 4).lambda_partition() == (1, 1, 1, 1)
    M = Matroid.from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4], [3, 4]])
    assert M.lambda_partition() == (2, 1, 1)
    assert Matroid.from_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4]]).lambda_partition() == (2, 2)
    with pytest.raises(ValueError):
        uniform(1, 3).lambda_partition()
    with pytest.raises(ValueError):
        direct_sum(uniform(2, 3), loop()).lambda_partition()


def test_tutte_examples():
    assert str(tutte(uniform(1, 2))) == "x + y"
    assert str(tutte(isthmus())) == "x"
    assert str(tutte(loop())) == "y"
    assert tutte(uniform(2, 4))(1, 1) == 6


def test_tutte_duality_on_catalog():
    for M in CATALOG_6:
        assert tutte(M.dual()) == tutte(M).swap()
        assert tutte(M)(1, 1) == len(M.bases)


@given(matroids(6))
def test_dual_involution_and_loops(M):
    assert M.dual().dual() == M
    assert M.loops() == M.dual().coloops()


@given(matroids(6), st.data())
def test_minors_are_matroids(M, data):
    A = data.draw(st.sets(st.sampled_from(M.ground))) if M.n else set()
    for N in (M.restrict(A), M.contract(A), M.delete(A)):
        Matroid(N.ground, N.bases)  # validates
    assert M.contract(A).dual() == M.dual().delete(A)


@given(matroids(6), st.data())
def test_greedy_reaches_minimum(M, data):
    f = data.draw(weights(M))
    best, arg = M.min_weight_bases(f)
    g = M.greedy_base(f)
    assert M.weight(g, f) == best
    assert g in arg


@given(matroids(5), st.data())
def test_unique_poset_admits_each_order(M, data):
    # weights given by a linear order: the minimizing base's P_B admits the order
    order = data.draw(st.permutations(M.ground))
    f = {e: i + 1 for i, e in enumerate(order)}
    w = tuple(f[e] for e in M.ground)
    _, arg = M.min_weight_bases(w)
    assert len(arg) == 1
    P = M.base_poset(arg[0])
    assert tuple(order) in set(linear_extensions(P))
    hits = sum(tuple(order) in set(linear_extensions(M.base_poset(B))) for B in M.base_list())
    assert hits == 1


@given(matroids(4), matroids(3))
def test_direct_sum_valid(M1, M2):
    S = direct_sum(M1, M2)
    Matroid(S.ground, S.bases)
    assert len(S.bases) == len(M1.bases) * len(M2.bases)
    assert len(S.min_separators()) == len(M1.min_separators()) + len(M2.min_separators())
