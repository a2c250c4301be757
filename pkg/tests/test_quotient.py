import pytest
from hypothesis import given, strategies as st

from matqsym.lattice import hermite_rows, lattice_index, reduce_vector
from matqsym.quotient import m2_rank, project_mod_m2, quotient_presentation, quotient_ranks
from matqsym.qsym import QSymFn, compositions_of


def test_ranks_from_hilbert_series():
    assert quotient_ranks(10) == (1, 1, 2, 3, 6, 9, 18, 30, 56, 99)


@pytest.mark.parametrize("n", range(1, 9))
def test_presentation_rank_and_complement(n):
    pres = quotient_presentation(n)
    assert pres.rank == quotient_ranks(n)[-1]
    assert m2_rank(n) + pres.rank == 2 ** (n - 1)
    assert pres.pivots is not None


def test_small_examples():
    assert quotient_presentation(1).rank == 1
    assert quotient_presentation(2).rank == 1
    assert quotient_presentation(3).rank == 2
    assert project_mod_m2(QSymFn.L((1,)) ** 2).is_zero()
    assert not project_mod_m2(QSymFn.L((3,))).is_zero()
    assert project_mod_m2(QSymFn.L((1, 1)) + QSymFn.L((2,))).is_zero()


def test_degree_mismatch():
    with pytest.raises(ValueError):
        project_mod_m2(QSymFn.L((2,)), quotient_presentation(3))


@st.composite
def degree_split(draw):
    n = draw(st.integers(2, 7))
    k = draw(st.integers(1, n - 1))
    a = draw(st.sampled_from(compositions_of(k)))
    b = draw(st.sampled_from(compositions_of(n - k)))
    return a, b


@given(degree_split(), st.sampled_from(["M", "L"]))
def test_products_vanish(ab, basis):
    a, b = ab
    f = QSymFn({a: 1}, basis) * QSymFn({b: 1}, basis)
    assert project_mod_m2(f).is_zero()


@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.integers(-3, 3), min_size=2 ** (n - 1), max_size=2 ** (n - 1))))
def test_projection_is_linear_and_onto(v):
    n = len(v).bit_length()
    comps = compositions_of(n)
    pres = quotient_presentation(n)
    f = QSymFn({a: c for a, c in zip(comps, v)}, "L")
    acc = project_mod_m2(QSymFn.zero("L"), pres)
    for a, c in zip(comps, v):
        acc = acc + c * project_mod_m2(QSymFn.L(a), pres)
    assert project_mod_m2(f, pres) == acc
    # the free compositions map to the standard basis vectors
    for j, a in enumerate(pres.free_compositions):
        e = project_mod_m2(QSymFn.L(a)).coords
        assert e == tuple(int(i == j) for i in range(pres.rank))


def test_hermite_and_index():
    basis, piv = hermite_rows([[2, 0], [0, 3], [2, 3]], 2)
    assert piv == [0, 1] or tuple(piv) == (0, 1)
    assert lattice_index([[2, 0], [0, 3]], 2) == 6
    assert lattice_index([[1, 1], [1, -1]], 2) == 2
    assert lattice_index([[1, 1]], 2) == 0
    assert reduce_vector([5, 7], *hermite_rows([[1, 0], [0, 2]], 2)) == [0, 1]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=1, max_size=5))
def test_hermite_preserves_span(rows):
    basis, piv = hermite_rows(rows, 3)
    # every input row reduces to zero modulo the echelon basis
    for r in rows:
        assert reduce_vector(r, basis, piv) == [0, 0, 0]
