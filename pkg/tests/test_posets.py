from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from matqsym.config import BudgetExceeded
from matqsym.invariant import monomial_coefficients
from matqsym.posets import (
    LabelledPoset,
    blocks_and_z,
    descent_composition,
    disjoint_sum,
    enumerator,
    format_poset,
    linear_extensions,
    natural_labelling,
    ordinal_sum,
    parse_poset,
    ppartition_count,
    psi,
    q_sigma,
    r_sigma,
    shift,
    sigma_strings,
    standardize,
    stanley_index_composition,
    stanley_p_alpha,
    strict_labelling,
    w_sigma_descents,
)
from matqsym.qsym import QSymFn, antipode, compositions_of


def natural_posets(n):
    """Every naturally labelled poset on [n], up to equal relation sets."""
    pairs = list(combinations(range(1, n + 1), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        rel = [p for i, p in enumerate(pairs) if mask >> i & 1]
        P = LabelledPoset.from_relations(range(1, n + 1), rel)
        if P.relations not in seen:
            seen.add(P.relations)
            yield P


@st.composite
def labelled_posets(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    perm = draw(st.permutations(range(1, n + 1)))
    pairs = [(i, j) for i, j in combinations(range(n), 2) if draw(st.booleans())]
    return LabelledPoset.from_relations(range(1, n + 1), [(perm[i], perm[j]) for i, j in pairs])


def counts_from_enumerator(f, k):
    """Multiplicity-keyed counts read off the monomial expansion of f."""
    out = {}
    mono = monomial_coefficients(f, k)
    for alpha, c in mono.items():
        # place the parts on any increasing choice of k value slots
        for slots in combinations(range(k), len(alpha)):
            key = [0] * k
            for s, a in zip(slots, alpha):
                key[s] = a
            out[tuple(key)] = out.get(tuple(key), 0) + c
    return {k_: v for k_, v in out.items() if v}


def test_linear_extension_examples():
    assert linear_extensions(LabelledPoset.antichain([1, 2])) == [(1, 2), (2, 1)]
    assert linear_extensions(LabelledPoset.chain([1, 2, 3])) == [(1, 2, 3)]
    P = LabelledPoset.from_relations([1, 2, 3], [(1, 3), (2, 3)])
    assert linear_extensions(P) == [(1, 2, 3), (2, 1, 3)]


def test_linear_extension_limit():
    with pytest.raises(BudgetExceeded):
        linear_extensions(LabelledPoset.antichain(range(1, 14)))


def test_descent_composition():
    assert descent_composition((1, 2, 3)) == (3,)
    assert descent_composition((2, 3, 1)) == (2, 1)
    assert descent_composition((3, 2, 1)) == (1, 1, 1)


def test_enumerator_examples():
    assert enumerator(LabelledPoset.antichain([1, 2])) == QSymFn.L((2,)) + QSymFn.L((1, 1))
    assert enumerator(LabelledPoset.chain([1, 2, 3])) == QSymFn.L((3,))
    assert enumerator(LabelledPoset.antichain([1])) == QSymFn.L((1,))


def test_ppartition_examples():
    assert sum(ppartition_count(LabelledPoset.chain([1, 2]), 2).values()) == 3
    assert sum(ppartition_count(LabelledPoset.chain([2, 1]), 2).values()) == 1
    assert ppartition_count(LabelledPoset.chain([1, 2]), 0) == {}
    with pytest.raises(BudgetExceeded):
        ppartition_count(LabelledPoset.antichain(range(1, 9)), 9, budget=1000)


def test_sums_and_relabelling():
    P = LabelledPoset.from_relations([3, 7], [(3, 7)])
    assert standardize(P) == LabelledPoset.chain([1, 2])
    assert format_poset(psi(LabelledPoset.antichain([1]), 2)) == "3; 1<3, 3<2"
    with pytest.raises(ValueError):
        disjoint_sum(LabelledPoset.antichain([1]), LabelledPoset.antichain([1]))
    Q = ordinal_sum(LabelledPoset.antichain([1, 2]), LabelledPoset.antichain([3]))
    assert Q == stanley_p_alpha((2, 1))
    assert shift(LabelledPoset.chain([1, 2]), 3) == LabelledPoset.chain([4, 5])


def test_invalid_posets():
    with pytest.raises(ValueError):
        LabelledPoset.from_relations([1, 2], [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        LabelledPoset.from_relations([1, 2], [(1, 3)])
    with pytest.raises(ValueError):
        LabelledPoset.from_relations([0, 1])


def test_r_sigma_examples():
    P = r_sigma("01001110")
    for a, bs in {1: (2, 5, 6, 7), 3: (5, 6, 7), 4: (5, 6, 7)}.items():
        assert all(P.less(a, b) for b in bs)
    assert len(P.relations) == 10
    assert r_sigma("000") == LabelledPoset.antichain([1, 2, 3])
    assert r_sigma("01") == LabelledPoset.chain([1, 2])
    with pytest.raises(ValueError):
        r_sigma("10")


def test_q_sigma_examples():
    P = q_sigma("001100010110000")
    levels = [(1, 2), (3,), (7,), (4, 5, 6), (9,), (8,), (10,), (15,), (11, 12, 13, 14)]
    expected = LabelledPoset.antichain([])
    for lev in levels:
        expected = ordinal_sum(expected, LabelledPoset.antichain(lev))
    assert P == expected
    assert q_sigma("0") == LabelledPoset.antichain([1])
    assert q_sigma("01") == LabelledPoset.chain([1, 2])


def test_stanley_posets():
    assert stanley_p_alpha((3,)) == LabelledPoset.antichain([1, 2, 3])
    assert stanley_p_alpha((1, 1, 1)) == LabelledPoset.chain([1, 2, 3])
    assert stanley_index_composition("001") == (2, 1)
    assert stanley_index_composition("010") == (1, 2)
    assert stanley_index_composition("011") == (1, 1, 1)


def test_blocks_and_descents():
    bz = blocks_and_z("01001110")
    assert bz.blocks == ((1, 2), (3, 4, 5, 6, 7), (8,)) and bz.z == (1, 2, 1)
    assert bz.sigma() == "01001110"
    assert blocks_and_z("000").z == (3,)
    assert blocks_and_z("011").blocks == ((1, 2, 3),) and blocks_and_z("011").z == (1,)
    assert w_sigma_descents("010") == {2}
    assert w_sigma_descents("00") == {1}
    assert w_sigma_descents("01") == frozenset()


@given(st.integers(1, 9).flatmap(lambda n: st.sampled_from(sigma_strings(n))))
def test_blocks_round_trip(sigma):
    assert blocks_and_z(sigma).sigma() == sigma


@given(labelled_posets(6))
def test_poset_text_round_trip(P):
    assert parse_poset(format_poset(P)) == P


@pytest.mark.parametrize("n", range(1, 5))
def test_enumerator_matches_brute_force_exhaustive(n):
    for P in natural_posets(n):
        for Q in (P, strict_labelling(P)):
            f = enumerator(Q)
            for k in range(1, n + 1):
                assert counts_from_enumerator(f, k) == dict(ppartition_count(Q, k))


@given(labelled_posets(7), st.integers(1, 4))
def test_enumerator_matches_brute_force_random(P, k):
    if len(P) == 7:
        k = min(k, 3)
    assert counts_from_enumerator(enumerator(P), k) == dict(ppartition_count(P, k))


@given(labelled_posets(4), labelled_posets(3))
def test_disjoint_sum_multiplies(P1, P2):
    P2 = shift(P2, len(P1))
    assert enumerator(disjoint_sum(P1, P2)) == enumerator(P1) * enumerator(P2)


@pytest.mark.parametrize("n", range(1, 6))
def test_natural_strict_antipode_relation(n):
    for P in natural_posets(n):
        nat, strict = natural_labelling(P), strict_labelling(P)
        assert nat.is_natural() and strict.is_strict()
        assert antipode(enumerator(nat)) == (-1) ** n * enumerator(strict)


@given(labelled_posets(6))
def test_total_linear_extensions(P):
    f = enumerator(P)
    assert sum(f.terms.values()) == len(linear_extensions(P))
