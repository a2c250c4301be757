from math import factorial

import pytest
from hypothesis import given, strategies as st

from matqsym.catalog import all_matroids
from matqsym.config import BudgetExceeded
from matqsym.invariant import (
    F,
    F_bruteforce,
    F_star,
    F_star_bruteforce,
    check_L_coefficients,
    check_duality,
    check_hopf_morphism,
    check_multiplicative,
    check_reciprocity,
    flag_coefficient,
    freedom_expansion_check,
    monomial_coefficients,
    phi,
    phi_star,
    two_part_prediction,
)
from matqsym.matroid import direct_sum, empty_matroid, isthmus, loop, uniform
from matqsym.posets import LabelledPoset, enumerator, linear_extensions, sigma_strings
from matqsym.qsym import QSymFn, compositions_of, parse

from .strategies import CATALOG_5, matroids


def test_golden_values():
    assert F(loop()) == parse("M[1]")
    assert F(isthmus()) == parse("M[1]")
    assert F(uniform(1, 2)) == parse("2*M[1,1]")
    assert F(uniform(1, 3)) == parse("3*M[1,2] + 6*M[1,1,1]")
    assert F(uniform(2, 3)) == parse("3*M[2,1] + 6*M[1,1,1]")
    assert F(empty_matroid()) == QSymFn.one()


def test_bruteforce_examples():
    bf = F_bruteforce(uniform(1, 2), 2)
    assert bf[(1, 1)] == 2 and bf[(2,)] == 0
    free = direct_sum(direct_sum(isthmus(), loop()), isthmus())
    assert F_bruteforce(free, 1)[(3,)] == 1
    assert F_bruteforce(uniform(2, 3), 1)[(3,)] == 0
    with pytest.raises(BudgetExceeded):
        F_bruteforce(uniform(3, 6), 6, budget=1000)


def test_flag_examples():
    assert flag_coefficient(uniform(1, 2), (1, 1)) == 2
    assert flag_coefficient(uniform(1, 3), (1, 2)) == 3
    assert flag_coefficient(uniform(1, 3), (1, 1, 1)) == 6
    assert flag_coefficient(uniform(1, 3), (2,)) == 0


def test_star_and_phi_examples():
    fs = F_star_bruteforce(uniform(1, 2), 2)
    # f constant on the two elements: both bases minimize
    assert fs[(2,)] == 2
    assert F_star(isthmus()) == parse("L[1]")
    assert str(phi(uniform(1, 2))) == "m^2 - m"
    assert str(phi_star(uniform(1, 2))) == "m^2 + m"
    assert check_reciprocity(isthmus()) and check_reciprocity(uniform(1, 2))


def test_hopf_and_duality_examples():
    assert check_hopf_morphism(empty_matroid())
    assert check_hopf_morphism(uniform(1, 2))
    assert F(direct_sum(isthmus(), loop())) == F(isthmus()) * F(loop())
    assert check_duality(uniform(2, 4))
    f = F(uniform(2, 4)).to("M")
    assert sorted(f.terms.values()) == sorted(f.terms[a[::-1]] for a in f.terms)


def test_L_coefficient_examples():
    rep = check_L_coefficients(uniform(2, 3))
    assert rep.ok and rep.all_ones == 3 and rep.total == 6
    assert two_part_prediction(uniform(1, 2)) == {(1, 1): 2}
    assert F(uniform(1, 2)) == parse("2*L[1,1]")


def test_freedom_examples():
    rep = freedom_expansion_check("01001110")
    assert rep.ok and rep.diagonal == 20
    assert freedom_expansion_check("0000").diagonal == 1
    assert F(uniform(4, 4)) == QSymFn.L((1,)) ** 4
    assert freedom_expansion_check("01").diagonal == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_freedom_triangular(n):
    for s in sigma_strings(n):
        assert freedom_expansion_check(s).ok, s


@pytest.mark.parametrize("n", range(0, 6))
def test_theorem_matches_bruteforce(n):
    for M in all_matroids(n):
        f = monomial_coefficients(F(M), n)
        assert F_bruteforce(M, n) == f


@pytest.mark.slow
def test_theorem_matches_bruteforce_six():
    for M in all_matroids(6):
        assert F_bruteforce(M, 6) == monomial_coefficients(F(M), 6)


@pytest.mark.parametrize("n", range(0, 6))
def test_star_matches_bruteforce(n):
    for M in all_matroids(n):
        assert F_star_bruteforce(M, n) == monomial_coefficients(F_star(M), n)
        assert check_reciprocity(M)


def test_flags_match_monomial_coefficients():
    for n in range(6):
        for M in all_matroids(n):
            f = F(M).to("M")
            for a in compositions_of(n):
                assert flag_coefficient(M, a) == f.coefficient(a)


def test_loops_and_coloops_look_alike():
    for M in CATALOG_5:
        assert F(direct_sum(M, loop())) == F(direct_sum(M, isthmus()))


@given(matroids(5))
def test_L_coefficients_property(M):
    rep = check_L_coefficients(M)
    assert rep.ok, rep.failures
    f = F(M)
    assert (f.coefficient((M.n,)) == 1) == M.splits_completely() or M.n == 0


@given(matroids(5))
def test_phi_leading_term(M):
    p = phi(M).power_coeffs()
    assert p[M.n] == 1
    assert len(p) == M.n + 1


@given(matroids(5))
def test_degree_and_duality(M):
    assert F(M).degree == M.n or M.n == 0
    assert F_star(M).degree == M.n or M.n == 0
    assert check_duality(M)


@given(matroids(4), matroids(3))
def test_multiplicative(M1, M2):
    assert check_multiplicative(M1, M2)


@given(matroids(5))
def test_any_strict_labelling_works(M):
    # a second strict labelling: reverse the order of a different linear extension
    for b in M.bases:
        P = M.base_poset(b)
        ext = linear_extensions(P)[-1]
        lab = {e: M.n - i for i, e in enumerate(ext)}
        Q = P.relabel(lab)
        assert Q.is_strict()
        assert enumerator(Q) == enumerator(M.strict_base_poset(b))


def test_hopf_all_small():
    for n in range(5):
        for M in all_matroids(n):
            assert check_hopf_morphism(M)


def test_L_coefficients_sum():
    for M in CATALOG_5:
        assert sum(F(M).terms.values()) == factorial(M.n)


def test_budget():
    with pytest.raises(BudgetExceeded):
        F(uniform(1, 11))
