from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import instance
from cellular_jm.combinatorics import content_sequence_ak, enumerate_partitions
from cellular_jm.concrete_algebras import (
    AKParams,
    InvalidParameters,
    build_ak_seminormal,
    build_group_algebra,
    build_hecke_typeA,
    class_sums,
    compose,
    find_valid_params,
    group_table,
    hecke_table,
    inverse_perm,
    length,
    q_integer,
    separation_polynomial_nonzero,
    validate_params,
)


def perm_strategy(n):
    return st.permutations(list(range(n))).map(tuple)


@given(perm_strategy(5), perm_strategy(5), perm_strategy(5))
def test_compose_is_a_group_law(x, y, z):
    e = tuple(range(5))
    assert compose(compose(x, y), z) == compose(x, compose(y, z))
    assert compose(x, inverse_perm(x)) == e == compose(inverse_perm(x), x)
    assert compose(x, e) == x


@given(perm_strategy(5))
def test_length_counts_inversions(w):
    assert length(w) == sum(1 for i in range(5) for j in range(i + 1, 5) if w[i] > w[j])
    assert length(inverse_perm(w)) == length(w)


def test_group_algebra_s2():
    inst = instance("S2")
    A = inst.algebra
    assert A.dim == 2
    assert A.datum.cells == [(2,), (1, 1)]
    assert len(inst.L) == 1
    assert inst.L[0] == A.basis_element(A.labels.index("[21]"))
    assert sorted(c for cs in inst.contents.of.values() for c in cs) == [-1, 1]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_group_algebra_dimension(n):
    A = instance("S%d" % n).algebra
    assert A.dim == factorial(n)
    assert A.datum.cells == enumerate_partitions(n)


def test_group_algebra_range():
    with pytest.raises(ValueError):
        build_group_algebra(1)
    with pytest.raises(ValueError):
        build_group_algebra(7)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_class_sums_are_central(n):
    inst = instance("S%d" % n)
    sums = class_sums(inst)
    assert len(sums) == len(enumerate_partitions(n))
    for z in sums:
        for g in inst.generators:
            assert z * g == g * z


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hecke_at_one_is_group_algebra(n):
    assert hecke_table(n, 1) == group_table(n)


def test_hecke_quadratic_and_braid():
    perms, table = hecke_table(3, 2)
    index = {w: i for i, w in enumerate(perms)}
    s1, s2 = index[(1, 0, 2)], index[(0, 2, 1)]
    e = index[(0, 1, 2)]
    assert table[(s1, s1)] == {e: 2, s1: 1}
    A = instance("H3").algebra
    t1, t2 = A.basis_element(s1), A.basis_element(s2)
    assert t1 * t2 * t1 == t2 * t1 * t2
    # a length-additive product is a single basis element
    assert len((t1 * t2 * t1).c) == 1


def test_hecke_contents_and_elements():
    inst = instance("H3")
    A = inst.algebra
    assert inst.L[0] == A.one
    for t in A.datum.all_tableaux():
        assert list(inst.contents[t]) == content_sequence_ak(t, 2, [1])
    for x in inst.L:
        for y in inst.L:
            assert x * y == y * x


@pytest.mark.parametrize("q", [0, 1, -1, "-1/1"])
def test_hecke_invalid_parameters(q):
    with pytest.raises(InvalidParameters):
        build_hecke_typeA(3, q)


def test_q_integers():
    assert q_integer(2, -1) == 0
    assert q_integer(3, 2) == 7


def test_separation_polynomial_example():
    ok, factors = separation_polynomial_nonzero(AKParams(2, 2, 2, (1, 7)))
    assert ok
    values = dict(factors)
    assert values == {
        "[1]_q": 1, "[2]_q": 3,
        "q^-1*u_1-u_2": Fraction(-13, 2), "q^0*u_1-u_2": -6, "q^1*u_1-u_2": -5,
    }


def test_separation_polynomial_detects_vanishing():
    ok, factors = separation_polynomial_nonzero(AKParams(2, 2, 2, (1, 2)))
    assert not ok
    with pytest.raises(InvalidParameters):
        validate_params(AKParams(2, 2, 2, (1, 2)))
    with pytest.raises(InvalidParameters):
        validate_params(AKParams(2, 1, 1, (1,)))
    with pytest.raises(InvalidParameters):
        AKParams(2, 2, 2, (1,))


def test_find_valid_params():
    p = find_valid_params(2, 2)
    assert (p.q, p.u, p.validated) == (2, (1, 7), True)
    assert find_valid_params(1, 1).u == (1,)
    assert find_valid_params(3, 2).u == (1, 7)
    p = find_valid_params(4, 3)
    assert separation_polynomial_nonzero(p)[0]


def test_ak_requires_validation():
    with pytest.raises(InvalidParameters):
        build_ak_seminormal(AKParams(2, 2, 2, (1, 7)))


@pytest.mark.parametrize("n,m", [(1, 2), (2, 2), (3, 2), (2, 3)])
def test_ak_model_structure(n, m):
    inst = build_ak_seminormal(find_valid_params(n, m))
    A = inst.algebra
    # dimension m^n n!, the rank of the Ariki-Koike algebra
    assert A.dim == m ** n * factorial(n)
    assert len(inst.L) == n
    for lam, s, t in A.datum.basis:
        e = A.C(lam, s, t)
        for i, x in enumerate(inst.L):
            assert e * x == e * inst.contents.content(t, i)
            assert x * e == e * inst.contents.content(s, i)


def test_ak_model_n1_eigenvalues():
    inst = build_ak_seminormal(find_valid_params(1, 2))
    assert sorted(c for cs in inst.contents.of.values() for c in cs) == [1, 7]


def test_counterexample_instance():
    inst = instance("CE")
    A = inst.algebra
    assert A.dim == 2
    assert inst.L == [A.zero()]
    assert A.one * A.one == A.one


@pytest.mark.parametrize("n", [2, 3])
def test_s_n_relations(n):
    inst = instance("S%d" % n)
    perms = sorted(permutations(range(n)))
    assert len(perms) == inst.algebra.dim
    for g in inst.generators:
        assert g * g == inst.algebra.one
