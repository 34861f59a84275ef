import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phaselab import linalg
from phaselab.linalg import EXACT, FLOAT

from oracles import hyperplane_projector, leibniz_det, sympy_rank

small_ints = st.integers(min_value=-6, max_value=6)
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(elements, max_side=5):
    return st.integers(1, max_side).flatmap(
        lambda r: st.integers(1, max_side).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def square_matrices(elements, max_side=4):
    return st.integers(1, max_side).flatmap(
        lambda n: st.lists(st.lists(elements, min_size=n, max_size=n), min_size=n, max_size=n)
    )


def test_det_of_small_integer_matrix():
    m = [[1, 0, 1], [0, 1, 1], [1, 1, 1]]
    assert linalg.det(linalg.as_array(m, EXACT)) == -1


def test_rank_of_dependent_rows():
    m = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert linalg.rank(linalg.as_array(m, EXACT)) == 2
    assert linalg.rank(linalg.as_array(m, FLOAT)) == 2


def test_rational_strings_parse():
    a = linalg.as_array([["1/2", "3"], ["-2/4", "0.25"]], EXACT)
    assert a[0, 0] == Fraction(1, 2)
    assert a[1, 0] == Fraction(-1, 2)
    assert a[1, 1] == Fraction(1, 4)


def test_backend_inference():
    assert linalg.infer_backend([[1, 2], ["3/4", 1]]) == EXACT
    assert linalg.infer_backend([[1.5, 2]]) == FLOAT


def test_nullspace_basis_is_annihilated():
    m = linalg.as_array([[1, 1, 0], [0, 1, 1]], EXACT)
    null = linalg.nullspace(m)
    assert null.shape == (3, 1)
    assert linalg.all_zero(m @ null)


def test_solve_consistent_and_inconsistent():
    a = linalg.as_array([[1, 1], [1, -1]], EXACT)
    x = linalg.solve(a, linalg.as_array([3, 1], EXACT))
    assert list(x) == [2, 1]
    b = linalg.as_array([[1, 1], [2, 2]], EXACT)
    assert linalg.solve(b, linalg.as_array([1, 3], EXACT)) is None


def test_hyperplane_projector_entries():
    p = linalg.projector_hyperplane(linalg.as_array([1, -1, 0], EXACT))
    expected = [[Fraction(1, 2), Fraction(1, 2), 0], [Fraction(1, 2), Fraction(1, 2), 0], [0, 0, 1]]
    assert linalg.equal(p, linalg.as_array(expected, EXACT))


def test_projector_span_matches_hyperplane_formula():
    basis = linalg.as_array([[1, 1, 0], [0, 0, 1]], EXACT).T
    p = linalg.projector_span(basis)
    q = linalg.projector_hyperplane(linalg.as_array([1, -1, 0], EXACT))
    assert linalg.equal(p, q)


def test_projector_span_rejects_dependent_basis():
    basis = linalg.as_array([[1, 2], [2, 4], [0, 0]], EXACT)
    with pytest.raises(ValueError, match="dependent"):
        linalg.projector_span(basis)


def test_exact_and_float_rank_agree_on_random_integer_matrices():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        r, c = rng.integers(1, 6, size=2)
        # low-rank products make rank deficiency common
        k = rng.integers(1, min(r, c) + 1)
        m = rng.integers(-3, 4, size=(r, k)) @ rng.integers(-3, 4, size=(k, c))
        exact = linalg.rank(linalg.as_array(m.tolist(), EXACT))
        assert exact == linalg.rank(m.astype(float))
        assert exact == np.linalg.matrix_rank(m)


@settings(max_examples=150, deadline=None)
@given(square_matrices(fractions))
def test_det_matches_permutation_expansion(m):
    assert linalg.det(linalg.as_array(m, EXACT)) == leibniz_det(m)


@settings(max_examples=150, deadline=None)
@given(matrices(fractions))
def test_rank_matches_sympy_and_transpose(m):
    a = linalg.as_array(m, EXACT)
    r = linalg.rank(a)
    assert r == sympy_rank(m)
    assert r == linalg.rank(a.T)


@settings(max_examples=100, deadline=None)
@given(matrices(small_ints))
def test_rank_nullity(m):
    a = linalg.as_array(m, EXACT)
    null = linalg.nullspace(a)
    assert linalg.rank(a) + null.shape[1] == a.shape[1]
    if null.shape[1]:
        assert linalg.all_zero(a @ null)
        assert linalg.rank(null) == null.shape[1]


@settings(max_examples=100, deadline=None)
@given(st.lists(fractions, min_size=2, max_size=5).filter(any))
def test_hyperplane_projector_properties(normal):
    p = linalg.projector_hyperplane(linalg.as_array(normal, EXACT))
    assert linalg.equal(p @ p, p)
    assert linalg.is_symmetric(p)
    assert linalg.trace(p) == len(normal) - 1
    assert linalg.all_zero(p @ linalg.as_array(normal, EXACT))
    assert linalg.equal(p, linalg.as_array(hyperplane_projector(normal), EXACT))


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5).flatmap(lambda d: st.tuples(st.just(d), st.integers(1, d - 1))), st.integers(0, 2**32))
def test_span_projector_is_orthogonal_projection(dims, seed):
    d, k = dims
    rnd = random.Random(seed)
    while True:
        basis = [[Fraction(rnd.randint(-4, 4)) for _ in range(k)] for _ in range(d)]
        a = linalg.as_array(basis, EXACT)
        if linalg.rank(a) == k:
            break
    p = linalg.projector_span(a)
    assert linalg.equal(p @ p, p)
    assert linalg.is_symmetric(p)
    assert linalg.trace(p) == k
    assert linalg.equal(p @ a, a)


@settings(max_examples=100, deadline=None)
@given(matrices(small_ints, 4))
def test_rref_pivots_match_rank(m):
    a = linalg.as_array(m, EXACT)
    r, pivots = linalg.rref(a)
    assert len(pivots) == linalg.rank(a)
    for i, c in enumerate(pivots):
        assert r[i, c] == 1
        assert all(r[j, c] == 0 for j in range(r.shape[0]) if j != i)


def test_primitive_integer_vector():
    assert linalg.primitive_integer_vector([Fraction(1, 2), Fraction(-3, 4), 0]) == [2, -3, 0]
