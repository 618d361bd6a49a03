"""Exact linear algebra over field contexts."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taftvar import linalg as la
from taftvar.field import make_field

F5 = make_field(5, 1, 2)
F7 = make_field(7, 1, 3)
F25 = make_field(5, 2, 3)
FIELDS = [F5, F7, F25]


def _random_matrix(F, rng, rows, cols):
    return rng.integers(0, F.order, size=(rows, cols)).astype(np.int64)


def test_rref_known():
    A = np.array([[1, 2], [2, 4]], dtype=np.int64)
    R, pivots = la.rref(F5, A)
    assert pivots == [0]
    assert np.array_equal(R[0], np.array([1, 2]))
    assert not np.any(R[1])


def test_rank_and_nullspace_known():
    A = np.array([[1, 2, 3], [2, 4, 6], [0, 1, 1]], dtype=np.int64)
    assert la.rank(F5, A) == 2
    N = la.nullspace(F5, A)
    assert N.shape[1] == 1
    assert not np.any(F5.matmul(A, N))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2**31 - 1), st.integers(1, 6), st.integers(1, 6))
def test_rank_nullity_and_kernel(which, seed, rows, cols):
    F = FIELDS[which]
    rng = np.random.default_rng(seed)
    A = _random_matrix(F, rng, rows, cols)
    N = la.nullspace(F, A)
    assert la.rank(F, A) + N.shape[1] == cols
    if N.shape[1]:
        assert not np.any(F.matmul(A, N))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2**31 - 1), st.integers(1, 5))
def test_inverse_and_solve(which, seed, n):
    F = FIELDS[which]
    rng = np.random.default_rng(seed)
    A = _random_matrix(F, rng, n, n)
    if la.rank(F, A) < n:
        return
    Ainv = la.inv_matrix(F, A)
    assert np.array_equal(F.matmul(A, Ainv), la.identity(n))
    B = _random_matrix(F, rng, n, 2)
    X = la.solve(F, A, B)
    assert np.array_equal(F.matmul(A, X), B)


def test_solve_inconsistent_raises():
    A = np.array([[1], [2]], dtype=np.int64)
    b = np.array([[0], [1]], dtype=np.int64)
    with pytest.raises(ValueError):
        la.solve(F5, A, b)


def test_left_inverse():
    rng = np.random.default_rng(3)
    B = _random_matrix(F7, rng, 6, 3)
    while la.rank(F7, B) < 3:
        B = _random_matrix(F7, rng, 6, 3)
    L = la.left_inverse(F7, B)
    assert np.array_equal(F7.matmul(L, B), la.identity(3))


def test_column_space_spans():
    A = np.array([[1, 2, 0], [2, 4, 1]], dtype=np.int64)
    C = la.column_space(F5, A)
    assert C.shape[1] == la.rank(F5, A) == 2


def test_kron_mixed_product():
    rng = np.random.default_rng(5)
    A = _random_matrix(F7, rng, 2, 2)
    B = _random_matrix(F7, rng, 3, 3)
    C = _random_matrix(F7, rng, 2, 2)
    D = _random_matrix(F7, rng, 3, 3)
    left = la.kron(F7, F7.matmul(A, C), F7.matmul(B, D))
    right = F7.matmul(la.kron(F7, A, B), la.kron(F7, C, D))
    assert np.array_equal(left, right)


def test_matpow():
    A = np.array([[0, 1], [0, 0]], dtype=np.int64)
    assert np.array_equal(la.matpow(F5, A, 0), la.identity(2))
    assert not np.any(la.matpow(F5, A, 2))
