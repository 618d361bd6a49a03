"""Finite field contexts: construction oracles and arithmetic laws."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taftvar.errors import CharDividesEll, NoRootOfUnity, NonPrimeModulus
from taftvar.field import make_field


def test_prime_field_roots_of_unity():
    # independently computed: 2 has order 3 in F_7; 4 has order 2 in F_5
    assert make_field(7, 1, 3).q == 2
    assert make_field(5, 1, 2).q == 4
    assert make_field(3, 1, 2).q == 2


def test_q_has_exact_order():
    for p, r, ell in [(5, 1, 2), (7, 1, 3), (5, 1, 4), (13, 1, 3), (5, 2, 3)]:
        F = make_field(p, r, ell)
        assert int(F.pow(F.q.code, ell)) == 1
        for e in range(1, ell):
            assert int(F.pow(F.q.code, e)) != 1


def test_f25_modulus_is_lex_smallest_irreducible():
    F = make_field(5, 2, 3)
    # x^2 + x + 1 is the coefficient-lex-smallest monic irreducible over F_5
    assert tuple(F.modulus_poly) == (1, 1, 1)
    assert F.order == 25


def test_invalid_parameters_rejected():
    with pytest.raises(NonPrimeModulus):
        make_field(6, 1, 5)
    with pytest.raises(CharDividesEll):
        make_field(5, 1, 5)
    with pytest.raises(NoRootOfUnity):
        make_field(5, 1, 3)  # 3 does not divide 5 - 1


FIELDS = [make_field(5, 1, 2), make_field(7, 1, 3), make_field(5, 2, 3)]


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24), st.integers(0, 2))
def test_field_laws(a, b, c, which):
    F = FIELDS[which]
    n = F.order
    a, b, c = a % n, b % n, c % n
    assert int(F.add(a, F.add(b, c))) == int(F.add(F.add(a, b), c))
    assert int(F.mul(a, F.mul(b, c))) == int(F.mul(F.mul(a, b), c))
    assert int(F.mul(a, F.add(b, c))) == int(F.add(F.mul(a, b), F.mul(a, c)))
    assert int(F.add(a, F.neg(a))) == 0
    if a:
        assert int(F.mul(a, F.inv(a))) == 1
    assert int(F.sub(a, b)) == int(F.add(a, F.neg(b)))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2**31 - 1))
def test_matmul_matches_naive(which, seed):
    F = FIELDS[which]
    rng = np.random.default_rng(seed)
    A = rng.integers(0, F.order, size=(4, 5)).astype(np.int64)
    B = rng.integers(0, F.order, size=(5, 3)).astype(np.int64)
    got = F.matmul(A, B)
    for i in range(4):
        for j in range(3):
            acc = 0
            for k in range(5):
                acc = int(F.add(acc, F.mul(A[i, k], B[k, j])))
            assert got[i, j] == acc


def test_coeff_round_trip():
    F = make_field(5, 2, 3)
    for code in range(F.order):
        assert F.coeffs_to_code(F.code_to_coeffs(code)) == code


def test_prime_field_matmul_large_inner_dim():
    # exercise the exactness guard for the float64 path
    F = make_field(5, 1, 2)
    rng = np.random.default_rng(0)
    A = rng.integers(0, 5, size=(3, 4000)).astype(np.int64)
    B = rng.integers(0, 5, size=(4000, 2)).astype(np.int64)
    got = F.matmul(A, B)
    want = (A.astype(object) @ B.astype(object)) % 5
    assert np.array_equal(got, want.astype(np.int64))
