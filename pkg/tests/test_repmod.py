"""Module constructions: covers, syzygies, duals, tensors, hom spaces."""

import numpy as np
import pytest

from taftvar import repmod as rm
from taftvar.algebra import make_algebra

C1 = make_algebra(2, 2, 5)
C2 = make_algebra(3, 2, 7)
CTXS = [C1, C2, make_algebra(2, 3, 5)]
IDS = ["l2m2", "l3m2", "l2m3"]


@pytest.mark.parametrize("ctx", CTXS, ids=IDS)
def test_standard_modules_validate(ctx):
    for M in [rm.trivial(ctx), rm.regular(ctx), rm.projective_indec(ctx, (1,) * ctx.m),
              rm.v_module(ctx, [1] * ctx.m), rm.v_module(ctx, [1] * ctx.m, primed=True)]:
        M.validate()


@pytest.mark.parametrize("ctx", CTXS, ids=IDS)
def test_v_module_dimensions(ctx):
    half = ctx.ell ** (2 * ctx.m - 1)
    assert rm.v_module(ctx, [1] * ctx.m).dim == half
    assert rm.v_module(ctx, [1] * ctx.m, primed=True).dim == (ctx.ell - 1) * half


@pytest.mark.parametrize("ctx", CTXS, ids=IDS)
def test_omega_exchanges_v_and_vprime(ctx):
    rng = np.random.default_rng(7)
    lam = [1] * ctx.m
    V = rm.v_module(ctx, lam)
    Vp = rm.v_module(ctx, lam, primed=True)
    assert rm.is_isomorphic(rm.omega(V), Vp, rng, trials=32)
    assert rm.is_isomorphic(rm.omega(Vp), V, rng, trials=32)


def test_omega_of_trivial_dimension():
    # Omega(k) = rad(P(k)), codimension 1 in the cover
    for ctx in CTXS:
        assert rm.omega(rm.trivial(ctx)).dim == ctx.lattice - 1


def test_omega_inverse_inverts_omega():
    rng = np.random.default_rng(11)
    M = rm.v_module(C1, [1, 2])
    assert rm.is_isomorphic(rm.omega_inverse(rm.omega(M)), M, rng, trials=32)


@pytest.mark.parametrize("ctx", CTXS, ids=IDS)
def test_projectivity_detection(ctx):
    assert rm.is_projective(rm.regular(ctx))
    assert rm.is_projective(rm.projective_indec(ctx, (0,) * ctx.m))
    assert not rm.is_projective(rm.trivial(ctx))
    assert not rm.is_projective(rm.v_module(ctx, [1] * ctx.m))


def test_tensor_with_trivial_is_identity():
    rng = np.random.default_rng(3)
    M = rm.v_module(C2, [1, 3])
    T = rm.tensor(rm.trivial(C2), M)
    T.validate()
    assert rm.is_isomorphic(T, M, rng, trials=32)


def test_tensor_of_projective_is_projective():
    T = rm.tensor(rm.trivial(C1), rm.regular(C1))
    assert rm.is_projective(T)
    T2 = rm.tensor(rm.v_module(C1, [1, 1]), rm.regular(C1))
    assert rm.is_projective(T2)


def test_dual_is_involutive():
    rng = np.random.default_rng(5)
    M = rm.v_module(C2, [2, 1])
    D = rm.dual(M)
    D.validate()
    assert rm.is_isomorphic(rm.dual(D), M, rng, trials=32)


def test_dual_of_simple():
    S = rm.simple(C2, (1, 2))
    D = rm.dual(S)
    D.validate()
    # dual of the character chi is the character -chi
    assert rm.is_isomorphic(D, rm.simple(C2, (2, 1)), trials=8)


def test_weight_spaces_partition():
    M = rm.regular(C1)
    ws = rm.weight_spaces(M)
    assert sum(B.shape[1] for B in ws.values()) == M.dim
    assert set(ws) == set(C1.characters())


def test_cover_of_simple_is_projective_indec():
    cd = rm.cover(rm.simple(C2, (1, 0)))
    assert cd.chis == [(1, 0)]
    assert cd.P.dim == C2.lattice


def test_hom_dims():
    k = rm.trivial(C1)
    A = rm.regular(C1)
    # Hom(A, M) = M as vector spaces; Hom(k, A) = socle invariants = 1
    assert rm.dim_hom(A, k) == 1
    assert rm.dim_hom(A, A) == A.dim
    assert rm.dim_hom(k, k) == 1


def test_hom_space_maps_are_morphisms():
    M = rm.v_module(C1, [1, 1])
    N = rm.regular(C1)
    F = C1.field
    for phi in rm.hom_space(M, N):
        for i in range(C1.m):
            assert np.array_equal(F.matmul(phi, M.X[i]), F.matmul(N.X[i], phi))
            assert np.array_equal(F.matmul(phi, M.G[i]), F.matmul(N.G[i], phi))


def test_random_modules_validate_and_quotient():
    rng = np.random.default_rng(17)
    for _ in range(10):
        M = rm.random_module(C1, rng)
        M.validate()


def test_induce_from_lambda_dimension():
    import taftvar.truncpoly as tp

    L = tp.free_lambda(C1, 1)
    ind = rm.induce_from_lambda(C1, L.X)
    ind.validate()
    assert ind.dim == C1.lattice * L.dim
    assert rm.is_projective(ind)


def test_strip_projective_summands():
    M = rm.direct_sum([rm.trivial(C1), rm.regular(C1)])
    S = rm.strip_projective_summands(M)
    assert S.dim == 1
    assert not rm.is_projective(M)
