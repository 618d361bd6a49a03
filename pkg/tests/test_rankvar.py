"""Rank varieties: points, orbits, the power map, and module membership."""

import numpy as np
import pytest

from taftvar import repmod as rm
from taftvar.algebra import make_algebra
from taftvar.errors import ZeroPoint
from taftvar.rankvar import (
    ProjPoint,
    enumerate_points,
    in_rank_variety,
    orbit_of,
    orbit_rep,
    psi,
    rank_variety,
    variety_from_points,
)

C1 = make_algebra(2, 2, 5)
C2 = make_algebra(3, 2, 7)
C3 = make_algebra(2, 3, 5)


def test_point_counts():
    # |P^{m-1}(F_q)| = (q^m - 1)/(q - 1)
    assert len(enumerate_points(C1.field, 2)) == 6
    assert len(enumerate_points(C2.field, 2)) == 8
    assert len(enumerate_points(C3.field, 3)) == 31


def test_normal_form_and_zero_rejection():
    pt = ProjPoint(C1.field, [2, 3])
    assert pt.coords[0] == 1  # scaled so the first nonzero coordinate is 1
    assert pt == ProjPoint(C1.field, [4, 6 % 5])
    with pytest.raises(ZeroPoint):
        ProjPoint(C1.field, [0, 0])


def test_orbit_and_rep_frozen_example():
    # ell=2 over F_5: q = 4 = -1, the orbit of [1:1] is {[1:1], [1:4]}
    pt = ProjPoint(C1.field, [1, 1])
    orb = orbit_of(pt, 2)
    assert orb == {ProjPoint(C1.field, [1, 1]), ProjPoint(C1.field, [1, 4])}
    assert orbit_rep(pt, 2) == ProjPoint(C1.field, [1, 1])


def test_psi_frozen_examples():
    # squares in F_5: 2^2 = 4
    assert psi(ProjPoint(C1.field, [1, 2]), 2) == ProjPoint(C1.field, [1, 4])
    # cubes in F_7: 2^3 = 1, 3^3 = 6
    assert psi(ProjPoint(C2.field, [1, 3]), 3) == ProjPoint(C2.field, [1, 6])
    assert psi(ProjPoint(C2.field, [1, 2]), 3) == ProjPoint(C2.field, [1, 1])


def test_trivial_module_full_variety():
    for ctx in (C1, C2, C3):
        V = rank_variety(rm.trivial(ctx))
        assert set(V.points()) == set(enumerate_points(ctx.field, ctx.m))


def test_regular_module_empty_variety():
    for ctx in (C1, C2):
        assert rank_variety(rm.regular(ctx)).empty


def test_v_module_variety_is_single_orbit():
    for ctx in (C1, C2):
        pt = ProjPoint(ctx.field, [1, 2])
        V = rank_variety(rm.v_module(ctx, pt.coords))
        assert V.reps == frozenset({orbit_rep(pt, ctx.ell)})
        Vp = rank_variety(rm.v_module(ctx, pt.coords, primed=True))
        assert Vp.reps == V.reps


def test_membership_respects_orbits():
    M = rm.v_module(C2, [1, 2])
    pt = ProjPoint(C2.field, [1, 2])
    for q in orbit_of(pt, 3):
        assert in_rank_variety(M, q)


def test_dade_on_seeded_randoms():
    rng = np.random.default_rng(23)
    for _ in range(15):
        M = rm.random_module(C1, rng)
        assert rank_variety(M).empty == rm.is_projective(M)


def test_direct_sum_union():
    A = rm.v_module(C2, [1, 0])
    B = rm.v_module(C2, [0, 1])
    assert rank_variety(rm.direct_sum([A, B])) == rank_variety(A).union(rank_variety(B))


def test_variety_set_operations():
    pts = enumerate_points(C1.field, 2)
    V1 = variety_from_points(C1.field, 2, 2, pts[:3])
    V2 = variety_from_points(C1.field, 2, 2, pts[2:])
    assert V1.union(V2).reps >= V1.reps
    assert V1.intersect(V2).reps <= V1.reps
    assert pts[0] in V1
