"""Rank varieties: the representation-theoretic support of a module.

A projective point lambda lies in the rank variety of M exactly when the
restriction of M along the nilpotent element tau_lambda fails to be free over
the truncated polynomial subalgebra it generates.  The variety is a union of
orbits under the coordinatewise scaling action of the group, and is reported
by canonical orbit representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import linalg as la
from .errors import ContextMismatch, ZeroPoint
from .field import FieldCtx
from .repmod import AModule


class ProjPoint:
    """A point of projective (m-1)-space over the field, in normal form.

    Normal form scales the first nonzero coordinate to 1.  Coordinates are
    stored as field codes.
    """

    __slots__ = ("field", "coords")

    def __init__(self, field: FieldCtx, coords):
        codes = tuple(field._coerce(c) for c in coords)
        if all(c == 0 for c in codes):
            raise ZeroPoint("projective point must have a nonzero coordinate")
        first = next(c for c in codes if c)
        if first != 1:
            s = int(field.inv(first))
            codes = tuple(int(field.mul(s, c)) for c in codes)
        self.field = field
        self.coords = codes

    @property
    def m(self) -> int:
        return len(self.coords)

    def sort_key(self):
        return tuple(self.field.code_to_coeffs(c) for c in self.coords)

    def coeff_vectors(self) -> list[list[int]]:
        return [list(self.field.code_to_coeffs(c)) for c in self.coords]

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field is other.field and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.field), self.coords))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def enumerate_points(field: FieldCtx, m: int) -> list[ProjPoint]:
    """All points of P^{m-1} over the field, each in normal form, sorted."""
    pts = []
    n = field.order
    for lead in range(m):
        for tail in product(range(n), repeat=m - 1 - lead):
            pts.append(ProjPoint(field, (0,) * lead + (1,) + tail))
    return sorted(pts)


def orbit_of(point: ProjPoint, ell: int) -> frozenset:
    """Orbit of a point under coordinatewise multiplication by powers of q."""
    F = point.field
    out = set()
    for a in product(range(ell), repeat=point.m):
        scaled = tuple(int(F.mul(F.q_powers[a[i]], c)) for i, c in enumerate(point.coords))
        out.add(ProjPoint(F, scaled))
    return frozenset(out)


def orbit_rep(point: ProjPoint, ell: int) -> ProjPoint:
    return min(orbit_of(point, ell))


def psi(point: ProjPoint, ell: int) -> ProjPoint:
    """The coordinatewise ell-th power map on projective space."""
    F = point.field
    return ProjPoint(F, tuple(F.pow(c, ell) for c in point.coords))


def in_rank_variety(M: AModule, point: ProjPoint) -> bool:
    """Whether the restriction of M along tau_point is not free."""
    ctx, F = M.ctx, M.ctx.field
    if point.field is not F:
        raise ContextMismatch("point over a different field")
    if M.dim == 0:
        return False
    if M.dim % ctx.ell != 0:
        return True
    T = M.restrict_to_tau(point.coords)
    # free over k[t]/(t^ell) iff rank t = dim - dim/ell
    return la.rank(F, T) != M.dim - M.dim // ctx.ell


@dataclass(frozen=True)
class OrbitVariety:
    """A scaling-invariant set of projective points, stored by orbit reps."""

    field: FieldCtx
    ell: int
    m: int
    reps: frozenset

    @property
    def empty(self) -> bool:
        return not self.reps

    def points(self) -> list[ProjPoint]:
        """All points in the variety (every orbit expanded), sorted."""
        out = set()
        for r in self.reps:
            out |= orbit_of(r, self.ell)
        return sorted(out)

    def sorted_reps(self) -> list[ProjPoint]:
        return sorted(self.reps)

    def union(self, other: "OrbitVariety") -> "OrbitVariety":
        if other.field is not self.field or other.m != self.m:
            raise ContextMismatch("union of varieties over different spaces")
        return OrbitVariety(self.field, self.ell, self.m, self.reps | other.reps)

    def intersect(self, other: "OrbitVariety") -> "OrbitVariety":
        return OrbitVariety(self.field, self.ell, self.m, self.reps & other.reps)

    def __contains__(self, point: ProjPoint) -> bool:
        return orbit_rep(point, self.ell) in self.reps

    def __eq__(self, other):
        if not isinstance(other, OrbitVariety):
            return NotImplemented
        return self.field is other.field and self.reps == other.reps

    def __hash__(self):
        return hash((id(self.field), self.reps))

    def __repr__(self):
        if self.empty:
            return "OrbitVariety(empty)"
        return "OrbitVariety{" + ", ".join(map(repr, self.sorted_reps())) + "}"


def variety_from_points(field: FieldCtx, ell: int, m: int, pts) -> OrbitVariety:
    reps = frozenset(orbit_rep(pt, ell) for pt in pts)
    return OrbitVariety(field, ell, m, reps)


def rank_variety(M: AModule, check_orbits: bool = True) -> OrbitVariety:
    """The rank variety of M as a set of scaling-orbit representatives."""
    ctx, F = M.ctx, M.ctx.field
    seen: dict = {}
    members = set()
    for pt in enumerate_points(F, ctx.m):
        rep = orbit_rep(pt, ctx.ell)
        hit = in_rank_variety(M, pt)
        if check_orbits:
            if rep in seen:
                assert seen[rep] == hit, f"rank criterion not orbit-constant at {pt}"
            seen[rep] = hit
        elif rep in seen:
            continue
        else:
            seen[rep] = hit
        if hit:
            members.add(rep)
    return OrbitVariety(F, ctx.ell, ctx.m, frozenset(members))


def psi_image(V: OrbitVariety) -> OrbitVariety:
    """Image of a scaling-invariant variety under the ell-th power map.

    Psi collapses each scaling orbit to a single point, so the image is just
    psi applied to representatives; the result is reported in the same
    orbit-representative form (psi points are fixed by scaling).
    """
    pts = {psi(r, V.ell) for r in V.reps}
    return variety_from_points(V.field, V.ell, V.m, pts)
