"""Varieties for modules over the truncated polynomial subalgebra.

Lambda = k[X_1..X_m]/(X_i^ell) sits inside A, and the varieties of a
Lambda-module are computed by inducing up to A.  This module also houses the
independent stable-hom membership criterion and the m=1 Hochschild dimension
check from the explicit periodic bimodule resolution.
"""

from __future__ import annotations

import numpy as np

from . import linalg as la
from . import repmod as rm
from .algebra import AlgebraCtx
from .errors import OutOfRange, RelationViolation, ZeroPoint
from .field import make_field
from .rankvar import OrbitVariety, ProjPoint, rank_variety


class LambdaModule:
    """A module over the truncated polynomial algebra: m commuting nilpotent
    action matrices with X_i^ell = 0."""

    def __init__(self, ctx: AlgebraCtx, X: list, check: bool = True):
        self.ctx = ctx
        self.X = [np.asarray(Xi, dtype=np.int64) for Xi in X]
        self.dim = self.X[0].shape[0] if self.X else 0
        if check:
            self.validate()

    def validate(self):
        ctx, F = self.ctx, self.ctx.field
        if len(self.X) != ctx.m:
            raise RelationViolation(f"expected {ctx.m} action matrices")
        n = self.dim
        for i, Xi in enumerate(self.X):
            if Xi.shape != (n, n):
                raise RelationViolation("action matrices must be square of equal size")
            if np.any(la.matpow(F, Xi, ctx.ell)):
                raise RelationViolation(f"X_{i+1}^{ctx.ell} != 0")
            for j in range(i):
                if not np.array_equal(
                    F.matmul(Xi, self.X[j]), F.matmul(self.X[j], Xi)
                ):
                    raise RelationViolation(f"X_{i+1} X_{j+1} != X_{j+1} X_{i+1}")

    def __repr__(self):
        return f"LambdaModule(dim={self.dim}, ell={self.ctx.ell}, m={self.ctx.m})"


def free_lambda(ctx: AlgebraCtx, rank: int = 1) -> LambdaModule:
    """Free module of the given rank, in the monomial lattice basis."""
    L = ctx.lattice
    exps = ctx.x_exponents()
    pos = {a: t for t, a in enumerate(exps)}
    X1 = [la.zeros(L, L) for _ in range(ctx.m)]
    for t, a in enumerate(exps):
        for i in range(ctx.m):
            if a[i] + 1 < ctx.ell:
                up = list(a)
                up[i] += 1
                X1[i][pos[tuple(up)], t] = 1
    if rank == 1:
        return LambdaModule(ctx, X1, check=False)
    I = la.identity(rank)
    return LambdaModule(ctx, [la.kron(ctx.field, I, Xi) for Xi in X1], check=False)


def trivial_lambda(ctx: AlgebraCtx) -> LambdaModule:
    return LambdaModule(ctx, [la.zeros(1, 1) for _ in range(ctx.m)], check=False)


def restrict_to_lambda(M: rm.AModule) -> LambdaModule:
    """Forget the group action of an A-module."""
    return LambdaModule(M.ctx, M.X, check=False)


def _lattice_columns(ctx: AlgebraCtx, X: list, v: np.ndarray) -> np.ndarray:
    """Columns X^a v over the exponent lattice, in lattice order."""
    F = ctx.field
    L = ctx.lattice
    exps = ctx.x_exponents()
    cols = la.zeros(v.shape[0], L)
    cols[:, 0] = v
    for t in range(1, L):
        a = exps[t]
        i = next(k for k in range(ctx.m) if a[k] > 0)
        prev = list(a)
        prev[i] -= 1
        cols[:, t] = F.matmul(X[i], cols[:, exps.index(tuple(prev))])
    return cols


def lambda_top_dim(M: LambdaModule) -> int:
    F = M.ctx.field
    if M.dim == 0:
        return 0
    return M.dim - la.rank(F, np.hstack(M.X))


def lambda_cover(M: LambdaModule):
    """(free cover F -> M as a matrix, rank of F); Lambda is local so any
    lift of a basis of the head generates minimally."""
    ctx, F = M.ctx, M.ctx.field
    rad = la.column_space(F, np.hstack(M.X)) if M.dim else la.zeros(0, 0)
    _, pivots = la.rref(F, rad.T)
    free = [i for i in range(M.dim) if i not in pivots]
    gens = la.identity(M.dim)[:, free]
    blocks = [
        _lattice_columns(ctx, M.X, gens[:, j]) for j in range(gens.shape[1])
    ]
    cov = np.hstack(blocks) if blocks else la.zeros(M.dim, 0)
    assert la.rank(F, cov) == M.dim
    return cov, gens.shape[1]


def lambda_submodule(M: LambdaModule, B: np.ndarray) -> tuple[LambdaModule, np.ndarray]:
    F = M.ctx.field
    B = la.column_space(F, np.asarray(B, dtype=np.int64))
    d = B.shape[1]
    if d == 0:
        z = [la.zeros(0, 0) for _ in range(M.ctx.m)]
        return LambdaModule(M.ctx, z, check=False), B
    images = np.hstack([F.matmul(Xi, B) for Xi in M.X])
    coords = la.solve(F, B, images)
    X = [coords[:, i * d : (i + 1) * d] for i in range(M.ctx.m)]
    return LambdaModule(M.ctx, X, check=False), B


def lambda_omega(M: LambdaModule) -> LambdaModule:
    """Kernel of the free cover of M."""
    cov, rank = lambda_cover(M)
    P = free_lambda(M.ctx, rank) if rank else LambdaModule(
        M.ctx, [la.zeros(0, 0)] * M.ctx.m, check=False
    )
    K = la.nullspace(M.ctx.field, cov)
    return lambda_submodule(P, K)[0]


def _min_generators_lambda(M: LambdaModule, B: np.ndarray) -> np.ndarray:
    """Minimal generating vectors of the (invariant) span of B's columns."""
    F = M.ctx.field
    if B.shape[1] == 0:
        return B
    Sub, B = lambda_submodule(M, B)
    rad = la.column_space(F, np.hstack(Sub.X)) if Sub.dim else la.zeros(0, 0)
    _, pivots = la.rref(F, rad.T)
    free = [i for i in range(Sub.dim) if i not in pivots]
    return F.matmul(B, la.identity(Sub.dim)[:, free])


class LambdaPresentation:
    """Generators-and-relations presentation of a Lambda-module U, used to
    compute dim Hom(U, N) cheaply for many small targets N."""

    def __init__(self, U: LambdaModule):
        ctx, F = U.ctx, U.ctx.field
        self.ctx = ctx
        cov, rank = lambda_cover(U)
        self.rank = rank
        P = free_lambda(ctx, rank)
        K = la.nullspace(F, cov)
        self.rel = _min_generators_lambda(P, K) if K.shape[1] else K

    def hom_dim(self, N: LambdaModule) -> int:
        """dim Hom(U, N) = solutions of the relation constraints in N^rank."""
        ctx, F = self.ctx, self.ctx.field
        L = ctx.lattice
        n = N.dim
        if n == 0 or self.rank == 0:
            return 0
        flats = np.stack(
            [
                _lattice_columns(ctx, N.X, la.identity(n)[:, c])
                for c in range(n)
            ],
            axis=2,
        )  # n x L x n : flats[:, t, c] = X^{a_t} e_c
        total = self.rank * n
        if self.rel.shape[1] == 0:
            return total
        rows = []
        for r in range(self.rel.shape[1]):
            kv = self.rel[:, r]
            row = la.zeros(n, total)
            for s in range(self.rank):
                seg = kv[s * L : (s + 1) * L]
                if np.any(seg):
                    # sum_a seg[a] * X^a, as an n x n matrix
                    comb = F.matmul(seg[None, :], flats.reshape(n, L, n).transpose(1, 0, 2).reshape(L, n * n))
                    row[:, s * n : (s + 1) * n] = comb.reshape(n, n)
            rows.append(row)
        A = np.vstack(rows)
        return total - la.rank(F, A)


def lambda_hom_dim(U: LambdaModule, N: LambdaModule) -> int:
    return LambdaPresentation(U).hom_dim(N)


def stable_hom_criterion(M: LambdaModule, point: ProjPoint,
                         pres: "LambdaPresentation | None" = None,
                         free_hom: int | None = None) -> bool:
    """Whether stable Hom(V(lambda) restricted, M) is nonzero.

    dim of the stable hom space is dim Hom(U,M) - dim Hom(U,P(M)) + dim
    Hom(U,Omega M): maps factoring through a projective are exactly those
    factoring through the cover of M.
    """
    ctx = M.ctx
    if pres is None:
        V = rm.v_module(ctx, point.coords)
        pres = LambdaPresentation(restrict_to_lambda(V))
    if free_hom is None:
        free_hom = pres.hom_dim(free_lambda(ctx, 1))
    _, cover_rank = lambda_cover(M)
    d_m = pres.hom_dim(M)
    d_p = cover_rank * free_hom
    d_o = pres.hom_dim(lambda_omega(M))
    stable = d_m - d_p + d_o
    assert stable >= 0
    return stable > 0


def lambda_rank_variety(M: LambdaModule) -> OrbitVariety:
    """Rank variety of a Lambda-module, via induction up to A."""
    M.validate()
    return rank_variety(rm.induce_from_lambda(M.ctx, M.X))


def lambda_support_variety(engine, M: LambdaModule, n_max: int | None = None,
                           d_max: int = 4):
    """Support variety of a Lambda-module, computed on the induced A-module."""
    M.validate()
    ind = rm.induce_from_lambda(M.ctx, M.X)
    return engine.support_variety(ind, n_max=n_max, d_max=d_max)


def random_lambda_module(ctx: AlgebraCtx, rng, max_rank: int = 2,
                         max_rels: int = 3) -> LambdaModule:
    """Random quotient of a small free Lambda-module."""
    F = ctx.field
    for _ in range(50):
        rank = int(rng.integers(1, max_rank + 1))
        P = free_lambda(ctx, rank)
        nrel = int(rng.integers(0, max_rels + 1))
        if nrel == 0:
            return P
        V = rng.integers(0, F.order, size=(P.dim, nrel)).astype(np.int64)
        B = la.column_space(F, V)
        # close under the action
        while True:
            B2 = la.column_space(F, np.hstack([B] + [F.matmul(Xi, B) for Xi in P.X]))
            if B2.shape[1] == B.shape[1]:
                break
            B = B2
        if B.shape[1] == P.dim:
            continue
        _, pivots = la.rref(F, B.T)
        free = [i for i in range(P.dim) if i not in pivots]
        E = la.identity(P.dim)[:, free]
        C = np.hstack([B, E])
        Cinv = la.inv_matrix(F, C)
        proj = Cinv[B.shape[1] :, :]
        X = [F.matmul(proj, F.matmul(Xi, E)) for Xi in P.X]
        Q = LambdaModule(ctx, X, check=False)
        if Q.dim > 0:
            return Q
    raise OutOfRange("failed to generate a nonzero random Lambda-module")


def hochschild_m1_dims(ell: int, n_max: int, p: int, r: int = 1) -> list[int]:
    """dim HH^n of k[t]/(t^ell) for 1 <= n <= n_max, from the periodic
    bimodule resolution with alternating differentials u and v."""
    if n_max < 1:
        raise OutOfRange("n_max must be >= 1")
    F = make_field(p, r, ell)
    # Lambda^e = k[t1,t2]/(t1^ell, t2^ell); regular representation
    L2 = ell * ell
    idx = lambda i, j: i * ell + j
    T1 = la.zeros(L2, L2)
    T2 = la.zeros(L2, L2)
    for i in range(ell):
        for j in range(ell):
            if i + 1 < ell:
                T1[idx(i + 1, j), idx(i, j)] = 1
            if j + 1 < ell:
                T2[idx(i, j + 1), idx(i, j)] = 1
    U = np.asarray(F.sub(T1, T2), dtype=np.int64)
    V = la.zeros(L2, L2)
    for i in range(ell):
        V = np.asarray(
            F.add(V, F.matmul(la.matpow(F, T1, i), la.matpow(F, T2, ell - 1 - i))),
            dtype=np.int64,
        )
    # the complex is periodic: check u v = v u = 0 and exactness of ranks
    assert not np.any(F.matmul(U, V)) and not np.any(F.matmul(V, U))
    assert la.rank(F, U) + la.rank(F, V) == L2
    # Hom over the enveloping algebra from the free term is Lambda itself;
    # u acts as t x - x t = 0 and v as sum t^i x t^{ell-1-i}
    T = la.zeros(ell, ell)
    for i in range(ell - 1):
        T[i + 1, i] = 1
    u_act = np.asarray(F.sub(T, T), dtype=np.int64)
    v_act = la.zeros(ell, ell)
    for i in range(ell):
        v_act = np.asarray(
            F.add(v_act, F.matmul(la.matpow(F, T, i), la.matpow(F, T, ell - 1 - i))),
            dtype=np.int64,
        )
    dims = []
    for n in range(1, n_max + 1):
        dn1 = u_act if (n + 1) % 2 == 1 else v_act  # delta^n comes from d_{n+1}
        dn0 = u_act if n % 2 == 1 else v_act  # delta^{n-1} from d_n
        ker = ell - la.rank(F, dn1)
        img = la.rank(F, dn0)
        dims.append(ker - img)
    return dims
