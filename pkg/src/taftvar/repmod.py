"""Finite-dimensional modules over the quantum elementary abelian algebra.

A module is given by its generator action matrices (m nilpotent X matrices and
m invertible G matrices) over the coefficient field.  Everything downstream --
projectivity tests, projective covers, syzygies, hom spaces -- works from
these matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from . import linalg as la
from .algebra import AlgebraCtx, AlgElem
from .errors import ContextMismatch, OutOfRange, RelationViolation, ZeroPoint


class AModule:
    """A finite-dimensional left module, stored as generator action matrices."""

    def __init__(self, ctx: AlgebraCtx, X: list, G: list, check: bool = True):
        self.ctx = ctx
        self.X = [np.asarray(Xi, dtype=np.int64) for Xi in X]
        self.G = [np.asarray(Gi, dtype=np.int64) for Gi in G]
        self.dim = self.X[0].shape[0] if self.X else 0
        if check:
            self.validate()

    def validate(self):
        """Check all defining relations of the algebra on the action matrices."""
        ctx, F = self.ctx, self.ctx.field
        m, ell, n = ctx.m, ctx.ell, self.dim
        if len(self.X) != m or len(self.G) != m:
            raise RelationViolation(f"expected {m} X and {m} G matrices")
        for M in self.X + self.G:
            if M.shape != (n, n):
                raise RelationViolation("action matrices must be square of equal size")
        I = la.identity(n)
        for i in range(m):
            if not np.array_equal(la.matpow(F, self.X[i], ell), la.zeros(n, n)):
                raise RelationViolation(f"X_{i+1}^{ell} != 0")
            if not np.array_equal(la.matpow(F, self.G[i], ell), I):
                raise RelationViolation(f"g_{i+1}^{ell} != 1")
            for j in range(m):
                if not np.array_equal(
                    F.matmul(self.X[i], self.X[j]), F.matmul(self.X[j], self.X[i])
                ):
                    raise RelationViolation(f"X_{i+1} X_{j+1} != X_{j+1} X_{i+1}")
                if not np.array_equal(
                    F.matmul(self.G[i], self.G[j]), F.matmul(self.G[j], self.G[i])
                ):
                    raise RelationViolation(f"g_{i+1} g_{j+1} != g_{j+1} g_{i+1}")
                lhs = F.matmul(self.G[i], self.X[j])
                rhs = F.matmul(self.X[j], self.G[i])
                if i == j:
                    rhs = la.scale(F, F.q_powers[1], rhs)
                if not np.array_equal(lhs, rhs):
                    raise RelationViolation(f"g_{i+1} X_{j+1} relation fails")

    # -- action --------------------------------------------------------------

    def act_on(self, elem: AlgElem, V: np.ndarray) -> np.ndarray:
        """Apply an algebra element to a batch of column vectors."""
        if elem.ctx is not self.ctx:
            raise ContextMismatch("element from a different algebra context")
        F = self.ctx.field
        V = np.asarray(V, dtype=np.int64)
        vec = V.ndim == 1
        if vec:
            V = V[:, None]
        out = la.zeros(self.dim, V.shape[1])
        for idx, c in elem.terms.items():
            a, b = self.ctx.decode(idx)
            W = V
            for i in range(self.ctx.m - 1, -1, -1):
                for _ in range(b[i]):
                    W = F.matmul(self.G[i], W)
            for i in range(self.ctx.m - 1, -1, -1):
                for _ in range(a[i]):
                    W = F.matmul(self.X[i], W)
            out = np.asarray(F.add(out, la.scale(F, c, W)), dtype=np.int64)
        return out[:, 0] if vec else out

    def act(self, elem: AlgElem) -> np.ndarray:
        """Action matrix of an arbitrary algebra element."""
        return self.act_on(elem, la.identity(self.dim))

    def restrict_to_tau(self, lam) -> np.ndarray:
        """Action matrix of tau_lambda = sum_i lambda_i X_i h_i."""
        ctx, F = self.ctx, self.ctx.field
        T = la.zeros(self.dim, self.dim)
        H = la.identity(self.dim)
        for i in range(ctx.m):
            c = F._coerce(lam[i])
            if c:
                T = np.asarray(
                    F.add(T, la.scale(F, c, F.matmul(self.X[i], H))), dtype=np.int64
                )
            H = F.matmul(self.G[i], H)
        return T

    def radical_basis(self) -> np.ndarray:
        """Basis of rad M = sum_i X_i M, as columns."""
        if self.dim == 0:
            return la.zeros(0, 0)
        stacked = np.hstack(self.X)
        return la.column_space(self.ctx.field, stacked)

    def __repr__(self):
        return f"AModule(dim={self.dim}, ell={self.ctx.ell}, m={self.ctx.m})"


# ---------------------------------------------------------------------------
# constructors


def trivial(ctx: AlgebraCtx) -> AModule:
    return simple(ctx, (0,) * ctx.m)


def simple(ctx: AlgebraCtx, chi) -> AModule:
    """One-dimensional simple: X_i act by 0, g_i by q^{chi_i}."""
    chi = tuple(int(c) % ctx.ell for c in chi)
    X = [la.zeros(1, 1) for _ in range(ctx.m)]
    G = [np.array([[ctx.field.q_powers[c]]], dtype=np.int64) for c in chi]
    return AModule(ctx, X, G, check=False)


def projective_indec(ctx: AlgebraCtx, chi) -> AModule:
    """The projective cover A e_chi of the simple with character chi.

    Basis {X^a e_chi} in lattice order: X_i shifts the exponent vector,
    g_i is diagonal with entry q^{a_i + chi_i}.
    """
    chi = tuple(int(c) % ctx.ell for c in chi)
    ell, m = ctx.ell, ctx.m
    L = ctx.lattice
    exps = ctx.x_exponents()
    pos = {a: t for t, a in enumerate(exps)}
    X = [la.zeros(L, L) for _ in range(m)]
    G = [la.zeros(L, L) for _ in range(m)]
    for t, a in enumerate(exps):
        for i in range(m):
            if a[i] + 1 < ell:
                up = list(a)
                up[i] += 1
                X[i][pos[tuple(up)], t] = 1
            G[i][t, t] = ctx.field.q_powers[(a[i] + chi[i]) % ell]
    return AModule(ctx, X, G, check=False)


def regular(ctx: AlgebraCtx) -> AModule:
    """A as a left module over itself, in the monomial basis."""
    F = ctx.field
    D = ctx.dim
    X = [la.zeros(D, D) for _ in range(ctx.m)]
    G = [la.zeros(D, D) for _ in range(ctx.m)]
    for j in range(D):
        for i in range(ctx.m):
            xi = ctx.x(i)
            gi = ctx.g(i)
            for src, elem in ((0, xi), (1, gi)):
                prod = elem * AlgElem(ctx, {j: 1})
                tgt = X[i] if src == 0 else G[i]
                for k, c in prod.terms.items():
                    tgt[k, j] = c
    return AModule(ctx, X, G, check=False)


def right_mult_matrix(ctx: AlgebraCtx, elem: AlgElem) -> np.ndarray:
    """Matrix of a -> a * elem on A in the monomial basis."""
    D = ctx.dim
    M = la.zeros(D, D)
    for j in range(D):
        prod = AlgElem(ctx, {j: 1}) * elem
        for k, c in prod.terms.items():
            M[k, j] = c
    return M


def direct_sum(mods: list[AModule]) -> AModule:
    ctx = mods[0].ctx
    for M in mods:
        if M.ctx is not ctx:
            raise ContextMismatch("direct sum across algebra contexts")
    n = sum(M.dim for M in mods)
    X = [la.zeros(n, n) for _ in range(ctx.m)]
    G = [la.zeros(n, n) for _ in range(ctx.m)]
    off = 0
    for M in mods:
        for i in range(ctx.m):
            X[i][off : off + M.dim, off : off + M.dim] = M.X[i]
            G[i][off : off + M.dim, off : off + M.dim] = M.G[i]
        off += M.dim
    return AModule(ctx, X, G, check=False)


def tensor(M: AModule, N: AModule) -> AModule:
    """M (x) N with the diagonal action through the coproduct."""
    if M.ctx is not N.ctx:
        raise ContextMismatch("tensor across algebra contexts")
    ctx, F = M.ctx, M.ctx.field
    In = la.identity(N.dim)
    Im = la.identity(M.dim)
    X = []
    G = []
    for i in range(ctx.m):
        Xi = np.asarray(
            F.add(la.kron(F, M.X[i], In), la.kron(F, M.G[i], N.X[i])), dtype=np.int64
        )
        X.append(Xi)
        G.append(la.kron(F, M.G[i], N.G[i]))
    return AModule(ctx, X, G, check=False)


def dual(M: AModule) -> AModule:
    """The linear dual with action through the antipode."""
    ctx, F = M.ctx, M.ctx.field
    X = []
    G = []
    for i in range(ctx.m):
        Gi_inv = la.matpow(F, M.G[i], ctx.ell - 1)
        SXi = la.scale(F, F.neg(1), F.matmul(Gi_inv, M.X[i]))
        X.append(SXi.T.copy())
        G.append(Gi_inv.T.copy())
    return AModule(ctx, X, G, check=False)


def v_module(ctx: AlgebraCtx, lam, primed: bool = False) -> AModule:
    """V(lambda) = A tau^{ell-1} (dim ell^{2m-1}); V'(lambda) = A tau if primed."""
    lam = [ctx.field._coerce(c) for c in lam]
    if all(c == 0 for c in lam):
        raise ZeroPoint("lambda must be nonzero")
    tau = ctx.tau(lam)
    e = 1 if primed else ctx.ell - 1
    R = right_mult_matrix(ctx, tau**e)
    B = la.column_space(ctx.field, R)
    return submodule(regular(ctx), B)[0]


def induce_from_lambda(ctx: AlgebraCtx, xmats: list) -> AModule:
    """Induce a module over the X-subalgebra up to A.

    Basis g^b (x) v with b over group exponent vectors in lattice order:
    X_i sends g^b (x) v to q^{-b_i} g^b (x) X_i v, and g_j shifts b by e_j.
    """
    F = ctx.field
    ell, m = ctx.ell, ctx.m
    xmats = [np.asarray(Xi, dtype=np.int64) for Xi in xmats]
    d = xmats[0].shape[0]
    exps = ctx.x_exponents()
    pos = {b: t for t, b in enumerate(exps)}
    n = ctx.lattice * d
    X = [la.zeros(n, n) for _ in range(m)]
    G = [la.zeros(n, n) for _ in range(m)]
    for t, b in enumerate(exps):
        s = slice(t * d, (t + 1) * d)
        for i in range(m):
            X[i][s, s] = la.scale(F, F.q_powers[(-b[i]) % ell], xmats[i])
            up = list(b)
            up[i] = (up[i] + 1) % ell
            t2 = pos[tuple(up)]
            G[i][t2 * d : (t2 + 1) * d, s] = la.identity(d)
    return AModule(ctx, X, G)


# ---------------------------------------------------------------------------
# sub/quotient structure


def submodule(M: AModule, B: np.ndarray) -> tuple[AModule, np.ndarray]:
    """Module structure on the span of the columns of B (must be invariant).

    Returns (N, B') where B' has independent columns and N is the action in
    those coordinates.  Raises ValueError if the span is not invariant.
    """
    F = M.ctx.field
    B = la.column_space(F, np.asarray(B, dtype=np.int64))
    d = B.shape[1]
    if d == 0:
        z = [la.zeros(0, 0) for _ in range(M.ctx.m)]
        return AModule(M.ctx, z, list(z), check=False), B
    images = np.hstack([F.matmul(A, B) for A in M.X + M.G])
    coords = la.solve(F, B, images)
    X = [coords[:, i * d : (i + 1) * d] for i in range(M.ctx.m)]
    G = [coords[:, (M.ctx.m + i) * d : (M.ctx.m + i + 1) * d] for i in range(M.ctx.m)]
    return AModule(M.ctx, X, G, check=False), B


def quotient(M: AModule, U: np.ndarray) -> tuple[AModule, np.ndarray, np.ndarray]:
    """Quotient by the invariant span of U.  Returns (Q, proj, section)."""
    F = M.ctx.field
    n = M.dim
    U = la.column_space(F, np.asarray(U, dtype=np.int64))
    u = U.shape[1]
    _, pivots = la.rref(F, U.T)
    free = [i for i in range(n) if i not in pivots]
    E = la.identity(n)[:, free]
    C = np.hstack([U, E])
    Cinv = la.inv_matrix(F, C)
    proj = Cinv[u:, :]
    X = [F.matmul(proj, F.matmul(A, E)) for A in M.X]
    G = [F.matmul(proj, F.matmul(A, E)) for A in M.G]
    return AModule(M.ctx, X, G, check=False), proj, E


def generated_submodule(M: AModule, V: np.ndarray) -> np.ndarray:
    """Basis of the submodule generated by the columns of V."""
    F = M.ctx.field
    B = la.column_space(F, np.asarray(V, dtype=np.int64))
    while True:
        images = np.hstack([B] + [F.matmul(A, B) for A in M.X + M.G])
        B2 = la.column_space(F, images)
        if B2.shape[1] == B.shape[1]:
            return B2
        B = B2


def weight_spaces(M: AModule) -> dict:
    """Joint eigenspace decomposition for the group action: chi -> basis."""
    ctx, F = M.ctx, M.ctx.field
    spaces = {(): la.identity(M.dim)}
    for i in range(ctx.m):
        nxt = {}
        for key, B in spaces.items():
            GB = F.matmul(M.G[i], B)
            for c in range(ctx.ell):
                D = np.asarray(F.sub(GB, la.scale(F, F.q_powers[c], B)), dtype=np.int64)
                Ns = la.nullspace(F, D)
                if Ns.shape[1]:
                    nxt[key + (c,)] = F.matmul(B, Ns)
        spaces = nxt
    assert sum(B.shape[1] for B in spaces.values()) == M.dim
    return spaces


# ---------------------------------------------------------------------------
# projective covers and syzygies


@dataclass
class CoverData:
    """A projective cover P -> M with its summand bookkeeping."""

    P: AModule
    chis: list  # character of each indecomposable summand
    cover: np.ndarray  # dim M x dim P
    offsets: list  # column offset of each summand block


def _top_weight_vectors(M: AModule):
    """Weight vectors spanning the head M/rad M, lifted and purified in M."""
    ctx, F = M.ctx, M.ctx.field
    R = M.radical_basis()
    T, proj, sec = quotient(M, R)
    out = []
    for chi, B in sorted(weight_spaces(T).items()):
        lifts = F.matmul(sec, B)
        pure = M.act_on(ctx.idempotent(chi), lifts)
        for j in range(pure.shape[1]):
            out.append((chi, pure[:, j]))
    return out


def cover(M: AModule) -> CoverData:
    """Minimal projective cover of M."""
    ctx, F = M.ctx, M.ctx.field
    L = ctx.lattice
    exps = ctx.x_exponents()
    tops = _top_weight_vectors(M)
    chis = [chi for chi, _ in tops]
    blocks = []
    for chi, v in tops:
        cols = la.zeros(M.dim, L)
        cols[:, 0] = v
        for t in range(1, L):
            a = exps[t]
            i = next(k for k in range(ctx.m) if a[k] > 0)
            prev = list(a)
            prev[i] -= 1
            cols[:, t] = F.matmul(M.X[i], cols[:, exps.index(tuple(prev))])
        blocks.append(cols)
    if blocks:
        cov = np.hstack(blocks)
    else:
        cov = la.zeros(M.dim, 0)
    P = direct_sum([projective_indec(ctx, chi) for chi in chis]) if chis else AModule(
        ctx, [la.zeros(0, 0)] * ctx.m, [la.zeros(0, 0)] * ctx.m, check=False
    )
    assert la.rank(F, cov) == M.dim, "cover is not surjective"
    offsets = [s * L for s in range(len(chis))]
    return CoverData(P=P, chis=chis, cover=cov, offsets=offsets)


def omega_with_data(M: AModule):
    """(Omega M, kernel basis in cover coordinates, CoverData)."""
    cd = cover(M)
    K = la.nullspace(M.ctx.field, cd.cover)
    O, K = submodule(cd.P, K)
    return O, K, cd


def omega(M: AModule) -> AModule:
    """First syzygy: kernel of the minimal projective cover."""
    return omega_with_data(M)[0]


def omega_inverse(M: AModule) -> AModule:
    """Inverse syzygy, via duality: cokernel of an injective hull."""
    return dual(omega(dual(M)))


def is_projective(M: AModule) -> bool:
    """Projectivity via the rank criterion: dim M = |G| * dim top(M)."""
    if M.dim == 0:
        return True
    F = M.ctx.field
    rad_rank = la.rank(F, np.hstack(M.X))
    return M.dim == M.ctx.lattice * (M.dim - rad_rank)


def strip_projective_summands(M: AModule) -> AModule:
    """A module stably isomorphic to M with no projective direct summands.

    Computed as Omega-inverse of Omega, which always lands in the stable
    category's minimal representative.
    """
    return omega_inverse(omega(M))


# ---------------------------------------------------------------------------
# hom spaces


def _min_generators(M: AModule, B: np.ndarray) -> np.ndarray:
    """Columns of B-span minimally generating it as a module (B independent).

    The span of B must be a submodule of the ambient module M.
    """
    F = M.ctx.field
    if B.shape[1] == 0:
        return B
    Sub, B = submodule(M, B)
    R = Sub.radical_basis()
    _, pivots = la.rref(F, R.T)
    free = [i for i in range(Sub.dim) if i not in pivots]
    return F.matmul(B, la.identity(Sub.dim)[:, free])


def hom_space(M: AModule, N: AModule) -> list[np.ndarray]:
    """Basis of Hom(M, N), via a minimal projective presentation of M."""
    if M.ctx is not N.ctx:
        raise ContextMismatch("hom across algebra contexts")
    ctx, F = M.ctx, M.ctx.field
    if M.dim == 0 or N.dim == 0:
        return []
    cd = cover(M)
    K = la.nullspace(F, cd.cover)
    Kgens = _min_generators(cd.P, K) if K.shape[1] else K
    L = ctx.lattice
    exps = ctx.x_exponents()
    # per summand: tensor NK[a] = X^a applied to a weight-space basis of N
    Wcache: dict = {}
    summand_data = []
    for chi in cd.chis:
        if chi not in Wcache:
            W = la.column_space(F, N.act_on(ctx.idempotent(chi), la.identity(N.dim)))
            NK = [None] * L
            NK[0] = W
            for t in range(1, L):
                a = exps[t]
                i = next(k for k in range(ctx.m) if a[k] > 0)
                prev = list(a)
                prev[i] -= 1
                NK[t] = F.matmul(N.X[i], NK[exps.index(tuple(prev))])
            Wcache[chi] = (W, NK)
        summand_data.append(Wcache[chi])
    widths = [W.shape[1] for W, _ in summand_data]
    total = sum(widths)
    if total == 0:
        return []
    # constraints: each kernel generator must map to zero
    rows = []
    for kcol in range(Kgens.shape[1]):
        kv = Kgens[:, kcol]
        row = la.zeros(N.dim, total)
        woff = 0
        for s, (W, NK) in enumerate(summand_data):
            w = widths[s]
            seg = kv[cd.offsets[s] : cd.offsets[s] + L]
            if np.any(seg) and w:
                flat = np.stack([NK[t].reshape(-1) for t in range(L)])  # L x (n*w)
                combo = F.matmul(seg[None, :], flat).reshape(N.dim, w)
                row[:, woff : woff + w] = combo
            woff += w
        rows.append(row)
    A = np.vstack(rows) if rows else la.zeros(0, total)
    sol = la.nullspace(F, A)
    # convert each solution into an actual matrix M -> N
    Rinv = la.solve(F, cd.cover, la.identity(M.dim))
    homs = []
    for j in range(sol.shape[1]):
        phi = la.zeros(N.dim, cd.P.dim)
        woff = 0
        for s, (W, NK) in enumerate(summand_data):
            w = widths[s]
            if w:
                u = sol[woff : woff + w, j]
                for t in range(L):
                    phi[:, cd.offsets[s] + t] = F.matmul(NK[t], u)
            woff += w
        homs.append(F.matmul(phi, Rinv))
    return homs


def dim_hom(M: AModule, N: AModule) -> int:
    return len(hom_space(M, N))


def is_isomorphic(M: AModule, N: AModule, rng=None, trials: int = 20) -> bool:
    """Probabilistic-complete isomorphism test via random hom combinations."""
    if M.ctx is not N.ctx:
        raise ContextMismatch("comparison across algebra contexts")
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    F = M.ctx.field
    if dim_hom(M, N) != dim_hom(N, M) or dim_hom(M, M) != dim_hom(N, N):
        return False
    homs = hom_space(M, N)
    if not homs:
        return False
    if rng is None:
        rng = np.random.default_rng(0)
    for h in homs:
        if la.rank(F, h) == M.dim:
            return True
    for _ in range(trials):
        coeffs = rng.integers(0, F.order, size=len(homs))
        T = la.zeros(N.dim, M.dim)
        for c, h in zip(coeffs, homs):
            T = np.asarray(F.add(T, la.scale(F, int(c), h)), dtype=np.int64)
        if la.rank(F, T) == M.dim:
            return True
    return False


# ---------------------------------------------------------------------------
# random modules


def random_module(ctx: AlgebraCtx, rng, max_summands: int = 3, max_rels: int = 4) -> AModule:
    """A random quotient of a random finite direct sum of projectives."""
    F = ctx.field
    for _ in range(50):
        s = int(rng.integers(1, max_summands + 1))
        chis = [tuple(int(c) for c in rng.integers(0, ctx.ell, size=ctx.m)) for _ in range(s)]
        P = direct_sum([projective_indec(ctx, chi) for chi in chis])
        nrel = int(rng.integers(0, max_rels + 1))
        if nrel == 0:
            return P
        V = rng.integers(0, F.order, size=(P.dim, nrel)).astype(np.int64)
        U = generated_submodule(P, V)
        if U.shape[1] == P.dim:
            continue
        Q, _, _ = quotient(P, U)
        if Q.dim > 0:
            return Q
    raise OutOfRange("failed to generate a nonzero random module")
