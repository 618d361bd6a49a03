"""Cohomological support varieties via minimal projective resolutions.

The cohomology ring H*(A,k) is a polynomial ring k[y_1..y_m] with deg y_i = 2.
We realize the y_i as degree-2 cochains on the minimal resolution of k,
normalized so that restricting y_i along tau at the i-th coordinate point
gives exactly the generator of the truncated-polynomial line.  Chain-map lifts
of the y_i give the module structure on H*(A,N) for any N, and truncated
homogeneous annihilator ideals cut out the support variety.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations_with_replacement

import numpy as np

from . import linalg as la
from . import repmod as rm
from .errors import (
    NormalizationFailure,
    OutOfRange,
    ResourceBudgetExceeded,
    ZeroCocycle,
    ZeroPoint,
)
from .rankvar import ProjPoint, enumerate_points
from .repmod import AModule


class Resolution:
    """Minimal projective resolution of a module, extendable degree by degree.

    diffs[0] is the augmentation P_0 -> target; diffs[n] is d_n: P_n -> P_{n-1}.
    kernels[n] is a basis of Omega^n = ker d_{n-1} inside P_{n-1}.
    """

    def __init__(self, target: AModule, max_total_dim: int | None = None):
        self.ctx = target.ctx
        self.target = target
        self.max_total_dim = max_total_dim
        cd = rm.cover(target)
        self.covers = [cd]
        self.diffs = [cd.cover]
        self.kernels: list = [None]
        self.omegas: list = [None]
        self.total_dim = cd.P.dim
        self._check_budget()

    def _check_budget(self):
        if self.max_total_dim is not None and self.total_dim > self.max_total_dim:
            raise ResourceBudgetExceeded(
                f"resolution size {self.total_dim} exceeds ceiling {self.max_total_dim}"
            )

    @property
    def length(self) -> int:
        return len(self.diffs) - 1

    def extend_to(self, n: int):
        while self.length < n:
            self._step()

    def _step(self):
        F = self.ctx.field
        K = la.nullspace(F, self.diffs[-1])
        O, K = rm.submodule(self.covers[-1].P, K)
        cd = rm.cover(O)
        d = F.matmul(K, cd.cover) if O.dim else la.zeros(self.covers[-1].P.dim, 0)
        # exactness: im(d) = ker(previous) by construction; double check d.d = 0
        if len(self.diffs) >= 1 and d.size:
            assert not np.any(F.matmul(self.diffs[-1], d)), "d o d != 0"
        # minimality: the image must lie in rad(P), i.e. vanish on generator rows
        for off in self.covers[-1].offsets:
            assert not np.any(d[off, :]), "resolution not minimal"
        self.covers.append(cd)
        self.diffs.append(d)
        self.kernels.append(K)
        self.omegas.append(O)
        self.total_dim += cd.P.dim
        self._check_budget()

    def P(self, n: int) -> AModule:
        self.extend_to(n)
        return self.covers[n].P

    def summand_chis(self, n: int) -> list:
        self.extend_to(n)
        return self.covers[n].chis

    def betti(self, n: int) -> int:
        """Number of indecomposable projective summands of P_n."""
        return len(self.summand_chis(n))


class CoeffData:
    """Weight-space data of a coefficient module N, shared across cochain
    complexes for N and for all its twists by one-dimensional simples.

    Twisting N by the dual simple of character sigma scales X_i by q^{-sigma_i}
    and shifts every weight space by sigma, so one weight decomposition of N
    serves all twists.
    """

    def __init__(self, N: AModule):
        self.N = N
        self.ctx = N.ctx
        ctx, F = N.ctx, N.ctx.field
        L = ctx.lattice
        exps = ctx.x_exponents()
        ws = rm.weight_spaces(N) if N.dim else {}
        self._base: dict = {}
        for chi in ctx.characters():
            W = ws.get(chi, la.zeros(N.dim, 0))
            w = W.shape[1]
            NK = [W]
            for t in range(1, L):
                a = exps[t]
                i = next(k for k in range(ctx.m) if a[k] > 0)
                prev = list(a)
                prev[i] -= 1
                NK.append(F.matmul(N.X[i], NK[exps.index(tuple(prev))]))
            flat = np.stack([B.reshape(-1) for B in NK]) if w else la.zeros(L, 0)
            Linv = la.left_inverse(F, W) if w else la.zeros(0, N.dim)
            self._base[chi] = (W, Linv, flat)
        self._twisted: dict = {}

    def data(self, chi, shift):
        """(W, Linv, flat) for the generator character chi of the shift-twist."""
        key = (chi, shift)
        if key not in self._twisted:
            ctx, F = self.ctx, self.ctx.field
            src = tuple((chi[i] + shift[i]) % ctx.ell for i in range(ctx.m))
            W, Linv, flat = self._base[src]
            if any(shift) and flat.shape[1]:
                factors = np.array(
                    [
                        F.q_powers[(-sum(s * e for s, e in zip(shift, a))) % ctx.ell]
                        for a in ctx.x_exponents()
                    ],
                    dtype=np.int64,
                )
                flat = np.asarray(F.mul(factors[:, None], flat), dtype=np.int64)
            self._twisted[key] = (W, Linv, flat)
        return self._twisted[key]


class CochainComplex:
    """Hom(P_*, N') in generator coordinates, for a resolution P_* and a
    coefficient module N' given as a simple twist of a base module N.

    A cochain f: P_n -> N' is determined by its values on the summand
    generators, each lying in the matching weight space; coordinates are the
    concatenated weight-space coefficients.
    """

    def __init__(self, res: Resolution, N: AModule, coeff: CoeffData | None = None,
                 shift: tuple | None = None):
        self.res = res
        self.N = N
        self.ctx = res.ctx
        self.coeff = coeff if coeff is not None else CoeffData(N)
        self.shift = shift if shift is not None else (0,) * res.ctx.m
        self._delta: dict = {}
        self._cohom: dict = {}

    def _data_for(self, chi):
        return self.coeff.data(chi, self.shift)

    def widths(self, n: int) -> list[int]:
        return [self._data_for(chi)[0].shape[1] for chi in self.res.summand_chis(n)]

    def dim(self, n: int) -> int:
        return sum(self.widths(n))

    def coffsets(self, n: int) -> list[int]:
        out, acc = [], 0
        for w in self.widths(n):
            out.append(acc)
            acc += w
        return out

    def induced(self, phi: np.ndarray, a: int, b: int) -> np.ndarray:
        """Matrix of f -> f o phi from C^a to C^b, for a chain map phi: P_b -> P_a."""
        ctx, F = self.ctx, self.ctx.field
        L = ctx.lattice
        n = self.N.dim
        a_chis = self.res.summand_chis(a)
        b_chis = self.res.summand_chis(b)
        a_offs = self.res.covers[a].offsets
        b_offs = self.res.covers[b].offsets
        ca, cb = self.coffsets(a), self.coffsets(b)
        dim_a, dim_b = self.dim(a), self.dim(b)
        out = la.zeros(dim_b, dim_a)
        if dim_a == 0 or dim_b == 0 or len(b_chis) == 0:
            return out
        gen_cols = phi[:, b_offs]
        T = len(b_chis)
        # vals[t] = the full value row-block f(phi(gen_t)) over all a-summands
        vals = la.zeros(T, n * dim_a).reshape(T, n, dim_a)
        for s, chi_s in enumerate(a_chis):
            _, _, flat = self._data_for(chi_s)
            w_s = flat.shape[1] // n if n else 0
            if w_s == 0:
                continue
            U = gen_cols[a_offs[s] : a_offs[s] + L, :]  # L x T
            big = F.matmul(U.T, flat)  # T x (n * w_s)
            vals[:, :, ca[s] : ca[s] + w_s] = big.reshape(T, n, w_s)
        for t, chi_t in enumerate(b_chis):
            _, Linv_t, _ = self._data_for(chi_t)
            w_t = Linv_t.shape[0]
            if w_t:
                out[cb[t] : cb[t] + w_t, :] = F.matmul(Linv_t, vals[t])
        return out

    def delta(self, n: int) -> np.ndarray:
        if n not in self._delta:
            self.res.extend_to(n + 1)
            self._delta[n] = self.induced(self.res.diffs[n + 1], n, n + 1)
        return self._delta[n]

    def to_matrix(self, n: int, coords: np.ndarray) -> np.ndarray:
        """Realize a cochain as an actual matrix P_n -> N."""
        ctx, F = self.ctx, self.ctx.field
        L = ctx.lattice
        mat = la.zeros(self.N.dim, self.res.P(n).dim)
        offs = self.res.covers[n].offsets
        co = self.coffsets(n)
        for s, chi in enumerate(self.res.summand_chis(n)):
            W, _, flat = self._data_for(chi)
            w = W.shape[1]
            if w == 0:
                continue
            u = coords[co[s] : co[s] + w]
            for t in range(L):
                block = flat[t].reshape(self.N.dim, w)
                mat[:, offs[s] + t] = F.matmul(block, u)
        return mat

    def to_coords(self, n: int, mat: np.ndarray) -> np.ndarray:
        """Coordinates of a cochain given as a matrix P_n -> N."""
        F = self.ctx.field
        offs = self.res.covers[n].offsets
        out = la.zeros(self.dim(n), 1)[:, 0]
        co = self.coffsets(n)
        for s, chi in enumerate(self.res.summand_chis(n)):
            _, Linv, _ = self._data_for(chi)
            w = Linv.shape[0]
            if w:
                out[co[s] : co[s] + w] = F.matmul(Linv, mat[:, offs[s]])
        return out

    def cohomology(self, n: int):
        """(ext_dim, lift: C^n-coords of an Ext basis, proj: cocycle -> Ext coords)."""
        if n not in self._cohom:
            F = self.ctx.field
            Z = la.nullspace(F, self.delta(n))
            z = Z.shape[1]
            if n == 0:
                Bim = la.zeros(z, 0)
            else:
                img = la.column_space(F, self.delta(n - 1))
                Bim = la.solve(F, Z, img) if img.shape[1] else la.zeros(z, 0)
                Bim = la.column_space(F, Bim)
            b = Bim.shape[1]
            _, pivots = la.rref(F, Bim.T) if b else (None, [])
            free = [i for i in range(z) if i not in pivots]
            E = np.hstack([Bim, la.identity(z)[:, free]]) if z else la.zeros(0, 0)
            if z:
                Einv = la.inv_matrix(F, E)
                Lz = la.left_inverse(F, Z) if Z.shape[1] else la.zeros(0, self.dim(n))
                lift = F.matmul(Z, E[:, b:])
                proj = F.matmul(Einv[b:, :], Lz)
            else:
                lift = la.zeros(self.dim(n), 0)
                proj = la.zeros(0, self.dim(n))
            self._cohom[n] = (len(free), lift, proj)
        return self._cohom[n]

    def ext_dims(self, n_max: int) -> list[int]:
        return [self.cohomology(n)[0] for n in range(n_max + 1)]


def ext_dims(M: AModule, N: AModule, n_max: int, max_total_dim: int | None = None) -> list[int]:
    """dim Ext^n(M, N) for 0 <= n <= n_max."""
    if n_max < 0:
        raise OutOfRange("n_max must be >= 0")
    res = Resolution(M, max_total_dim=max_total_dim)
    res.extend_to(n_max + 1)
    return CochainComplex(res, N).ext_dims(n_max)


def monomials(m: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of the degree-d monomials in m variables, sorted."""
    out = []
    for combo in combinations_with_replacement(range(m), d):
        alpha = [0] * m
        for i in combo:
            alpha[i] += 1
        out.append(tuple(alpha))
    return sorted(out)


@dataclass
class HData:
    """H*(A, N) as a graded module over k[y_1..y_m], truncated at n_max."""

    n_max: int
    dims: list
    yact: list  # yact[i][n]: Ext^n -> Ext^{n+2}, for n <= n_max - 2

    def mon_action(self, alpha, n: int, F) -> np.ndarray:
        """Action of the monomial y^alpha from Ext^n to Ext^{n+2|alpha|}."""
        M = la.identity(self.dims[n])
        deg = n
        for i, e in enumerate(alpha):
            for _ in range(e):
                M = F.matmul(self.yact[i][deg], M)
                deg += 2
        return M


@dataclass
class SupportVariety:
    """A cohomological support: plain projective points plus diagnostics."""

    points: tuple  # sorted ProjPoints
    stabilized: bool
    betti: list
    route: str

    def point_set(self) -> frozenset:
        return frozenset(self.points)


class CohomologyEngine:
    """Shared state for all cohomology over one algebra: resolution of k,
    normalized y-generators with chain lifts, and the monomial dictionary."""

    def __init__(self, ctx, n_max: int = 10, max_total_dim: int | None = None,
                 endo_dim_limit: int = 2048, resolution: Resolution | None = None):
        if n_max < 2:
            raise OutOfRange("n_max must be >= 2")
        self.ctx = ctx
        self.n_max = n_max
        self.endo_dim_limit = endo_dim_limit
        if resolution is not None:
            self.res = resolution
        else:
            self.res = Resolution(rm.trivial(ctx), max_total_dim=max_total_dim)
        self.res.extend_to(n_max + 1)
        self.kcc = CochainComplex(self.res, rm.trivial(ctx))
        self._mon_rows: dict = {}
        self._hcache: dict = {}
        self._build_y()

    # -- restriction along tau ----------------------------------------------

    def _comparison_vector(self, lam, n: int) -> np.ndarray:
        """u_n of the chain map from the periodic k[t]/(t^ell) resolution."""
        F = self.ctx.field
        ell = self.ctx.ell
        u = la.zeros(self.res.P(0).dim, 1)[:, 0]
        u[self.res.covers[0].offsets[0]] = 1
        for j in range(1, n + 1):
            T = self.res.P(j - 1).restrict_to_tau(lam)
            e = 1 if j % 2 == 1 else ell - 1
            rhs = F.matmul(la.matpow(F, T, e), u)
            u = la.solve(F, self.res.diffs[j], rhs)
        return u

    def restrict_row(self, row: np.ndarray, lam, deg: int) -> int:
        """Scalar c with the restricted class equal to c * y^{deg/2}."""
        u = self._comparison_vector(lam, deg)
        return int(self.ctx.field.matmul(row[None, :], u[:, None])[0, 0])

    def restrict_class(self, poly: dict, lam) -> int:
        """Restrict a polynomial class along tau_lambda; returns a field code."""
        codes = [self.ctx.field._coerce(c) for c in lam]
        if all(c == 0 for c in codes):
            raise ZeroPoint("restriction point must be nonzero")
        row, deg = self.poly_row(poly)
        return self.restrict_row(row, codes, deg)

    # -- y generators --------------------------------------------------------

    def _build_y(self):
        ctx, F = self.ctx, self.ctx.field
        m = ctx.m
        # degree-2 candidate cochains: one per trivial-character summand of P_2
        c2 = self.kcc.dim(2)
        if c2 != m:
            raise NormalizationFailure(f"dim Ext^2(k,k) = {c2}, expected {m}")
        cand_rows = [
            self.kcc.to_matrix(2, la.identity(c2)[:, i])[0] for i in range(c2)
        ]
        R = la.zeros(m, m)
        for i in range(m):
            for j in range(m):
                unit = [1 if t == j else 0 for t in range(m)]
                R[i, j] = self.restrict_row(cand_rows[i], unit, 2)
        try:
            Rinv = la.inv_matrix(F, R)
        except ValueError:
            raise NormalizationFailure("no Ext^2 basis restricts to the delta pattern")
        stacked = np.stack(cand_rows)
        self.y_rows = [F.matmul(Rinv[i][None, :], stacked)[0] for i in range(m)]
        self.y_coords = [Rinv[i] for i in range(m)]
        # chain lifts Y_i^(n): P_{n+2} -> P_n for 0 <= n <= n_max - 2
        self.ylift = [self._chain_lifts(self.y_rows[i]) for i in range(m)]
        self._verify_monomial_dictionary()

    def _module_map_from_gens(self, n: int, gens: list) -> np.ndarray:
        """The A-map P_{n+2} -> P_n with the given generator images."""
        ctx, F = self.ctx, self.ctx.field
        L = ctx.lattice
        exps = ctx.x_exponents()
        Pn = self.res.P(n)
        src = self.res.P(n + 2)
        offs = self.res.covers[n + 2].offsets
        out = la.zeros(Pn.dim, src.dim)
        for t, u in enumerate(gens):
            cols = la.zeros(Pn.dim, L)
            cols[:, 0] = u
            for a_idx in range(1, L):
                a = exps[a_idx]
                i = next(k for k in range(ctx.m) if a[k] > 0)
                prev = list(a)
                prev[i] -= 1
                cols[:, a_idx] = F.matmul(Pn.X[i], cols[:, exps.index(tuple(prev))])
            out[:, offs[t] : offs[t] + L] = cols
        return out

    def _chain_lifts(self, y_row: np.ndarray) -> list:
        """Lifts Y^(n): P_{n+2} -> P_n of a degree-2 cocycle row, n <= n_max - 2."""
        ctx, F = self.ctx, self.ctx.field
        lifts = []
        for n in range(self.n_max - 1):
            if n == 0:
                rhs_full = y_row[None, :]
            else:
                rhs_full = F.matmul(lifts[-1], self.res.diffs[n + 2])
            Pn = self.res.P(n)
            gens = []
            for t, chi in enumerate(self.res.summand_chis(n + 2)):
                rhs = rhs_full[:, self.res.covers[n + 2].offsets[t]]
                u = la.solve(F, self.res.diffs[n], rhs)
                u = Pn.act_on(ctx.idempotent(chi), u)
                gens.append(u)
            Y = self._module_map_from_gens(n, gens)
            if n == 0:
                assert np.array_equal(F.matmul(self.res.diffs[0], Y)[0], y_row)
            else:
                assert np.array_equal(
                    F.matmul(self.res.diffs[n], Y),
                    F.matmul(lifts[-1], self.res.diffs[n + 2]),
                )
            lifts.append(Y)
        return lifts

    # -- the monomial-to-cochain dictionary ----------------------------------

    def mon_row(self, alpha: tuple) -> np.ndarray:
        """Cochain row of the monomial y^alpha, degree 2|alpha|."""
        alpha = tuple(alpha)
        if alpha not in self._mon_rows:
            idxs = [i for i, e in enumerate(alpha) for _ in range(e)]
            if not idxs:
                raise OutOfRange("monomial must have positive degree")
            row = self.y_rows[idxs[0]]
            deg = 2
            for i in idxs[1:]:
                row = self.ctx.field.matmul(row[None, :], self.ylift[i][deg])[0]
                deg += 2
            self._mon_rows[alpha] = row
        return self._mon_rows[alpha]

    def poly_row(self, poly: dict) -> tuple[np.ndarray, int]:
        """Cochain row of a homogeneous polynomial in the y's."""
        F = self.ctx.field
        terms = {tuple(a): F._coerce(c) for a, c in poly.items() if F._coerce(c)}
        if not terms:
            raise ZeroCocycle("zero polynomial")
        degs = {2 * sum(a) for a in terms}
        if len(degs) != 1:
            raise OutOfRange("polynomial must be homogeneous")
        deg = degs.pop()
        if deg > self.n_max:
            raise OutOfRange(f"degree {deg} exceeds n_max = {self.n_max}")
        row = None
        for a, c in terms.items():
            part = la.scale(F, c, self.mon_row(a))
            row = part if row is None else np.asarray(F.add(row, part), dtype=np.int64)
        return row, deg

    def _verify_monomial_dictionary(self):
        """Monomial classes must stay linearly independent in each degree."""
        F = self.ctx.field
        for d in range(1, self.n_max // 2 + 1):
            mons = monomials(self.ctx.m, d)
            coords = np.stack(
                [self.kcc.to_coords(2 * d, self.mon_row(a)[None, :]) for a in mons]
            )
            if la.rank(F, coords) != len(mons):
                raise NormalizationFailure(
                    f"monomials of degree {d} are dependent in Ext^{2*d}(k,k)"
                )

    # -- graded modules and annihilators -------------------------------------

    def h_module(self, N: AModule, n_max: int | None = None,
                 coeff: CoeffData | None = None, shift: tuple | None = None) -> HData:
        n_max = self.n_max if n_max is None else n_max
        if n_max > self.n_max:
            raise OutOfRange("n_max exceeds engine range")
        F = self.ctx.field
        cc = CochainComplex(self.res, N, coeff=coeff, shift=shift)
        dims = cc.ext_dims(n_max)
        yact = []
        for i in range(self.ctx.m):
            acts = []
            for n in range(n_max - 1):
                _, lift, _ = cc.cohomology(n)
                _, _, proj = cc.cohomology(n + 2)
                mat = cc.induced(self.ylift[i][n], n, n + 2)
                acts.append(F.matmul(proj, F.matmul(mat, lift)))
            yact.append(acts)
        return HData(n_max=n_max, dims=dims, yact=yact)

    def ann_polys(self, hd: HData, d: int, n_hi: int) -> list[dict]:
        """Homogeneous degree-d polynomials annihilating Ext^n for n <= n_hi - 2d."""
        F = self.ctx.field
        mons = monomials(self.ctx.m, d)
        blocks = []
        for n in range(0, n_hi - 2 * d + 1):
            if hd.dims[n] == 0:
                continue
            cols = [hd.mon_action(a, n, F).reshape(-1) for a in mons]
            blocks.append(np.stack(cols, axis=1))
        if not blocks:
            # nothing to annihilate: every degree-d polynomial is in the ideal
            return [{a: 1} for a in mons]
        A = np.vstack(blocks)
        sol = la.nullspace(F, A)
        return [
            {mons[i]: int(sol[i, j]) for i in range(len(mons)) if sol[i, j]}
            for j in range(sol.shape[1])
        ]

    def _poly_value(self, poly: dict, pt: ProjPoint) -> int:
        F = self.ctx.field
        out = 0
        for alpha, c in poly.items():
            v = c
            for i, e in enumerate(alpha):
                for _ in range(e):
                    v = F.mul(v, pt.coords[i])
            out = int(F.add(out, v))
        return out

    def _zero_locus(self, hd_list: list, n_hi: int, d_max: int) -> frozenset:
        pts = enumerate_points(self.ctx.field, self.ctx.m)
        out = set()
        for hd in hd_list:
            polys = []
            for d in range(1, d_max + 1):
                polys.extend(self.ann_polys(hd, d, n_hi))
            for pt in pts:
                if all(self._poly_value(f, pt) == 0 for f in polys):
                    out.add(pt)
        return frozenset(out)

    def support_variety(
        self, M: AModule, n_max: int | None = None, d_max: int = 4, route: str = "auto"
    ) -> SupportVariety:
        """Support variety of M, with the stabilization diagnostic.

        The annihilator is taken on H*(A, M^# (x) M) when that module is small
        enough, and otherwise on the family H*(A, S^# (x) M) over all simples
        S -- the two give the same zero locus, simple by simple.
        """
        n_max = self.n_max if n_max is None else n_max
        if n_max > self.n_max:
            raise OutOfRange("n_max exceeds engine range")
        if n_max < 2 * d_max:
            raise OutOfRange("need n_max >= 2 * d_max")
        if route == "auto":
            # the endo route's cochain spaces at top degree have roughly
            # betti(n_max) * dim(W)/|G| coordinates; beyond ~1000 the
            # simple-by-simple route is far cheaper and provably equivalent
            w_top = self.res.betti(n_max) * (M.dim * M.dim // self.ctx.lattice + 1)
            route = "endo" if w_top <= self.endo_dim_limit else "simples"
        if route == "endo":
            W = rm.tensor(rm.dual(M), M)
            hds = [self.h_module(W, n_max)]
        elif route == "simples":
            cd = CoeffData(M)
            hds = [
                self.h_module(M, n_max, coeff=cd, shift=chi)
                for chi in self.ctx.characters()
            ]
        else:
            raise OutOfRange(f"unknown route {route!r}")
        pts = self._zero_locus(hds, n_max, d_max)
        pts_red = self._zero_locus(hds, n_max - 2, d_max - 1)
        betti = [sum(hd.dims[n] for hd in hds) for n in range(n_max + 1)]
        return SupportVariety(
            points=tuple(sorted(pts)),
            stabilized=(pts == pts_red),
            betti=betti,
            route=route,
        )

    # -- Carlson modules ------------------------------------------------------

    def carlson_module(self, poly: dict) -> AModule:
        """L_zeta: the kernel of the map Omega^{2n}(k) -> k induced by zeta."""
        F = self.ctx.field
        row, deg = self.poly_row(poly)
        if deg % 2 != 0 or deg == 0:
            raise OutOfRange("Carlson classes must have positive even degree")
        self.res.extend_to(deg)
        K = self.res.kernels[deg]  # basis of Omega^{2n} inside P_{2n-1}
        O = self.res.omegas[deg]
        U = la.solve(F, self.res.diffs[deg], K)
        vals = F.matmul(row[None, :], U)
        ker = la.nullspace(F, vals)
        if ker.shape[1] != O.dim - 1:
            raise ZeroCocycle("class vanishes on the syzygy: not a valid zeta")
        return rm.submodule(O, ker)[0]


_engines: dict = {}


def get_engine(ctx, n_max: int = 10, max_total_dim: int | None = None,
               cache_dir: str | None = None) -> CohomologyEngine:
    key = (id(ctx), n_max)
    if key not in _engines:
        resolution = None
        if cache_dir:
            from . import cache as _cache

            resolution = _cache.get_resolution(
                ctx, rm.trivial(ctx), cache_dir, n_max + 1, max_total_dim
            )
        _engines[key] = CohomologyEngine(
            ctx, n_max, max_total_dim=max_total_dim, resolution=resolution
        )
    return _engines[key]
