"""Verification suites: the numbered end-to-end checks behind `taftvar check`.

Each criterion is a function returning (passed, detail).  The fixed test
configurations are C1 = (ell=2, m=2, p=5), C2 = (ell=3, m=2, p=7),
C3 = (ell=2, m=3, p=5), all with r = 1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product
from math import comb

import numpy as np

from . import cohom, linalg as la, repmod as rm, truncpoly as tp
from .algebra import AlgebraCtx, make_algebra
from .rankvar import (
    OrbitVariety,
    ProjPoint,
    enumerate_points,
    orbit_of,
    orbit_rep,
    psi,
    rank_variety,
)

CONFIGS = {
    "C1": (2, 2, 5),
    "C2": (3, 2, 7),
    "C3": (2, 3, 5),
}


@dataclass
class Report:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


class SuiteContext:
    """Shared algebra contexts, engines, and seeding for the criteria."""

    def __init__(self, iso_trials: int = 64, seed: int = 20260826,
                 cache_dir: str | None = None, n_max: int = 10, d_max: int = 4):
        self.iso_trials = iso_trials
        self.seed = seed
        self.cache_dir = cache_dir
        self.n_max = n_max
        self.d_max = d_max

    def ctx(self, key: str) -> AlgebraCtx:
        ell, m, p = CONFIGS[key]
        return make_algebra(ell, m, p)

    def engine(self, key: str) -> cohom.CohomologyEngine:
        return cohom.get_engine(self.ctx(key), self.n_max, cache_dir=self.cache_dir)

    def rng(self, tag: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, tag])

    def support_points(self, key: str, M: rm.AModule) -> frozenset:
        return self.engine(key).support_variety(M, d_max=self.d_max).point_set()


def psi_points(V: OrbitVariety) -> frozenset:
    """The image of a rank variety under the ell-th power map, as a point set."""
    return frozenset(psi(r, V.ell) for r in V.reps)


def headline_mismatches(ctx: AlgebraCtx, rv: OrbitVariety, support: frozenset) -> list:
    """Rational points violating: lambda in V^r(M) iff Psi(lambda) in V^c(M).

    This is the rational-point form of the rank/support comparison; the power
    map lambda -> lambda^ell is not surjective on rational points (ell divides
    q-1), so the two sets are compared through Psi rather than as images.
    """
    bad = []
    for pt in enumerate_points(ctx.field, ctx.m):
        if (pt in rv) != (psi(pt, ctx.ell) in support):
            bad.append(pt)
    return bad


def _random_point(ctx: AlgebraCtx, rng) -> ProjPoint:
    F = ctx.field
    while True:
        coords = [int(c) for c in rng.integers(0, F.order, size=ctx.m)]
        if any(coords):
            return ProjPoint(F, coords)


# ---------------------------------------------------------------------------
# criterion 1: algebra structure


def _coassoc_ok(ctx: AlgebraCtx, u) -> bool:
    """(Delta x id) Delta(u) == (id x Delta) Delta(u), via triple-index dicts."""
    from .algebra import AlgElem

    F = ctx.field
    d = ctx.coproduct(u)
    left: dict = {}
    right: dict = {}
    for (i, j), c in d.terms.items():
        for (i1, i2), c2 in ctx.coproduct(AlgElem(ctx, {i: 1})).terms.items():
            k = (i1, i2, j)
            left[k] = int(F.add(left.get(k, 0), F.mul(c, c2)))
        for (j1, j2), c2 in ctx.coproduct(AlgElem(ctx, {j: 1})).terms.items():
            k = (i, j1, j2)
            right[k] = int(F.add(right.get(k, 0), F.mul(c, c2)))
    left = {k: c for k, c in left.items() if c}
    right = {k: c for k, c in right.items() if c}
    return left == right


def _antipode_right_ok(ctx: AlgebraCtx, u) -> bool:
    """m(id x S) Delta(u) == eps(u) 1."""
    from .algebra import AlgElem

    F = ctx.field
    out: dict = {}
    for (i, j), c in ctx.coproduct(u).terms.items():
        s = ctx.antipode(AlgElem(ctx, {j: 1}))
        prod = AlgElem(ctx, {i: c}) * s
        for k, c2 in prod.terms.items():
            out[k] = int(F.add(out.get(k, 0), c2))
    want = AlgElem(ctx, {0: ctx.counit(u)})
    return AlgElem(ctx, out) == want


def crit_1(sc: SuiteContext):
    from .algebra import AlgElem

    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        rng = sc.rng(1)
        D = ctx.dim
        idx = rng.integers(0, D, size=(10_000, 3))
        for i, j, k in idx:
            ei, ej, ek = (AlgElem(ctx, {int(t): 1}) for t in (i, j, k))
            if (ei * ej) * ek != ei * (ej * ek):
                fails.append(f"{key}: associativity fails at basis ({i},{j},{k})")
                break
        gens = [ctx.x(i) for i in range(ctx.m)] + [ctx.g(i) for i in range(ctx.m)]
        for u in gens:
            d = ctx.coproduct(u)
            if d.apply_counit_left() != u or d.apply_counit_right() != u:
                fails.append(f"{key}: counit axiom fails on {u}")
            if not _coassoc_ok(ctx, u):
                fails.append(f"{key}: coassociativity fails on {u}")
            anti = d.map_left(ctx.antipode).contract_mul()
            if anti != AlgElem(ctx, {0: ctx.counit(u)}):
                fails.append(f"{key}: left antipode axiom fails on {u}")
            if not _antipode_right_ok(ctx, u):
                fails.append(f"{key}: right antipode axiom fails on {u}")
        for u, v in product(gens, repeat=2):
            if ctx.coproduct(u * v) != ctx.coproduct(u) * ctx.coproduct(v):
                fails.append(f"{key}: coproduct not multiplicative on {u}, {v}")
    detail = "; ".join(fails) if fails else \
        "associativity on 10000 basis triples and Hopf axioms hold in C1-C3"
    return not fails, detail


def crit_2(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        rng = sc.rng(2)
        for _ in range(100):
            pt = _random_point(ctx, rng)
            t = ctx.tau(pt.coords)
            if not (t ** ctx.ell).is_zero():
                fails.append(f"{key}: tau^ell != 0 at {pt}")
    detail = "; ".join(fails) if fails else "tau_lambda^ell = 0 for 100 random lambda in C1-C3"
    return not fails, detail


def crit_3(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        F = ctx.field
        A = rm.regular(ctx)
        want = ctx.dim - ctx.dim // ctx.ell
        rng = sc.rng(3)
        for _ in range(20):
            pt = _random_point(ctx, rng)
            got = la.rank(F, A.restrict_to_tau(pt.coords))
            if got != want:
                fails.append(f"{key}: rank tau at {pt} = {got}, want {want}")
    detail = "; ".join(fails) if fails else \
        "rank of tau_lambda on the regular module is l^2m - l^(2m-1) for 20 lambda in C1-C3"
    return not fails, detail


def crit_4(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        ell = ctx.ell
        dv = ell ** (2 * ctx.m - 1)
        rng = sc.rng(4)
        for _ in range(5):
            pt = _random_point(ctx, rng)
            V = rm.v_module(ctx, pt.coords)
            Vp = rm.v_module(ctx, pt.coords, primed=True)
            if V.dim != dv:
                fails.append(f"{key}: dim V({pt}) = {V.dim}, want {dv}")
            if Vp.dim != (ell - 1) * dv:
                fails.append(f"{key}: dim V'({pt}) = {Vp.dim}, want {(ell-1)*dv}")
            if not rm.is_isomorphic(rm.omega(V), Vp, rng, trials=sc.iso_trials):
                fails.append(f"{key}: Omega V({pt}) not isomorphic to V'({pt})")
            if not rm.is_isomorphic(rm.omega(Vp), V, rng, trials=sc.iso_trials):
                fails.append(f"{key}: Omega V'({pt}) not isomorphic to V({pt})")
    detail = "; ".join(fails) if fails else \
        "V and V' have the stated dimensions and are syzygies of each other, 5 lambda in C1-C3"
    return not fails, detail


def crit_5(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        m = CONFIGS[key][1]
        got = sc.engine(key).kcc.ext_dims(sc.n_max)
        want = [comb(n // 2 + m - 1, m - 1) if n % 2 == 0 else 0
                for n in range(sc.n_max + 1)]
        if got != want:
            fails.append(f"{key}: Ext(k,k) dims {got}, want {want}")
    detail = "; ".join(fails) if fails else \
        "dim Ext^n(k,k) matches the polynomial-ring count for n <= 10 in C1-C3"
    return not fails, detail


def crit_6(sc: SuiteContext):
    fails = []
    for ell, p in ((2, 5), (3, 7)):
        ctx = make_algebra(ell, 1, p)
        k = rm.trivial(ctx)
        for i in range(ell):
            got = cohom.ext_dims(k, rm.simple(ctx, [i]), 6)
            if i == 0:
                want = [1 if n % 2 == 0 else 0 for n in range(7)]
            elif i == 1:
                want = [1 if n % 2 == 1 else 0 for n in range(7)]
            else:
                want = [0] * 7
            if got != want:
                fails.append(f"ell={ell}: H^n(A_1, S_{i}) dims {got}, want {want}")
    detail = "; ".join(fails) if fails else \
        "one-variable cohomology with simple coefficients matches the table for ell in {2,3}"
    return not fails, detail


def crit_7(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        rng = sc.rng(7)
        for t in range(50):
            M = rm.random_module(ctx, rng)
            if rank_variety(M).empty != rm.is_projective(M):
                fails.append(f"{key}: Dade fails on random module #{t} (dim {M.dim})")
    detail = "; ".join(fails) if fails else \
        "empty rank variety is equivalent to projectivity on 50 random modules in C1-C3"
    return not fails, detail


def crit_8(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        eng = sc.engine(key)
        for pt in enumerate_points(ctx.field, ctx.m):
            V = rm.v_module(ctx, pt.coords)
            rv = rank_variety(V)
            if rv.reps != frozenset({orbit_rep(pt, ctx.ell)}):
                fails.append(f"{key}: rank variety of V({pt}) is {rv}, want the orbit of {pt}")
            sv = eng.support_variety(V, d_max=sc.d_max)
            if sv.point_set() != frozenset({psi(pt, ctx.ell)}):
                fails.append(
                    f"{key}: support of V({pt}) is {list(sv.points)}, want {{{psi(pt, ctx.ell)}}}"
                )
    detail = "; ".join(fails) if fails else \
        "V(lambda) has rank variety the orbit of lambda and support {Psi(lambda)} for all rational lambda in C1-C3"
    return not fails, detail


def battery(sc: SuiteContext, key: str, n_random: int = 20) -> list:
    """The named module battery for the headline comparison."""
    ctx = sc.ctx(key)
    eng = sc.engine(key)
    out = [("trivial", rm.trivial(ctx))]
    for chi in ctx.characters():
        if any(chi):
            out.append((f"simple{list(chi)}", rm.simple(ctx, chi)))
    out.append(("regular", rm.regular(ctx)))
    reps = sorted({orbit_rep(pt, ctx.ell) for pt in enumerate_points(ctx.field, ctx.m)})
    for r in reps:
        out.append((f"v{r}", rm.v_module(ctx, r.coords)))
        out.append((f"vprime{r}", rm.v_module(ctx, r.coords, primed=True)))
    M = rm.trivial(ctx)
    N = rm.trivial(ctx)
    for i in (1, 2):
        M = rm.omega(M)
        N = rm.omega_inverse(N)
        out.append((f"omega^{i}k", M))
        out.append((f"omega^-{i}k", N))
    e1 = {(1,) + (0,) * (ctx.m - 1): 1}
    e2 = {(0, 1) + (0,) * (ctx.m - 2): 1}
    e12 = {k: 1 for k in list(e1) + list(e2)}
    out.append(("lzeta(y1)", eng.carlson_module(e1)))
    out.append(("lzeta(y2)", eng.carlson_module(e2)))
    out.append(("lzeta(y1+y2)", eng.carlson_module(e12)))
    pairs = [(reps[i % len(reps)], reps[(i + 1) % len(reps)]) for i in range(5)]
    for a, b in pairs:
        out.append(
            (f"v{a}(x)v{b}", rm.tensor(rm.v_module(ctx, a.coords), rm.v_module(ctx, b.coords)))
        )
    rng = sc.rng(9)
    for t in range(n_random):
        out.append((f"random{t}", rm.random_module(ctx, rng)))
    return out


def crit_9(sc: SuiteContext):
    fails = []
    counts = {}
    for key in ("C1", "C2"):
        eng = sc.engine(key)
        mods = battery(sc, key)
        counts[key] = len(mods)
        ctx = sc.ctx(key)
        for name, M in mods:
            rv = rank_variety(M)
            sv = eng.support_variety(M, d_max=sc.d_max)
            bad = headline_mismatches(ctx, rv, sv.point_set())
            if bad:
                fails.append(
                    f"{key}/{name}: rank/support disagree through Psi at {bad[:4]}"
                )
            if not psi_points(rv) <= sv.point_set():
                fails.append(f"{key}/{name}: Psi(rank variety) not contained in support")
            if not sv.stabilized:
                fails.append(f"{key}/{name}: support variety not stabilized at n_max=10, d_max=4")
    detail = "; ".join(fails[:6]) if fails else (
        "rank and support varieties agree through Psi at every rational point, "
        f"stabilized, on the full battery ({counts.get('C1', 0)} modules in C1, "
        f"{counts.get('C2', 0)} in C2)"
    )
    return not fails, detail


def crit_10(sc: SuiteContext):
    fails = []
    for key in ("C1", "C2"):
        ctx = sc.ctx(key)
        eng = sc.engine(key)
        e1 = {(1,) + (0,) * (ctx.m - 1): 1}
        e2 = {(0, 1) + (0,) * (ctx.m - 2): 1}
        L1 = eng.carlson_module(e1)
        L2 = eng.carlson_module(e2)
        pts = enumerate_points(ctx.field, ctx.m)
        z12 = frozenset(p for p in pts if p.coords[0] == 0 and p.coords[1] == 0)
        got = sc.support_points(key, rm.tensor(L1, L2))
        if got != z12:
            fails.append(f"{key}: support of L(y1)(x)L(y2) is {sorted(got)}, want {sorted(z12)}")
        z1 = frozenset(p for p in pts if p.coords[0] == 0)
        small = [(n, M) for n, M in battery(sc, key, n_random=3) if M.dim <= 40][:10]
        for name, M in small:
            want = z1 & sc.support_points(key, M)
            got = sc.support_points(key, rm.tensor(M, L1))
            if got != want:
                fails.append(
                    f"{key}/{name}: support of M(x)L(y1) is {sorted(got)}, want {sorted(want)}"
                )
    detail = "; ".join(fails[:6]) if fails else \
        "tensoring with Carlson modules cuts support by the class hyperplane in C1-C2"
    return not fails, detail


def crit_11(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        F = ctx.field
        eng = sc.engine(key)
        for pt in enumerate_points(F, ctx.m):
            for i in range(ctx.m):
                alpha = tuple(1 if t == i else 0 for t in range(ctx.m))
                want = int(F.pow(pt.coords[i], ctx.ell))
                vals = {
                    eng.restrict_class({alpha: 1}, q.coords) for q in orbit_of(pt, ctx.ell)
                }
                if vals != {want}:
                    fails.append(
                        f"{key}: restriction of y{i+1} on the orbit of {pt} gives {vals}, want {want}"
                    )
    detail = "; ".join(fails[:6]) if fails else \
        "restrict(y_i, lambda) = lambda_i^ell, constant on scaling orbits, for all rational lambda in C1-C3"
    return not fails, detail


def crit_12(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        rng = sc.rng(12)
        for t in range(20):
            B = rm.random_module(ctx, rng)
            if B.dim == 0:
                continue
            ncols = int(rng.integers(1, 3))
            V0 = rng.integers(0, ctx.field.order, size=(B.dim, ncols)).astype(np.int64)
            U = rm.generated_submodule(B, V0)
            Sub, _ = rm.submodule(B, U)
            Quot, _, _ = rm.quotient(B, U)
            va, vb, vc = rank_variety(Sub), rank_variety(B), rank_variety(Quot)
            if rank_variety(rm.direct_sum([Sub, Quot])) != va.union(vc):
                fails.append(f"{key}#{t}: rank variety not additive on direct sums")
            if rank_variety(rm.omega(B)) != vb:
                fails.append(f"{key}#{t}: rank variety not syzygy-invariant")
            trios = [(va, vb, vc), (vb, va, vc), (vc, va, vb)]
            for one, two, three in trios:
                if not one.reps <= (two.reps | three.reps):
                    fails.append(f"{key}#{t}: two-of-three fails for a short exact sequence")
                    break
    detail = "; ".join(fails[:6]) if fails else \
        "sum-additivity, syzygy-invariance, and two-of-three hold on 20 seeded sequences in C1-C3"
    return not fails, detail


def crit_13(sc: SuiteContext):
    fails = []
    for key in ("C1", "C2"):
        ctx = sc.ctx(key)
        pts = enumerate_points(ctx.field, ctx.m)
        pres = {}
        free_hom = {}
        for pt in pts:
            U = tp.restrict_to_lambda(rm.v_module(ctx, pt.coords))
            pres[pt] = tp.LambdaPresentation(U)
            free_hom[pt] = pres[pt].hom_dim(tp.free_lambda(ctx, 1))
        rng = sc.rng(13)
        for t in range(50):
            M = tp.random_lambda_module(ctx, rng)
            rv = tp.lambda_rank_variety(M)
            for pt in pts:
                stable = tp.stable_hom_criterion(M, pt, pres[pt], free_hom[pt])
                if stable != (pt in rv):
                    fails.append(
                        f"{key}: stable-hom and rank criteria disagree at {pt} on random #{t}"
                    )
        eng = sc.engine(key)
        lam_battery = [
            ("trivial", tp.trivial_lambda(ctx)),
            ("free", tp.free_lambda(ctx, 1)),
            ("v-restr", tp.restrict_to_lambda(rm.v_module(ctx, pts[0].coords))),
        ] + [(f"random{t}", tp.random_lambda_module(ctx, rng)) for t in range(5)]
        for name, M in lam_battery:
            rv = tp.lambda_rank_variety(M)
            got = tp.lambda_support_variety(eng, M, d_max=sc.d_max).point_set()
            bad = headline_mismatches(ctx, rv, got)
            if bad:
                fails.append(
                    f"{key}/{name}: Lambda rank/support disagree through Psi at {bad[:4]}"
                )
    for ell, p in ((2, 5), (3, 7)):
        got = tp.hochschild_m1_dims(ell, 4, p)
        if got != [ell - 1] * 4:
            fails.append(f"Hochschild dims for ell={ell}: {got}, want {[ell-1]*4}")
    detail = "; ".join(fails[:6]) if fails else (
        "stable-hom matches the rank criterion on 50 random truncated-polynomial modules, "
        "Hochschild dims are ell-1, and Psi-agreement holds on the Lambda battery"
    )
    return not fails, detail


def crit_14(sc: SuiteContext):
    fails = []
    for key in CONFIGS:
        ctx = sc.ctx(key)
        F = ctx.field
        rng = sc.rng(14)
        A = rm.regular(ctx)
        top = [ctx.ell - 1] * ctx.m
        lines = []
        for chi in ctx.characters():
            e = ctx.idempotent(chi) * ctx.monomial(top, [0] * ctx.m)
            lines.append(e.to_coeffs())
        for t in range(100):
            pt = _random_point(ctx, rng)
            tau = ctx.tau(pt.coords)
            Lmat = A.restrict_to_tau(pt.coords)
            K = la.nullspace(F, Lmat)
            coeffs = rng.integers(0, F.order, size=K.shape[1]).astype(np.int64)
            a_vec = F.matmul(K, coeffs[:, None])[:, 0]
            R = rm.right_mult_matrix(ctx, tau ** (ctx.ell - 1))
            w = F.matmul(R, a_vec[:, None])[:, 0]
            if not np.any(w):
                continue
            for chi, line in zip(ctx.characters(), lines):
                if la.rank(F, np.stack([w, line])) == 1:
                    fails.append(
                        f"{key}: sample #{t} at {pt} lands on the socle line of chi={chi} "
                        "but is nonzero"
                    )
                    break
    detail = "; ".join(fails[:6]) if fails else (
        "no kernel element of tau_lambda lands nonzero on a socle line after "
        "right-multiplying by tau^(ell-1); 100 samples in C1-C3"
    )
    return not fails, detail


CRITERIA = {
    1: ("algebra-structure", crit_1),
    2: ("tau-nilpotence", crit_2),
    3: ("tau-regular-rank", crit_3),
    4: ("v-module-syzygies", crit_4),
    5: ("trivial-ext-dimensions", crit_5),
    6: ("simple-coefficient-table", crit_6),
    7: ("projectivity-detection", crit_7),
    8: ("v-module-varieties", crit_8),
    9: ("headline-comparison", crit_9),
    10: ("carlson-intersection", crit_10),
    11: ("restriction-normalization", crit_11),
    12: ("rank-variety-operations", crit_12),
    13: ("truncated-polynomial-side", crit_13),
    14: ("socle-annihilation", crit_14),
}

SUITES = {
    "algebra": [1, 2, 14],
    "modules": [3, 4],
    "dade": [7, 12],
    "cohomology": [5, 6, 11],
    "avrunin-scott": [8, 9],
    "carlson": [10],
    "lambda": [13],
    "all": list(range(1, 15)),
}


def run_criteria(numbers, sc: SuiteContext | None = None, report=None) -> list[Report]:
    """Run the given criteria; `report` is called with each Report as it finishes."""
    sc = sc or SuiteContext()
    out = []
    for n in numbers:
        name, fn = CRITERIA[n]
        t0 = time.time()
        try:
            passed, detail = fn(sc)
        except Exception as exc:  # a crash is an honest failure, not a skip
            passed, detail = False, f"crashed: {type(exc).__name__}: {exc}"
        rep = Report(n, name, passed, detail, time.time() - t0)
        out.append(rep)
        if report is not None:
            report(rep)
    return out


def run_suite(suite: str, sc: SuiteContext | None = None, report=None) -> list[Report]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    return run_criteria(SUITES[suite], sc, report)
