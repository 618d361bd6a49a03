"""Disk cache for minimal projective resolutions.

A resolution is stored as its differentials plus the summand characters of
each term; kernels, syzygies, and cover coordinates are rebuilt from those
deterministically on load.
"""

from __future__ import annotations

import hashlib
import os

import numpy as np

from . import linalg as la
from . import repmod as rm
from .algebra import AlgebraCtx
from .cohom import Resolution
from .modspec import dumps_spec, module_to_spec
from .repmod import AModule


def module_hash(M: AModule) -> str:
    return hashlib.sha256(dumps_spec(module_to_spec(M)).encode()).hexdigest()[:16]


def _cache_path(cache_dir: str, ctx: AlgebraCtx, mhash: str, n_max: int) -> str:
    F = ctx.field
    name = f"res_{ctx.ell}_{ctx.m}_{F.p}_{F.r}_{mhash}_{n_max}.npz"
    return os.path.join(cache_dir, name)


def _empty_module(ctx: AlgebraCtx) -> AModule:
    z = [la.zeros(0, 0) for _ in range(ctx.m)]
    return AModule(ctx, z, list(z), check=False)


def save_resolution(res: Resolution, cache_dir: str, n_max: int) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    path = _cache_path(cache_dir, res.ctx, module_hash(res.target), n_max)
    res.extend_to(n_max)
    arrays = {"length": np.array([res.length])}
    for n in range(res.length + 1):
        arrays[f"d{n}"] = res.diffs[n]
        arrays[f"chis{n}"] = np.array(res.covers[n].chis, dtype=np.int64).reshape(
            len(res.covers[n].chis), res.ctx.m
        )
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        np.savez_compressed(fh, **arrays)
    os.replace(tmp, path)
    return path


def _rebuild(ctx: AlgebraCtx, target: AModule, diffs, chis_list,
             max_total_dim) -> Resolution:
    F = ctx.field
    L = ctx.lattice
    res = Resolution.__new__(Resolution)
    res.ctx = ctx
    res.target = target
    res.max_total_dim = max_total_dim
    res.covers = []
    res.diffs = []
    res.kernels = [None]
    res.omegas = [None]
    res.total_dim = 0
    for n, (d, chis) in enumerate(zip(diffs, chis_list)):
        if chis:
            P = rm.direct_sum([rm.projective_indec(ctx, chi) for chi in chis])
        else:
            P = _empty_module(ctx)
        if n == 0:
            cov = d
        else:
            K = la.column_space(F, la.nullspace(F, diffs[n - 1]))
            O, K = rm.submodule(res.covers[n - 1].P, K)
            res.kernels.append(K)
            res.omegas.append(O)
            cov = la.solve(F, K, d) if K.shape[1] else la.zeros(0, P.dim)
        res.covers.append(
            rm.CoverData(P=P, chis=chis, cover=cov, offsets=[s * L for s in range(len(chis))])
        )
        res.diffs.append(d)
        res.total_dim += P.dim
    res._check_budget()
    return res


def load_resolution(ctx: AlgebraCtx, target: AModule, cache_dir: str, n_max: int,
                    max_total_dim=None) -> Resolution | None:
    path = _cache_path(cache_dir, ctx, module_hash(target), n_max)
    if not os.path.exists(path):
        return None
    try:
        with np.load(path) as data:
            length = int(data["length"][0])
            diffs = [np.asarray(data[f"d{n}"], dtype=np.int64) for n in range(length + 1)]
            chis_list = [
                [tuple(int(c) for c in row) for row in data[f"chis{n}"]]
                for n in range(length + 1)
            ]
    except (OSError, KeyError, ValueError):
        return None
    if length < n_max:
        return None
    return _rebuild(ctx, target, diffs, chis_list, max_total_dim)


def get_resolution(ctx: AlgebraCtx, target: AModule, cache_dir: str, n_max: int,
                   max_total_dim=None) -> Resolution:
    """Load a cached resolution of target or compute and store one."""
    res = load_resolution(ctx, target, cache_dir, n_max, max_total_dim)
    if res is not None:
        return res
    res = Resolution(target, max_total_dim=max_total_dim)
    res.extend_to(n_max)
    save_resolution(res, cache_dir, n_max)
    return res


def clear_cache(cache_dir: str) -> int:
    """Remove cached resolution files; returns the number removed."""
    if not os.path.isdir(cache_dir):
        return 0
    removed = 0
    for name in os.listdir(cache_dir):
        if name.startswith("res_") and name.endswith(".npz"):
            os.remove(os.path.join(cache_dir, name))
            removed += 1
    return removed
