"""Command-line interface: variety computation, module generation, checks."""

from __future__ import annotations

import json
import sys

import click

from . import cache as cachemod, modspec as ms, suites as suitesmod
from .algebra import make_algebra
from .cohom import get_engine
from .config import Config, load_config
from .errors import RecipeParse, ResourceBudgetExceeded, SpecValidation
from .rankvar import rank_variety
from .truncpoly import lambda_rank_variety

EXIT_CHECK_FAILURE = 2
EXIT_VALIDATION = 3
EXIT_BUDGET = 4


def _fail(code: int, msg: str):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


_CONFIG_FLAGS = [
    ("--ell", "ell"),
    ("--m", "m"),
    ("--p", "p"),
    ("--r", "r"),
    ("--n-max", "n_max"),
    ("--d-max", "d_max"),
    ("--iso-trials", "iso_trials"),
    ("--rng-seed", "rng_seed"),
    ("--battery-size", "battery_size"),
]


def config_options(fn):
    fn = click.option("--config", "config_path", type=click.Path(), default=None,
                      help="TOML configuration file.")(fn)
    for flag, name in _CONFIG_FLAGS:
        fn = click.option(flag, name, type=int, default=None)(fn)
    fn = click.option("--cache-dir", "cache_dir", type=click.Path(), default=None)(fn)
    return fn


def build_config(config_path, **overrides) -> Config:
    try:
        return load_config(config_path, **overrides)
    except SpecValidation as exc:
        _fail(EXIT_VALIDATION, str(exc))


def _points_json(points) -> list:
    return [pt.coeff_vectors() for pt in points]


@click.group()
def main():
    """Exact rank and support varieties for quantum elementary abelian groups."""


@main.group()
def variety():
    """Compute the rank or support variety of a module spec."""


@variety.command("rank")
@click.option("--module", "module_path", type=click.Path(), default=None)
@click.option("--lambda-module", "lambda_path", type=click.Path(), default=None)
@config_options
def variety_rank(module_path, lambda_path, config_path, **overrides):
    cfg = build_config(config_path, **overrides)
    if (module_path is None) == (lambda_path is None):
        _fail(EXIT_VALIDATION, "give exactly one of --module or --lambda-module")
    try:
        if module_path is not None:
            spec = ms.load_spec_file(module_path)
            M = ms.spec_to_module(spec)
            V = rank_variety(M)
        else:
            spec = ms.load_spec_file(lambda_path)
            M = ms.spec_to_lambda_module(spec)
            V = lambda_rank_variety(M)
    except SpecValidation as exc:
        _fail(EXIT_VALIDATION, str(exc))
    except ResourceBudgetExceeded as exc:
        _fail(EXIT_BUDGET, str(exc))
    F = M.ctx.field
    out = {
        "points": _points_json(V.points()),
        "field": {"p": F.p, "r": F.r},
        "empty": V.empty,
    }
    click.echo(json.dumps(out, sort_keys=True))


@variety.command("support")
@click.option("--module", "module_path", type=click.Path(), required=True)
@click.option("--nmax", type=int, default=None, help="Override n_max for this run.")
@click.option("--dmax", type=int, default=None, help="Override d_max for this run.")
@config_options
def variety_support(module_path, nmax, dmax, config_path, **overrides):
    if nmax is not None:
        overrides["n_max"] = nmax
    if dmax is not None:
        overrides["d_max"] = dmax
    cfg = build_config(config_path, **overrides)
    try:
        spec = ms.load_spec_file(module_path)
        M = ms.spec_to_module(spec)
        # the module spec fixes the algebra; config supplies degrees and cache
        eng = get_engine(M.ctx, cfg.n_max, cache_dir=cfg.resolved_cache_dir())
        sv = eng.support_variety(M, n_max=cfg.n_max, d_max=cfg.d_max)
    except SpecValidation as exc:
        _fail(EXIT_VALIDATION, str(exc))
    except ResourceBudgetExceeded as exc:
        _fail(EXIT_BUDGET, str(exc))
    out = {
        "points": _points_json(sv.points),
        "stabilized": sv.stabilized,
        "betti": sv.betti,
    }
    click.echo(json.dumps(out, sort_keys=True))


@main.command("genmodule")
@click.argument("recipe")
@click.argument("out", type=click.Path())
@config_options
def genmodule(recipe, out, config_path, **overrides):
    cfg = build_config(config_path, **overrides)
    try:
        ctx = make_algebra(cfg.ell, cfg.m, cfg.p, cfg.r)
        engine = None
        if "lzeta" in recipe:
            engine = get_engine(ctx, cfg.n_max, cache_dir=cfg.resolved_cache_dir())
        M = ms.build_recipe(ctx, recipe, engine=engine, rng=cfg.rng())
        text = ms.dumps_spec(ms.module_to_spec(M))
    except (RecipeParse, SpecValidation) as exc:
        _fail(EXIT_VALIDATION, str(exc))
    except ResourceBudgetExceeded as exc:
        _fail(EXIT_BUDGET, str(exc))
    with open(out, "w") as fh:
        fh.write(text)
    click.echo(f"wrote {out} (dim {M.dim})")


@main.command("check")
@click.argument("suite")
@config_options
def check(suite, config_path, **overrides):
    cfg = build_config(config_path, **overrides)
    if suite not in suitesmod.SUITES:
        _fail(EXIT_VALIDATION, f"unknown suite {suite!r}; choose from {sorted(suitesmod.SUITES)}")
    sc = suitesmod.SuiteContext(
        iso_trials=cfg.iso_trials,
        seed=cfg.rng_seed or 20260826,
        cache_dir=cfg.resolved_cache_dir(),
        n_max=cfg.n_max,
        d_max=cfg.d_max,
    )
    reports = suitesmod.run_suite(suite, sc, report=lambda rep: click.echo(rep.line()))
    failed = [rep for rep in reports if not rep.passed]
    click.echo(f"{len(reports) - len(failed)}/{len(reports)} criteria passed")
    sys.exit(0 if not failed else EXIT_CHECK_FAILURE)


@main.group()
def cache():
    """Resolution cache maintenance."""


@cache.command("clear")
@config_options
def cache_clear(config_path, **overrides):
    cfg = build_config(config_path, **overrides)
    n = cachemod.clear_cache(cfg.resolved_cache_dir())
    click.echo(f"removed {n} cached resolutions from {cfg.resolved_cache_dir()}")


if __name__ == "__main__":
    main()
