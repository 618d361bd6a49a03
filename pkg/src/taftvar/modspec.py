"""Module spec files (canonical JSON) and the genmodule recipe language."""

from __future__ import annotations

import json
import re

import numpy as np

from . import linalg as la
from . import repmod as rm
from . import truncpoly as tp
from .algebra import AlgebraCtx, make_algebra
from .errors import RecipeParse, RelationViolation, SpecValidation
from .repmod import AModule


def _matrix_to_entries(ctx: AlgebraCtx, M: np.ndarray) -> list:
    F = ctx.field
    return [[list(F.code_to_coeffs(int(c))) for c in row] for row in M]


def _entries_to_matrix(ctx: AlgebraCtx, rows, dim: int, what: str) -> np.ndarray:
    F = ctx.field
    if not isinstance(rows, list) or len(rows) != dim:
        raise SpecValidation(f"{what}: expected {dim} rows")
    out = la.zeros(dim, dim)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != dim:
            raise SpecValidation(f"{what}: row {i} must have {dim} entries")
        for j, entry in enumerate(row):
            if not isinstance(entry, list) or len(entry) != F.r:
                raise SpecValidation(
                    f"{what}[{i}][{j}]: entry must be a coefficient vector of length {F.r}"
                )
            if not all(isinstance(c, int) and 0 <= c < F.p for c in entry):
                raise SpecValidation(
                    f"{what}[{i}][{j}]: coefficients must be integers in [0, {F.p})"
                )
            out[i, j] = F.coeffs_to_code(entry)
    return out


def module_to_spec(M: AModule) -> dict:
    ctx = M.ctx
    return {
        "l": ctx.ell,
        "m": ctx.m,
        "p": ctx.field.p,
        "r": ctx.field.r,
        "dim": M.dim,
        "X": [_matrix_to_entries(ctx, Xi) for Xi in M.X],
        "g": [_matrix_to_entries(ctx, Gi) for Gi in M.G],
    }


def lambda_module_to_spec(M: tp.LambdaModule) -> dict:
    ctx = M.ctx
    return {
        "l": ctx.ell,
        "m": ctx.m,
        "p": ctx.field.p,
        "r": ctx.field.r,
        "dim": M.dim,
        "X": [_matrix_to_entries(ctx, Xi) for Xi in M.X],
    }


def _spec_header(spec: dict, want_g: bool):
    if not isinstance(spec, dict):
        raise SpecValidation("module spec must be a JSON object")
    keys = {"l", "m", "p", "r", "dim", "X"} | ({"g"} if want_g else set())
    missing = keys - set(spec)
    if missing:
        raise SpecValidation(f"module spec missing keys: {sorted(missing)}")
    for key in ("l", "m", "p", "r", "dim"):
        if not isinstance(spec[key], int) or spec[key] < 0:
            raise SpecValidation(f"{key} must be a nonnegative integer")
    try:
        ctx = make_algebra(spec["l"], spec["m"], spec["p"], spec["r"])
    except Exception as exc:
        raise SpecValidation(f"invalid algebra parameters: {exc}") from exc
    return ctx


def spec_to_module(spec: dict) -> AModule:
    """Validate and load an A-module from its JSON spec dict."""
    ctx = _spec_header(spec, want_g=True)
    dim = spec["dim"]
    if len(spec["X"]) != ctx.m or len(spec["g"]) != ctx.m:
        raise SpecValidation(f"expected {ctx.m} X matrices and {ctx.m} g matrices")
    X = [_entries_to_matrix(ctx, rows, dim, f"X[{i}]") for i, rows in enumerate(spec["X"])]
    G = [_entries_to_matrix(ctx, rows, dim, f"g[{i}]") for i, rows in enumerate(spec["g"])]
    try:
        return AModule(ctx, X, G)
    except RelationViolation as exc:
        raise SpecValidation(f"module relations fail: {exc}") from exc


def spec_to_lambda_module(spec: dict) -> tp.LambdaModule:
    """Validate and load a Lambda-module (no group block) from its spec dict."""
    ctx = _spec_header(spec, want_g=False)
    dim = spec["dim"]
    if len(spec["X"]) != ctx.m:
        raise SpecValidation(f"expected {ctx.m} X matrices")
    X = [_entries_to_matrix(ctx, rows, dim, f"X[{i}]") for i, rows in enumerate(spec["X"])]
    try:
        return tp.LambdaModule(ctx, X)
    except RelationViolation as exc:
        raise SpecValidation(f"module relations fail: {exc}") from exc


def dumps_spec(spec: dict) -> str:
    """Canonical serialization: sorted keys, fixed separators, newline at end."""
    return json.dumps(spec, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def load_spec_file(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecValidation(f"cannot read module spec {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# recipes


def _split_top_level(s: str) -> list[str]:
    """Split on commas that are not inside brackets."""
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _parse_coords(ctx: AlgebraCtx, text: str, what: str) -> list[int]:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text = text[1:-1]
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != ctx.m:
        raise RecipeParse(f"{what}: expected {ctx.m} coordinates, got {len(parts)}")
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise RecipeParse(f"{what}: coordinate {p!r} is not an integer")
    return out


def parse_poly(ctx: AlgebraCtx, text: str) -> dict:
    """Parse a polynomial in y1..ym, e.g. 'y1', 'y1+2*y2', 'y1*y2^2'."""
    F = ctx.field
    poly: dict = {}
    for term in text.replace(" ", "").split("+"):
        if not term:
            raise RecipeParse(f"empty term in polynomial {text!r}")
        coeff = 1
        alpha = [0] * ctx.m
        for factor in term.split("*"):
            if factor.isdigit():
                coeff = int(F.mul(coeff, F.from_int(int(factor))))
                continue
            mfac = re.match(r"^y(\d+)(?:\^(\d+))?$", factor)
            if not mfac:
                raise RecipeParse(f"bad factor {factor!r} in polynomial {text!r}")
            i = int(mfac.group(1))
            if not 1 <= i <= ctx.m:
                raise RecipeParse(f"variable y{i} out of range 1..{ctx.m}")
            alpha[i - 1] += int(mfac.group(2) or 1)
        key = tuple(alpha)
        poly[key] = int(F.add(poly.get(key, 0), coeff))
    poly = {a: c for a, c in poly.items() if c}
    if not poly:
        raise RecipeParse(f"polynomial {text!r} is zero")
    degs = {sum(a) for a in poly}
    if len(degs) != 1:
        raise RecipeParse(f"polynomial {text!r} is not homogeneous")
    return poly


def build_recipe(ctx: AlgebraCtx, recipe: str, engine=None, rng=None) -> AModule:
    """Construct the module named by a genmodule recipe string."""
    recipe = recipe.strip()
    if recipe == "trivial":
        return rm.trivial(ctx)
    if recipe == "regular":
        return rm.regular(ctx)
    if ":" not in recipe:
        raise RecipeParse(f"unknown recipe {recipe!r}")
    head, rest = recipe.split(":", 1)
    if head == "simple":
        return rm.simple(ctx, _parse_coords(ctx, rest, "simple"))
    if head in ("v", "vprime"):
        coords = _parse_coords(ctx, rest, head)
        if all(c % ctx.field.p == 0 for c in coords) and ctx.field.r == 1:
            raise RecipeParse(f"{head}: lambda must be nonzero")
        return rm.v_module(ctx, coords, primed=(head == "vprime"))
    if head == "dual":
        return rm.dual(build_recipe(ctx, rest, engine, rng))
    if head == "tensor":
        parts = _split_top_level(rest)
        if len(parts) != 2:
            raise RecipeParse("tensor: expected two sub-recipes")
        return rm.tensor(
            build_recipe(ctx, parts[0], engine, rng),
            build_recipe(ctx, parts[1], engine, rng),
        )
    if head.startswith("omega^") or head == "omega":
        try:
            i = int(head[6:]) if head.startswith("omega^") else 1
        except ValueError:
            raise RecipeParse(f"bad syzygy power in {head!r}")
        M = build_recipe(ctx, rest, engine, rng)
        step = rm.omega if i >= 0 else rm.omega_inverse
        for _ in range(abs(i)):
            M = step(M)
        return M
    if head == "lzeta":
        if engine is None:
            raise RecipeParse("lzeta recipes need a cohomology engine")
        return engine.carlson_module(parse_poly(ctx, rest))
    if head == "random":
        try:
            seed = int(rest)
        except ValueError:
            raise RecipeParse(f"random: seed {rest!r} is not an integer")
        return rm.random_module(ctx, np.random.default_rng(seed))
    if head == "induce":
        spec = load_spec_file(rest)
        lmod = spec_to_lambda_module(spec)
        if lmod.ctx is not ctx:
            raise RecipeParse("induce: Lambda-module spec parameters differ from config")
        return rm.induce_from_lambda(ctx, lmod.X)
    raise RecipeParse(f"unknown recipe {recipe!r}")
