"""Run configuration: TOML file, environment, and command-line overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, field, fields, replace

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from .errors import SpecValidation

CACHE_ENV = "TAFTVAR_CACHE_DIR"


@dataclass(frozen=True)
class Config:
    ell: int = 2
    m: int = 2
    p: int = 5
    r: int = 1
    n_max: int = 10
    d_max: int = 4
    iso_trials: int = 64
    rng_seed: int = 0
    cache_dir: str = ""
    battery_size: int = 50

    def validate(self) -> "Config":
        for name in ("ell", "m", "p", "r", "n_max", "d_max", "iso_trials", "battery_size"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise SpecValidation(f"config field {name} must be a positive integer")
        if self.n_max < 2 * self.d_max:
            raise SpecValidation(
                f"n_max ({self.n_max}) must be at least 2*d_max ({2 * self.d_max})"
            )
        return self

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.rng_seed)

    def resolved_cache_dir(self) -> str:
        env = os.environ.get(CACHE_ENV)
        if env:
            return env
        if self.cache_dir:
            return self.cache_dir
        return os.path.join(os.path.expanduser("~"), ".cache", "taftvar")


_FIELD_NAMES = {f.name for f in fields(Config)}


def load_config(path: str | None = None, **overrides) -> Config:
    """Build a Config from an optional TOML file plus keyword overrides.

    Overrides with value None are ignored, so CLI flags can be passed straight
    through.
    """
    data: dict = {}
    if path is not None:
        try:
            with open(path, "rb") as fh:
                data = tomllib.load(fh)
        except (OSError, tomllib.TOMLDecodeError) as exc:
            raise SpecValidation(f"cannot read config {path}: {exc}") from exc
    unknown = set(data) - _FIELD_NAMES
    if unknown:
        raise SpecValidation(f"unknown config keys: {sorted(unknown)}")
    cfg = Config(**data)
    live = {k: v for k, v in overrides.items() if v is not None}
    unknown = set(live) - _FIELD_NAMES
    if unknown:
        raise SpecValidation(f"unknown config overrides: {sorted(unknown)}")
    if live:
        cfg = replace(cfg, **live)
    return cfg.validate()
