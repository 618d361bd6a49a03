"""Exact rank and support varieties for quantum elementary abelian groups.

The algebra A is a tensor product of m Taft algebras at a primitive ell-th
root of unity over F_{p^r} (p not dividing ell): a skew group algebra of a
truncated polynomial ring by (Z/ell)^m.  The package computes, in exact
finite-field arithmetic, rank varieties of modules via nilpotent restrictions
and cohomological support varieties via minimal resolutions, and verifies
that the two agree through the coordinatewise ell-th power map.
"""

from .algebra import AlgebraCtx, make_algebra
from .cohom import CohomologyEngine, ext_dims, get_engine
from .config import Config, load_config
from .errors import TaftVarError
from .field import FieldCtx, make_field
from .modspec import (
    build_recipe,
    module_to_spec,
    spec_to_lambda_module,
    spec_to_module,
)
from .rankvar import OrbitVariety, ProjPoint, psi, rank_variety
from .repmod import AModule, dual, omega, regular, simple, tensor, trivial, v_module
from .truncpoly import (
    LambdaModule,
    hochschild_m1_dims,
    lambda_rank_variety,
    lambda_support_variety,
    stable_hom_criterion,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraCtx",
    "AModule",
    "CohomologyEngine",
    "Config",
    "FieldCtx",
    "LambdaModule",
    "OrbitVariety",
    "ProjPoint",
    "TaftVarError",
    "build_recipe",
    "dual",
    "ext_dims",
    "get_engine",
    "hochschild_m1_dims",
    "lambda_rank_variety",
    "lambda_support_variety",
    "load_config",
    "make_algebra",
    "make_field",
    "module_to_spec",
    "omega",
    "psi",
    "rank_variety",
    "regular",
    "simple",
    "spec_to_lambda_module",
    "spec_to_module",
    "stable_hom_criterion",
    "tensor",
    "trivial",
    "v_module",
]
