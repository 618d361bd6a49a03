"""Module spec files and the recipe language."""

import json

import pytest

from taftvar import modspec as ms, repmod as rm, truncpoly as tp
from taftvar.algebra import make_algebra
from taftvar.errors import RecipeParse, SpecValidation

C1 = make_algebra(2, 2, 5)
C2 = make_algebra(3, 2, 7)


def test_round_trip_byte_identical():
    for M in [rm.trivial(C1), rm.v_module(C2, [1, 2]), rm.regular(C1)]:
        s1 = ms.dumps_spec(ms.module_to_spec(M))
        M2 = ms.spec_to_module(json.loads(s1))
        s2 = ms.dumps_spec(ms.module_to_spec(M2))
        assert s1 == s2


def test_lambda_round_trip():
    L = tp.restrict_to_lambda(rm.v_module(C1, [1, 1]))
    s1 = ms.dumps_spec(ms.lambda_module_to_spec(L))
    L2 = ms.spec_to_lambda_module(json.loads(s1))
    s2 = ms.dumps_spec(ms.lambda_module_to_spec(L2))
    assert s1 == s2
    assert "g" not in json.loads(s1)


def test_spec_validation_missing_keys():
    with pytest.raises(SpecValidation, match="missing"):
        ms.spec_to_module({"l": 2, "m": 2})


def test_spec_validation_bad_entry():
    spec = ms.module_to_spec(rm.trivial(C1))
    spec["X"][0][0][0] = [7]  # coefficient out of range for p = 5
    with pytest.raises(SpecValidation, match="coefficients"):
        ms.spec_to_module(spec)


def test_spec_validation_relation_failure_names_relation():
    spec = ms.module_to_spec(rm.v_module(C1, [1, 1]))
    spec["g"][0][0][0] = [3]  # break the group action
    with pytest.raises(SpecValidation, match="relation"):
        ms.spec_to_module(spec)


def test_recipes_build_expected_modules():
    assert ms.build_recipe(C1, "trivial").dim == 1
    assert ms.build_recipe(C1, "regular").dim == 16
    assert ms.build_recipe(C1, "v:[1,1]").dim == 8
    assert ms.build_recipe(C1, "vprime:1,1").dim == 8
    assert ms.build_recipe(C2, "v:[1,2]").dim == 27
    assert ms.build_recipe(C1, "simple:1,0").dim == 1
    assert ms.build_recipe(C1, "tensor:trivial,regular").dim == 16
    assert ms.build_recipe(C1, "omega^1:trivial").dim == 3
    assert ms.build_recipe(C1, "dual:v:[1,1]").dim == 8
    ms.build_recipe(C1, "random:5").validate()


def test_recipe_determinism():
    a = ms.module_to_spec(ms.build_recipe(C1, "random:99"))
    b = ms.module_to_spec(ms.build_recipe(C1, "random:99"))
    assert ms.dumps_spec(a) == ms.dumps_spec(b)


def test_recipe_errors():
    with pytest.raises(RecipeParse):
        ms.build_recipe(C1, "nope")
    with pytest.raises(RecipeParse):
        ms.build_recipe(C1, "v:[0,0]")
    with pytest.raises(RecipeParse):
        ms.build_recipe(C1, "simple:1")  # wrong coordinate count
    with pytest.raises(RecipeParse):
        ms.build_recipe(C1, "tensor:trivial")
    with pytest.raises(RecipeParse):
        ms.build_recipe(C1, "lzeta:y1")  # no engine provided


def test_poly_parser():
    F = C2.field
    p = ms.parse_poly(C2, "y1+2*y2")
    assert p == {(1, 0): 1, (0, 1): 2}
    p = ms.parse_poly(C2, "y1*y2^2")
    assert p == {(1, 2): 1}
    with pytest.raises(RecipeParse):
        ms.parse_poly(C2, "y1+y2^2")  # inhomogeneous
    with pytest.raises(RecipeParse):
        ms.parse_poly(C2, "y3")  # variable out of range
    with pytest.raises(RecipeParse):
        ms.parse_poly(C2, "7*y1")  # zero coefficient mod 7
