"""Command-line interface: verbs, JSON schemas, exit codes, caching."""

import json
import os

import pytest
from click.testing import CliRunner

from taftvar.cli import main


@pytest.fixture
def runner(tmp_path, monkeypatch):
    from taftvar import cohom

    monkeypatch.setenv("TAFTVAR_CACHE_DIR", str(tmp_path / "cache"))
    cohom._engines.clear()  # engines memoize their cache dir
    return CliRunner()


ARGS_C1 = ["--ell", "2", "--m", "2", "--p", "5"]


def test_genmodule_and_rank(runner, tmp_path):
    spec = tmp_path / "v.json"
    res = runner.invoke(main, ["genmodule", "v:[1,1]", str(spec)] + ARGS_C1)
    assert res.exit_code == 0, res.output
    res = runner.invoke(main, ["variety", "rank", "--module", str(spec)])
    assert res.exit_code == 0, res.output
    out = json.loads(res.output)
    assert out["field"] == {"p": 5, "r": 1}
    assert not out["empty"]
    # the orbit of [1:1] under scaling by -1: {[1:1], [1:4]}
    assert out["points"] == [[[1], [1]], [[1], [4]]]


def test_support_json_schema(runner, tmp_path):
    spec = tmp_path / "reg.json"
    assert runner.invoke(main, ["genmodule", "regular", str(spec)] + ARGS_C1).exit_code == 0
    res = runner.invoke(main, ["variety", "support", "--module", str(spec)] + ARGS_C1)
    assert res.exit_code == 0, res.output
    out = json.loads(res.output)
    assert out["points"] == []
    assert out["stabilized"] is True
    assert out["betti"][1:] == [0] * 10


def test_rank_and_support_psi_related(runner, tmp_path):
    spec = tmp_path / "v12.json"
    assert runner.invoke(main, ["genmodule", "v:[1,2]", str(spec)] + ARGS_C1).exit_code == 0
    rank = json.loads(runner.invoke(main, ["variety", "rank", "--module", str(spec)]).output)
    supp = json.loads(
        runner.invoke(main, ["variety", "support", "--module", str(spec)] + ARGS_C1).output
    )
    # support is the single point Psi([1:2]) = [1:4]
    assert supp["points"] == [[[1], [4]]]
    assert [[1], [2]] in rank["points"]


def test_lambda_rank(runner, tmp_path):
    # a Lambda spec has no g block; the trivial Lambda-module sees every point
    spec = tmp_path / "lam.json"
    spec.write_text(json.dumps({
        "l": 2, "m": 2, "p": 5, "r": 1, "dim": 1,
        "X": [[[[0]]], [[[0]]]],
    }))
    res = runner.invoke(main, ["variety", "rank", "--lambda-module", str(spec)])
    assert res.exit_code == 0, res.output
    assert len(json.loads(res.output)["points"]) == 6


def test_genmodule_round_trip_byte_identical(runner, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert runner.invoke(main, ["genmodule", "v:[1,1]", str(path)] + ARGS_C1).exit_code == 0
    assert a.read_bytes() == b.read_bytes()
    # load and re-serialize through the CLI spec loader
    from taftvar import modspec as ms

    spec = ms.load_spec_file(str(a))
    assert ms.dumps_spec(ms.module_to_spec(ms.spec_to_module(spec))).encode() == a.read_bytes()


def test_validation_exit_codes(runner, tmp_path):
    res = runner.invoke(main, ["genmodule", "bogus:recipe", str(tmp_path / "x.json")] + ARGS_C1)
    assert res.exit_code == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    res = runner.invoke(main, ["variety", "rank", "--module", str(bad)])
    assert res.exit_code == 3
    res = runner.invoke(main, ["variety", "rank"])
    assert res.exit_code == 3
    res = runner.invoke(main, ["check", "bogus"] + ARGS_C1)
    assert res.exit_code == 3


def test_cache_clear(runner, tmp_path):
    spec = tmp_path / "t.json"
    assert runner.invoke(main, ["genmodule", "trivial", str(spec)] + ARGS_C1).exit_code == 0
    assert runner.invoke(
        main, ["variety", "support", "--module", str(spec)] + ARGS_C1
    ).exit_code == 0
    cache_dir = os.environ["TAFTVAR_CACHE_DIR"]
    assert any(f.endswith(".npz") for f in os.listdir(cache_dir))
    res = runner.invoke(main, ["cache", "clear"])
    assert res.exit_code == 0
    assert not any(f.endswith(".npz") for f in os.listdir(cache_dir))


def test_cached_and_cold_runs_identical(runner, tmp_path):
    spec = tmp_path / "v.json"
    assert runner.invoke(main, ["genmodule", "v:[1,1]", str(spec)] + ARGS_C1).exit_code == 0
    first = runner.invoke(main, ["variety", "support", "--module", str(spec)] + ARGS_C1).output
    # second run hits the resolution cache in a fresh engine table
    from taftvar import cohom

    cohom._engines.clear()
    second = runner.invoke(main, ["variety", "support", "--module", str(spec)] + ARGS_C1).output
    assert first == second
