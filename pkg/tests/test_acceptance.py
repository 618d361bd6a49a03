"""Acceptance gate: the 14 end-to-end verification criteria.

Each criterion prints exactly one pass/fail line.  The configurations are
C1 = (ell=2, m=2, p=5), C2 = (ell=3, m=2, p=7), C3 = (ell=2, m=3, p=5),
with n_max = 10, d_max = 4.  Criterion 9 is the headline comparison of rank
and support varieties through the coordinatewise ell-th power map.
"""

import pytest

from taftvar import suites


@pytest.fixture(scope="module")
def sc(tmp_path_factory):
    cache_dir = str(tmp_path_factory.mktemp("rescache"))
    return suites.SuiteContext(cache_dir=cache_dir)


@pytest.mark.parametrize(
    "number", sorted(suites.CRITERIA), ids=[f"{n:02d}-{suites.CRITERIA[n][0]}" for n in sorted(suites.CRITERIA)]
)
def test_criterion(sc, number, capsys):
    [rep] = suites.run_criteria([number], sc)
    with capsys.disabled():
        print(rep.line())
    assert rep.passed, rep.detail
