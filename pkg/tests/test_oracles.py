"""The oracle registry: every suite passes on every bundled fixture."""

import pytest

from opetopes.oracles import ORACLES, run_oracle


@pytest.mark.parametrize("oracle_id", sorted(ORACLES))
def test_oracle_passes_on_all_fixtures(oracle_id):
    results = run_oracle(oracle_id, "all")
    assert results
    bad = [r for r in results if not r.ok]
    assert not bad, bad


def test_unknown_oracle_rejected():
    with pytest.raises(KeyError):
        run_oracle("no-such-suite", "G2")


def test_single_fixture_selector():
    results = run_oracle("flag-intersections", "O3")
    assert len(results) == 1 and results[0].ok
