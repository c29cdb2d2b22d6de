"""Flag orders, successors, endpoints, and punctured flags."""

import pytest

from opetopes.fixtures_catalog import FIXTURE_NAMES, load_fixture
from opetopes.flags import (
    flag_lt,
    format_flag,
    initial_flag,
    maximal_flags,
    maximal_pflags,
    next_flag,
    parse_flag,
    successor_chain,
    terminal_flag,
)
from opetopes.oracles import flag_endpoint_suite, flag_successor_suite
from opetopes.flags import dual_flag_suite

FLAG_COUNTS = {"PT": 1, "I": 2, "G1": 4, "G2": 6, "O3": 20}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_flag_counts(name):
    assert len(maximal_flags(load_fixture(name))) == FLAG_COUNTS[name]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_successor_chain_equals_sorted_enumeration(name):
    # the walk by successors and the sort of the brute-force enumeration are
    # computed independently and must agree
    assert flag_successor_suite(load_fixture(name)).ok


def test_g2_chain_order():
    P = load_fixture("G2")
    chain = [format_flag(f) for f in successor_chain(P)]
    assert chain == [
        "[m,a02,v2]",
        "[m,a12,v2]",
        "[m,a12,v1]",
        "[m,a01,v1]",
        "[m,a01,v0]",
        "[m,a02,v0]",
    ]


def test_next_flag_of_terminal_raises():
    P = load_fixture("G2")
    with pytest.raises(ValueError):
        next_flag(P, parse_flag("[m,a02,v0]"))


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_flag_order_is_strict_total(name):
    P = load_fixture(name)
    flags = maximal_flags(P)
    for i, f in enumerate(flags):
        assert not flag_lt(P, f, f)
        for g in flags[i + 1 :]:
            assert flag_lt(P, f, g) and not flag_lt(P, g, f)


@pytest.mark.parametrize("name", FIXTURE_NAMES + ("G2^op", "O3^op"))
def test_endpoint_formulas_match_enumeration_extremes(name):
    assert flag_endpoint_suite(load_fixture(name)).ok


def test_endpoints_of_whole_fixture():
    P = load_fixture("G2")
    assert initial_flag(P) == ("m", "a02", "v2")
    assert terminal_flag(P) == ("m", "a02", "v0")


@pytest.mark.parametrize("name", ("I", "G1", "G2", "O3"))
def test_dual_flag_correspondence(name):
    assert dual_flag_suite(load_fixture(name)).ok


def test_maximal_pflags_of_g2_top():
    P = load_fixture("G2")
    # punctures only at the top-1 level or at the low level of some maximal
    # flag; in particular [m,a02,0] is not a face
    assert maximal_pflags(P, "m") == {
        ("m", "0", "v2"),
        ("m", "0", "v1"),
        ("m", "0", "v0"),
        ("m", "a01", "0"),
        ("m", "a12", "0"),
    }
