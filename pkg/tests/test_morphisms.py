"""Contraction maps: validation, kernels, fibers, order preservation."""

import pytest

from opetopes.fixtures_catalog import load_fixture
from opetopes.morphisms import (
    IotaMap,
    compose_iota,
    fiber_interval_check,
    identity_iota,
    interval_sign,
    iota_preservation_suite,
    kernel,
    onto_maps_to_interval,
    restrict_iota,
    validate_iota_map,
)
from opetopes.oracles import iota_suite, map_catalog


def _onto(P, name):
    I = load_fixture("I")
    return {h.name: h for h in onto_maps_to_interval(P, I)}[name]


def test_onto_maps_of_g2():
    P = load_fixture("G2")
    maps = {h.name for h in onto_maps_to_interval(P, load_fixture("I"))}
    # one map per edge that is not a codomain
    assert maps == {"h_a01", "h_a12"}


def test_kernel_of_h_a01():
    h = _onto(load_fixture("G2"), "h_a01")
    assert kernel(h) == {"a12", "m"}
    assert h.assignment == {
        "v0": "s",
        "v1": "t",
        "v2": "t",
        "a01": "a",
        "a12": "t",
        "a02": "a",
        "m": "a",
    }


def test_interval_sign():
    I = load_fixture("I")
    assert interval_sign(I, "s") == "-"
    assert interval_sign(I, "t") == "+"
    assert interval_sign(I, "a") == "a"


def test_invalid_map_rejected():
    P = load_fixture("G2")
    bad = dict(identity_iota(P).assignment)
    bad["m"] = "v0"  # codomain iterates not preserved
    with pytest.raises(ValueError):
        IotaMap(P, P, bad)


def test_fibers_are_intervals_across_catalog():
    for name in ("I", "G1", "G2", "O3"):
        P = load_fixture(name)
        for h in map_catalog(P):
            for p in h.target.all_faces():
                assert fiber_interval_check(h, p), (h.name, p)


@pytest.mark.parametrize("name", ("I", "G1", "G2", "O3"))
def test_order_preservation(name):
    P = load_fixture(name)
    for h in map_catalog(P):
        assert iota_preservation_suite(h).ok, h.name


@pytest.mark.parametrize("name", ("PT", "I", "G1", "G2", "O3"))
def test_full_iota_suite(name):
    results = iota_suite(load_fixture(name))
    assert results and all(r.ok for r in results), [r for r in results if not r.ok]


def test_compose_and_restrict():
    G2 = load_fixture("G2")
    h = _onto(G2, "h_a01")
    comp = compose_iota(identity_iota(h.target), h)
    assert comp.assignment == h.assignment
    r = restrict_iota(h, "a02")
    assert validate_iota_map(r).ok
    assert set(r.source.all_faces()) == {"a02", "v0", "v2"}
