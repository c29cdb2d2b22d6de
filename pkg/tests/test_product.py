"""Splitting analysis and the universal map into the cylinder."""

import pytest

from opetopes.fixtures_catalog import load_fixture
from opetopes.flags import maximal_flags
from opetopes.morphisms import identity_iota, onto_maps_to_interval
from opetopes.oracles import product_pair_catalog, product_suite
from opetopes.product import (
    ProductPair,
    analyze_splitting,
    build_H,
    constant_rho,
    h_lemma_suite,
    kernel_of_H_invariant,
    projection_pair,
    verify_product,
)


def _onto(P, name):
    return {h.name: h for h in onto_maps_to_interval(P, load_fixture("I"))}[name]


def test_worked_table_collapsing_h():
    G2 = load_fixture("G2")
    rho, h = _onto(G2, "h_a01"), _onto(G2, "h_a12")
    H = build_H(rho, h)
    assert {q: H(q) for q in G2.all_faces()} == {
        "v0": "flat:-:s",
        "v1": "flat:+:s",
        "v2": "flat:+:t",
        "a01": "flag:[s]",
        "a12": "flat:+:a",
        "a02": "pflag:[a,0]",
        "m": "flag:[a,s]",
    }
    pair = ProductPair(rho, h)
    assert pair.sigma("m") == "a01"
    assert pair.xi("m") == "a12"
    assert pair.splitting("m") and pair.splitting("a01")


def test_worked_table_identity_h():
    G2 = load_fixture("G2")
    rho, h = _onto(G2, "h_a01"), identity_iota(G2)
    H = build_H(rho, h)
    assert {q: H(q) for q in G2.all_faces()} == {
        "v0": "flat:-:v0",
        "v1": "flat:+:v1",
        "v2": "flat:+:v2",
        "a01": "pflag:[a01,0]",
        "a12": "flat:+:a12",
        "a02": "pflag:[a02,0]",
        "m": "pflag:[m,a01,0]",
    }
    pair = ProductPair(rho, h)
    assert pair.tau("m") == "a01"
    assert not pair.splitting("m")


def test_analysis_of_identity_pair():
    G2 = load_fixture("G2")
    analysis = analyze_splitting(_onto(G2, "h_a01"), identity_iota(G2))
    assert analysis.report.ok
    assert analysis.S == {1: []}
    assert analysis.T == {1: ["a01", "a02"]}
    assert analysis.B == {2: ["m"]}


def test_analysis_of_collapsing_pair():
    G2 = load_fixture("G2")
    analysis = analyze_splitting(_onto(G2, "h_a01"), _onto(G2, "h_a12"))
    assert analysis.report.ok
    assert analysis.S[1] == ["a01"] and analysis.T[1] == ["a02"]
    assert analysis.S[2] == ["m"]


def test_catalog_has_at_least_twelve_pairs():
    total = sum(len(product_pair_catalog(load_fixture(n))) for n in ("I", "G1", "G2"))
    assert total >= 12


@pytest.mark.parametrize("name", ("I", "G1", "G2"))
def test_universal_property_over_catalog(name):
    results = product_suite(load_fixture(name))
    assert results and all(r.ok for r in results), [r for r in results if not r.ok]


def test_universal_property_on_o3():
    O3 = load_fixture("O3")
    rho, h = _onto(O3, "h_a12"), identity_iota(O3)
    verdict = verify_product(rho, h)
    assert verdict.ok and verdict.solutions == 1
    assert h_lemma_suite(rho, h).ok
    assert kernel_of_H_invariant(rho, h).ok


def test_both_constant_pair_gives_flat_unique_h():
    G2 = load_fixture("G2")
    I = load_fixture("I")
    rho = constant_rho(G2, I, "-")
    h = constant_rho(G2, I, "-")
    verdict = verify_product(rho, h)
    assert verdict.ok
    H = build_H(rho, h)
    assert all(H(q).startswith("flat:-:") for q in G2.all_faces())


def test_splitting_sequences_reconstruct_h():
    G2 = load_fixture("G2")
    pair = ProductPair(_onto(G2, "h_a01"), identity_iota(G2))
    kind, seq = pair.splitting_sequence("m")
    assert kind == "threshold-form" and seq == ["m", "a01"]
    assert pair.value_from_sequence("m") == ("m", "a01", "0")
    kind, seq = ProductPair(_onto(G2, "h_a01"), _onto(G2, "h_a12")).splitting_sequence("m")
    assert kind == "splitting-form" and seq == ["m", "a01"]


@pytest.mark.parametrize("name", ("I", "G1", "G2"))
def test_projection_round_trip(name):
    P = load_fixture(name)
    I = load_fixture("I")
    for f in maximal_flags(P):
        pi, rho = projection_pair(P, f, I)
        H = build_H(rho, pi)
        assert all(H(q) == q for q in H.source.all_faces())
        assert verify_product(rho, pi).ok
