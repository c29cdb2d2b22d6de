"""The nine acceptance criteria, one pass/fail line each."""

from opetopes.core import is_opetope
from opetopes.cylinder import build_cylinder, straightness_certificate
from opetopes.fixtures_catalog import FIXTURE_NAMES, load_fixture
from opetopes.flags import maximal_flags
from opetopes.morphisms import identity_iota, onto_maps_to_interval
from opetopes.oracles import (
    flag_endpoint_suite,
    flag_intersection_suite,
    flag_opetope_suite,
    flag_successor_suite,
    iota_suite,
    mutation_failure,
    mutations,
    omega_law_suite,
    omega_map_suite,
    product_pair_catalog,
    product_suite,
)
from opetopes.cylinder import (
    dual_star_suite,
    flat_star_suite,
    iteration_suite,
    monotone_overlap_suite,
    monotone_star_suite,
    star_projection_suite,
)
from opetopes.product import build_H, verify_product


def _report(n, ok):
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {n} failed"


def test_criterion_1_axioms_and_mutations():
    ok = True
    for name in FIXTURE_NAMES:
        ok &= is_opetope(load_fixture(name))
        ok &= is_opetope(load_fixture(f"{name}^op"))
        muts = mutations(load_fixture(name), count=20)
        ok &= len(muts) == 20
        ok &= all(mutation_failure(doc) is not None for _, doc in muts)
    _report(1, ok)


def test_criterion_2_flag_successor():
    counts = {"PT": 1, "I": 2, "G1": 4, "G2": 6, "O3": 20}
    ok = True
    for name in FIXTURE_NAMES:
        P = load_fixture(name)
        ok &= flag_successor_suite(P).ok
        ok &= len(maximal_flags(P)) == counts[name]
    _report(2, ok)


def test_criterion_3_endpoint_formulas():
    ok = all(flag_endpoint_suite(load_fixture(n)).ok for n in FIXTURE_NAMES)
    _report(3, ok)


def test_criterion_4_flag_opetopes():
    ok = all(flag_opetope_suite(load_fixture(n)).ok for n in FIXTURE_NAMES)
    total = sum(len(maximal_flags(load_fixture(n))) for n in ("PT", "I", "G2", "O3"))
    ok &= total == 29
    _report(4, ok)


def test_criterion_5_intersections_and_straightness():
    ok = True
    counts = {"I": [4, 5, 2], "G2": [6, 12, 13, 6]}
    for name in FIXTURE_NAMES:
        P = load_fixture(name)
        ok &= flag_intersection_suite(P).ok
        cert = straightness_certificate(P)
        ok &= cert.covered
        if name in counts:
            C = build_cylinder(P)
            ok &= [len(C.faces(k)) for k in range(C.dim + 1)] == counts[name]
    _report(5, ok)


def test_criterion_6_star_lemmas():
    ok = True
    for name in ("I", "G2", "O3"):
        P = load_fixture(name)
        for suite in (
            star_projection_suite,
            flat_star_suite,
            iteration_suite,
            monotone_star_suite,
            dual_star_suite,
            monotone_overlap_suite,
        ):
            ok &= suite(P).ok
    _report(6, ok)


def test_criterion_7_iota_maps():
    ok = True
    for name in FIXTURE_NAMES:
        results = iota_suite(load_fixture(name))
        ok &= bool(results) and all(r.ok for r in results)
    _report(7, ok)


def test_criterion_8_product_theorem():
    ok = sum(len(product_pair_catalog(load_fixture(n))) for n in ("I", "G1", "G2")) >= 12
    for name in ("I", "G1", "G2"):
        results = product_suite(load_fixture(name))
        ok &= bool(results) and all(r.ok for r in results)
    # the two worked value tables
    G2 = load_fixture("G2")
    maps = {h.name: h for h in onto_maps_to_interval(G2, load_fixture("I"))}
    H1 = build_H(maps["h_a01"], maps["h_a12"])
    ok &= {q: H1(q) for q in G2.all_faces()} == {
        "v0": "flat:-:s",
        "v1": "flat:+:s",
        "v2": "flat:+:t",
        "a01": "flag:[s]",
        "a12": "flat:+:a",
        "a02": "pflag:[a,0]",
        "m": "flag:[a,s]",
    }
    H2 = build_H(maps["h_a01"], identity_iota(G2))
    ok &= {q: H2(q) for q in G2.all_faces()} == {
        "v0": "flat:-:v0",
        "v1": "flat:+:v1",
        "v2": "flat:+:v2",
        "a01": "pflag:[a01,0]",
        "a12": "flat:+:a12",
        "a02": "pflag:[a02,0]",
        "m": "pflag:[m,a01,0]",
    }
    O3 = load_fixture("O3")
    h12 = {h.name: h for h in onto_maps_to_interval(O3, load_fixture("I"))}["h_a12"]
    ok &= verify_product(h12, identity_iota(O3)).ok
    _report(8, ok)


def test_criterion_9_omega_laws():
    ok = True
    for name in ("G2", "O3"):
        P = load_fixture(name)
        ok &= omega_law_suite(P).ok
        ok &= omega_map_suite(P).ok
    _report(9, ok)
