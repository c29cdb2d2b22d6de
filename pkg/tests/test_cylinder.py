"""Cylinder faces, star operations, flag opetopes, straightness."""

import pytest

from opetopes.core import is_opetope, validate_structure
from opetopes.cylinder import (
    build_cylinder,
    cyl_map,
    face_id,
    flag_opetope,
    flat_star_suite,
    intersect_flag_opetopes,
    iteration_suite,
    monotone_overlap_suite,
    monotone_star_suite,
    parse_face_id,
    pflag_opetope,
    star,
    star_projection_suite,
    dual_star_suite,
    straightness_certificate,
    unique_projection_check,
)
from opetopes.fixtures_catalog import FIXTURE_NAMES, load_fixture
from opetopes.flags import Flat, maximal_flags, parse_flag
from opetopes.morphisms import FaceMap

# counts of cylinder faces per dimension, enumerated independently of the
# boundary structure (flats + descending chains + punctured chains)
CYL_COUNTS = {
    "PT": [2, 1],
    "I": [4, 5, 2],
    "G1": [4, 8, 9, 4],
    "G2": [6, 12, 13, 6],
    "O3": [8, 19, 33, 41, 20],
}

CERTIFICATES = {  # steps, intersections, total faces
    "I": (2, 1, 11),
    "G1": (4, 3, 25),
    "G2": (6, 5, 37),
    "O3": (20, 19, 121),
}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_cylinder_structure_and_expected_counts(name):
    # the cylinder is a complex of opetopes, not one opetopic cardinal: the
    # two flat copies of the base are upper-incomparable by design
    C = build_cylinder(load_fixture(name))
    assert validate_structure(C).ok
    assert [len(C.faces(k)) for k in range(C.dim + 1)] == CYL_COUNTS[name]


def test_cylinder_of_interval_boundaries():
    C = build_cylinder(load_fixture("I"))
    assert C.gamma["flag:[a,s]"] == "pflag:[a,0]"
    assert C.delta["flag:[a,s]"] == {"flag:[s]", "flat:+:a"}
    assert C.gamma["flag:[a,t]"] == "pflag:[a,0]"
    assert C.delta["flag:[a,t]"] == {"flag:[t]", "flat:-:a"}
    assert C.gamma["pflag:[a,0]"] == "flat:+:t"
    assert C.delta["pflag:[a,0]"] == {"flat:-:s"}


def test_star_values_on_g2():
    P = load_fixture("G2")
    assert star(P, "a01", parse_flag("[m,a02,v2]")) == Flat("-", "a01")
    assert star(P, "a12", parse_flag("[m,a01,v0]")) == Flat("+", "a12")
    assert star(P, "a12", ("m", "a01", "0")) == Flat("+", "a12")
    assert star(P, "a01", ("m", "a01", "0")) == ("a01", "0")
    assert star(P, "a02", ("m", "0", "v0")) == ("a02", "0")
    assert star(P, "a02", ("m", "a01", "0")) == ("a02", "0")
    assert star(P, "v2", parse_flag("[m,a02,v2]")) == ("v2",)


def test_star_values_on_interval_and_o3():
    I = load_fixture("I")
    assert star(I, "s", ("a", "0")) == Flat("-", "s")
    assert star(I, "t", ("a", "0")) == Flat("+", "t")
    O3 = load_fixture("O3")
    assert star(O3, "r", ("c", "0", "a02", "v2")) == ("r", "0", "v2")


def test_star_projection_invariant():
    for name in FIXTURE_NAMES:
        assert star_projection_suite(load_fixture(name)).ok


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_star_lemma_suites(name):
    P = load_fixture(name)
    assert flat_star_suite(P).ok
    assert iteration_suite(P).ok
    assert monotone_star_suite(P).ok
    assert dual_star_suite(P).ok
    assert monotone_overlap_suite(P).ok


def test_flag_opetope_faces_of_g2():
    P = load_fixture("G2")
    sub = flag_opetope(P, parse_flag("[m,a02,v2]"))
    assert is_opetope(sub)
    assert sub.face_set() == {
        "flat:-:v0",
        "flat:-:v1",
        "flat:-:v2",
        "flat:+:v2",
        "flag:[v2]",
        "flat:-:a01",
        "flat:-:a12",
        "flat:-:a02",
        "pflag:[a02,0]",
        "flag:[a02,v2]",
        "flat:-:m",
        "pflag:[m,0,v2]",
        "flag:[m,a02,v2]",
    }


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_all_flag_opetopes_are_opetopes_with_unique_projection(name):
    P = load_fixture(name)
    for f in maximal_flags(P):
        sub = flag_opetope(P, f)
        assert is_opetope(sub)
        assert unique_projection_check(P, f).ok


def test_pflag_opetope_of_intersection():
    P = load_fixture("G2")
    sub = intersect_flag_opetopes(P, parse_flag("[m,a01,v0]"), parse_flag("[m,a02,v0]"))
    expected = pflag_opetope(P, ("m", "0", "v0"))
    assert sub.face_set() == expected.face_set()


@pytest.mark.parametrize("name", ("I", "G1", "G2", "O3"))
def test_straightness_certificates(name):
    cert = straightness_certificate(load_fixture(name))
    steps, intersections, total = CERTIFICATES[name]
    assert len(cert.flags) == steps
    assert len(cert.intersections) == intersections
    assert cert.total_faces == total
    assert cert.covered


def test_cyl_map_of_identity_and_inclusion():
    G2 = load_fixture("G2")
    ident = FaceMap(G2, G2, {x: x for x in G2.all_faces()})
    lifted = cyl_map(ident)
    assert all(lifted(x) == x for x in lifted.source.all_faces())


def test_face_id_round_trip():
    for text in ("flat:-:a01", "flag:[m,a02,v2]", "pflag:[m,0,v2]"):
        assert face_id(parse_face_id(text)) == text
