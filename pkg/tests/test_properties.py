"""Property-based checks over randomly sampled faces, flags, and documents."""

import json

from hypothesis import given, settings, strategies as st

from opetopes.core import is_opetope, le_plus, lt_plus, occurrence_set
from opetopes.cylinder import build_cylinder, parse_face_id, project, star
from opetopes.fixtures_catalog import FIXTURE_NAMES, load_fixture
from opetopes.flags import flag_lt, maximal_flags, next_flag
from opetopes.io import hypergraph_from_dict, hypergraph_to_dict
from opetopes.oracles import mutation_failure, mutations

fixture_names = st.sampled_from(FIXTURE_NAMES)


@given(fixture_names, st.data())
@settings(max_examples=60, deadline=None)
def test_star_projects_to_its_base(name, data):
    P = load_fixture(name)
    C = build_cylinder(P)
    phi_id = data.draw(st.sampled_from(sorted(C.all_faces())))
    phi = parse_face_id(phi_id)
    base = project(phi)
    p = data.draw(st.sampled_from(sorted(occurrence_set(P, base))))
    try:
        out = star(P, p, phi)
    except ValueError:
        return  # star is partial off the qualifying triples
    assert project(out) == p


@given(fixture_names, st.data())
@settings(max_examples=40, deadline=None)
def test_next_flag_is_the_order_successor(name, data):
    P = load_fixture(name)
    flags = maximal_flags(P)
    i = data.draw(st.integers(min_value=0, max_value=len(flags) - 1))
    if i == len(flags) - 1:
        return
    succ = next_flag(P, flags[i])
    assert succ == flags[i + 1]
    assert flag_lt(P, flags[i], succ)


@given(fixture_names, st.integers(min_value=0, max_value=19))
@settings(max_examples=40, deadline=None)
def test_any_mutation_breaks_an_axiom(name, index):
    P = load_fixture(name)
    muts = mutations(P, count=20)
    _, doc = muts[index]
    assert mutation_failure(doc) is not None


@given(fixture_names)
@settings(max_examples=10, deadline=None)
def test_json_round_trip_preserves_opetope(name):
    P = load_fixture(name)
    doc = json.loads(json.dumps(hypergraph_to_dict(P)))
    Q = hypergraph_from_dict(doc)
    assert is_opetope(Q)
    assert Q.face_set() == P.face_set()


@given(fixture_names, st.data())
@settings(max_examples=60, deadline=None)
def test_upper_order_is_strict(name, data):
    P = load_fixture(name)
    faces = sorted(P.all_faces())
    a = data.draw(st.sampled_from(faces))
    b = data.draw(st.sampled_from(faces))
    assert not lt_plus(P, a, a)
    if lt_plus(P, a, b):
        assert not lt_plus(P, b, a)
        assert le_plus(P, a, b)
