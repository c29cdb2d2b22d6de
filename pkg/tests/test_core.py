"""Axioms, sizes, duals, and the mutation harness on the bundled fixtures."""

import pytest

from opetopes.core import (
    dual,
    generated_sub,
    is_opetope,
    is_opetopic_cardinal,
    iterated_codomain,
    size,
    validate_structure,
)
from opetopes.fixtures_catalog import FIXTURE_NAMES, load_fixture
from opetopes.oracles import mutation_failure, mutations

EXPECTED_SIZE = {
    "PT": (1,),
    "I": (1, 1),
    "G1": (1, 1, 1),
    "G2": (1, 1, 1),
    "O3": (1, 1, 1, 1),
}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_is_opetope(name):
    P = load_fixture(name)
    assert validate_structure(P).ok
    assert is_opetopic_cardinal(P).ok
    assert is_opetope(P)
    assert size(P) == EXPECTED_SIZE[name]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_dual_is_opetope(name):
    P = load_fixture(f"{name}^op")
    assert is_opetope(P)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_dual_involution(name):
    P = load_fixture(name)
    PP = dual(dual(P))
    assert PP.face_set() == P.face_set()
    assert PP.gamma == P.gamma
    assert {k: set(v) for k, v in PP.delta.items()} == {k: set(v) for k, v in P.delta.items()}


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_twenty_mutations_each_fail_with_named_check(name):
    muts = mutations(load_fixture(name), count=20)
    assert len(muts) == 20
    labels = [label for label, _ in muts]
    assert len(set(labels)) == 20
    for label, doc in muts:
        named = mutation_failure(doc)
        assert named, f"mutation {label} did not fail"


def test_generated_sub_of_top_is_whole():
    P = load_fixture("O3")
    assert generated_sub(P, P.top()).face_set() == P.face_set()


def test_iterated_codomain_chain():
    P = load_fixture("O3")
    assert iterated_codomain(P, "c", 2) == "r"
    assert iterated_codomain(P, "c", 1) == "a03"
    assert iterated_codomain(P, "c", 0) == "v3"
