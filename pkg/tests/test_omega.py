"""Cells over opetopic cardinals: boundaries, identities, composition."""

import pytest

from opetopes.fixtures_catalog import load_fixture
from opetopes.omega import (
    Cell,
    cell_codomain,
    cell_compose,
    cell_domain,
    cell_from_faces,
    cell_identity,
    map_image_cell,
)
from opetopes.oracles import omega_law_suite, omega_map_suite


def test_cell_rejects_unclosed_carrier():
    P = load_fixture("G2")
    with pytest.raises(ValueError):
        Cell(P, frozenset({"m"}), 2)


def test_boundaries_of_g2_top_cell():
    P = load_fixture("G2")
    c = cell_from_faces(P, ["m"])
    assert cell_domain(c, 1).grade(1) == {"a01", "a12"}
    assert cell_codomain(c, 1).grade(1) == {"a02"}
    assert cell_domain(c, 0).grade(0) == {"v0"}
    assert cell_codomain(c, 0).grade(0) == {"v2"}


def test_identity_boundaries():
    P = load_fixture("G2")
    c = cell_from_faces(P, ["m"])
    ident = cell_identity(c)
    assert cell_domain(ident, c.level) == c
    assert cell_codomain(ident, c.level) == c


def test_composition_of_o3_pieces():
    P = load_fixture("O3")
    c1 = cell_from_faces(P, ["q"])
    c2 = cell_from_faces(P, ["p", "a23"])
    # q's 1-domain [a02, a23] is the 1-codomain of the pasting {p, a23}
    assert cell_domain(c1, 1) == cell_codomain(c2, 1)
    comp = cell_compose(c1, c2, 1)
    assert comp.grade(2) == {"p", "q"}
    assert cell_domain(comp, 1) == cell_domain(c2, 1)
    assert cell_codomain(comp, 1) == cell_codomain(c1, 1)


@pytest.mark.parametrize("name", ("PT", "I", "G1", "G2", "O3"))
def test_omega_laws_over_all_subcardinal_cells(name):
    assert omega_law_suite(load_fixture(name)).ok


@pytest.mark.parametrize("name", ("G2", "O3"))
def test_maps_commute_with_boundaries(name):
    assert omega_map_suite(load_fixture(name)).ok


def test_map_image_cell_levels():
    from opetopes.oracles import map_catalog

    P = load_fixture("G2")
    h = next(m for m in map_catalog(P) if m.name == "h_a01")
    c = cell_from_faces(P, ["m"])
    img = map_image_cell(h, c)
    assert img.level == c.level
    assert img.carrier == {"s", "t", "a"}
