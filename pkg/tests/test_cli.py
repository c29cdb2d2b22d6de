"""Command-line interface and JSON round-trips."""

import json

import pytest

from opetopes.cli import main
from opetopes.fixtures_catalog import load_fixture
from opetopes.io import (
    SchemaError,
    hypergraph_from_dict,
    hypergraph_to_dict,
    load_hypergraph,
    save_hypergraph,
)


@pytest.fixture()
def g2_file(tmp_path):
    path = tmp_path / "G2.json"
    save_hypergraph(load_fixture("G2"), path)
    return str(path)


def test_save_load_round_trip_byte_identical(tmp_path, g2_file):
    again = tmp_path / "again.json"
    save_hypergraph(load_hypergraph(g2_file), again)
    assert open(g2_file, "rb").read() == open(again, "rb").read()


def test_dangling_gamma_names_the_face():
    doc = hypergraph_to_dict(load_fixture("I"))
    for e in doc["faces"]:
        if e["id"] == "a":
            e["gamma"] = "nowhere"
    with pytest.raises(SchemaError, match="a"):
        hypergraph_from_dict(doc)


def test_validate_exit_codes(g2_file, capsys):
    assert main(["validate", g2_file]) == 0
    assert main(["validate", "O3"]) == 0
    assert main(["validate", "/no/such/file.json"]) == 2
    capsys.readouterr()


def test_flags_lists_chain_in_order(capsys):
    assert main(["flags", "G2", "--max"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == [
        "[m,a02,v2]",
        "[m,a12,v2]",
        "[m,a12,v1]",
        "[m,a01,v1]",
        "[m,a01,v0]",
        "[m,a02,v0]",
    ]


def test_next_terminal_flag_errors(capsys):
    assert main(["next", "G2", "[m,a01,v0]"]) == 0
    assert capsys.readouterr().out.strip() == "[m,a02,v0]"
    assert main(["next", "G2", "[m,a02,v0]"]) == 1
    assert "terminal" in capsys.readouterr().err


def test_cyl_straight_certificate_for_interval(capsys):
    assert main(["--format", "json", "cyl", "straight", "I"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["steps"]) == 2
    assert doc["covered"] is True


def test_cyl_star(capsys):
    assert main(["cyl", "star", "G2", "--p", "a01", "--face", "flag:[m,a02,v2]"]) == 0
    assert capsys.readouterr().out.strip() == "flat:-:a01"


def test_dual_emits_valid_json(capsys):
    assert main(["dual", "I"]) == 0
    doc = json.loads(capsys.readouterr().out)
    H = hypergraph_from_dict(doc)
    assert H.gamma["a"] == "s"


def test_product_verify_and_build(capsys):
    assert main(["product", "verify", "G2", "h_a01", "h_a12"]) == 0
    capsys.readouterr()
    assert main(["--format", "json", "product", "build-H", "G2", "h_a01", "id"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["assignment"]["m"] == "pflag:[m,a01,0]"
    assert doc["cases"]["m"] == "H5"


def test_product_analyze(capsys):
    assert main(["--format", "json", "product", "analyze", "G2", "h_a01", "id"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["threshold"]["1"] == ["a01", "a02"]
    assert doc["report"]["verdict"] == "pass"


def test_oracle_pass_and_fail(tmp_path, capsys):
    assert main(["oracle", "flag-intersections", "O3"]) == 0
    capsys.readouterr()
    # a mutated fixture must fail with a counterexample
    from opetopes.oracles import mutations

    label, doc = mutations(load_fixture("G2"), count=1)[0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code = main(["oracle", "cardinal", str(bad)])
    capsys.readouterr()
    assert code == 3


def test_info_deterministic(capsys):
    assert main(["--format", "json", "info", "O3"]) == 0
    first = capsys.readouterr().out
    assert main(["--format", "json", "info", "O3"]) == 0
    assert capsys.readouterr().out == first
