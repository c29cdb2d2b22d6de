"""Bundled desk-scale fixtures: PT, I, G1, G2, O3 and their duals."""

from __future__ import annotations

from importlib import resources

import json

from .core import Hypergraph, dual
from .io import hypergraph_from_dict

FIXTURE_NAMES = ("PT", "I", "G1", "G2", "O3")


def load_fixture(name: str) -> Hypergraph:
    if name.endswith("^op"):
        return dual(load_fixture(name[:-3]))
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    data = resources.files("opetopes.fixtures").joinpath(f"{name}.json").read_text()
    return hypergraph_from_dict(json.loads(data))


def all_fixtures(include_duals: bool = False) -> dict[str, Hypergraph]:
    out = {name: load_fixture(name) for name in FIXTURE_NAMES}
    if include_duals:
        for name in FIXTURE_NAMES:
            out[f"{name}^op"] = load_fixture(f"{name}^op")
    return out
