"""JSON serialization for hypergraphs and face maps.

Hypergraph document:
  { "name": str, "faces": [ {"id", "dim", "gamma": str|null, "delta": [...]}, ... ] }
Map document:
  { "source": name, "target": name, "assignment": { faceId: faceId } }
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import AxiomReport, Hypergraph


class SchemaError(ValueError):
    """The document does not match the expected JSON shape."""


def hypergraph_from_dict(doc: dict[str, Any], validate: bool = True) -> Hypergraph:
    if not isinstance(doc, dict) or "faces" not in doc:
        raise SchemaError("expected an object with a 'faces' array")
    name = doc.get("name", "unnamed")
    entries = doc["faces"]
    if not isinstance(entries, list):
        raise SchemaError("'faces' must be an array")
    grades: list[list[str]] = []
    gamma: dict[str, str] = {}
    delta: dict[str, list[str]] = {}
    ids: set[str] = set()
    for e in entries:
        for key in ("id", "dim"):
            if key not in e:
                raise SchemaError(f"face entry missing '{key}': {e!r}")
        fid, dim = e["id"], e["dim"]
        if not isinstance(fid, str) or not fid:
            raise SchemaError(f"face id must be a nonempty string: {fid!r}")
        if not isinstance(dim, int) or dim < 0:
            raise SchemaError(f"face {fid}: dim must be a natural number")
        if fid in ids:
            raise SchemaError(f"duplicate face id {fid}")
        ids.add(fid)
        while len(grades) <= dim:
            grades.append([])
        grades[dim].append(fid)
        g, d = e.get("gamma"), e.get("delta", [])
        if dim == 0:
            if g is not None or d:
                raise SchemaError(f"dim-0 face {fid} must have gamma null and delta []")
        else:
            if not isinstance(g, str):
                raise SchemaError(f"face {fid}: gamma must be a face id")
            gamma[fid] = g
            delta[fid] = list(d)
    for fid, g in gamma.items():
        if g not in ids:
            raise SchemaError(f"face {fid}: gamma target {g!r} is not a declared face")
    for fid, ds in delta.items():
        for d in ds:
            if d not in ids:
                raise SchemaError(f"face {fid}: delta member {d!r} is not a declared face")
    if validate:
        return Hypergraph(name, grades, gamma, delta)
    return Hypergraph.raw(name, grades, gamma, delta)


def hypergraph_to_dict(H: Hypergraph) -> dict[str, Any]:
    faces = []
    for k, level in enumerate(H.grades):
        for x in level:
            faces.append(
                {
                    "id": x,
                    "dim": k,
                    "gamma": H.gamma.get(x),
                    "delta": sorted(H.delta.get(x, ())),
                }
            )
    return {"name": H.name, "faces": faces}


def load_hypergraph(path: str | Path, validate: bool = True) -> Hypergraph:
    with open(path) as f:
        return hypergraph_from_dict(json.load(f), validate=validate)


def save_hypergraph(H: Hypergraph, path: str | Path) -> None:
    with open(path, "w") as f:
        json.dump(hypergraph_to_dict(H), f, indent=2, sort_keys=False)
        f.write("\n")


def map_from_dict(doc: dict[str, Any]) -> tuple[str, str, dict[str, str]]:
    for key in ("source", "target", "assignment"):
        if key not in doc:
            raise SchemaError(f"map document missing '{key}'")
    if not isinstance(doc["assignment"], dict):
        raise SchemaError("'assignment' must be an object")
    return doc["source"], doc["target"], dict(doc["assignment"])


def map_to_dict(source: str, target: str, assignment: dict[str, str]) -> dict[str, Any]:
    return {
        "source": source,
        "target": target,
        "assignment": {k: assignment[k] for k in sorted(assignment)},
    }


def report_to_dict(report: AxiomReport) -> dict[str, Any]:
    return {
        "verdict": "pass" if report.ok else "fail",
        "violations": [
            {"check": v.check, "faces": list(v.faces), "message": v.message}
            for v in report.violations
        ],
    }
