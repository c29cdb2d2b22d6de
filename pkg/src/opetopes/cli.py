"""Command-line entry points.

Subcommands: validate | info | flags | next | dual | cyl | product | oracle.
Exit codes: 0 pass, 1 validation failure, 2 schema/input error, 3 internal
assertion (a structural identity the library guarantees was violated).
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Hypergraph, dual, is_opetope, is_opetopic_cardinal, size, validate_structure
from .cylinder import (
    build_cylinder,
    face_id,
    flag_opetope,
    parse_face_id,
    star,
    straightness_certificate,
)
from .flags import format_flag, maximal_flags, next_flag, parse_flag
from .io import (
    SchemaError,
    hypergraph_to_dict,
    load_hypergraph,
    map_from_dict,
    report_to_dict,
)
from .morphisms import IotaMap, identity_iota, onto_maps_to_interval
from .oracles import ORACLES, run_oracle
from .product import analyze_splitting, build_H, constant_rho, h_lemma_suite, verify_product

PASS, FAIL, SCHEMA, INTERNAL = 0, 1, 2, 3


def _emit(payload: dict, fmt: str, text: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text if text is not None else json.dumps(payload, indent=2, sort_keys=True))


def _load(path: str) -> Hypergraph:
    from .fixtures_catalog import FIXTURE_NAMES, load_fixture

    if path in FIXTURE_NAMES or path.endswith("^op"):
        return load_fixture(path)
    return load_hypergraph(path)


def _load_map(spec: str, source: Hypergraph) -> IotaMap:
    """A map argument: a JSON file, or one of the shorthands 'id', 'h_<edge>',
    'const-', 'const+'."""
    from .fixtures_catalog import load_fixture

    I = load_fixture("I")
    if spec == "id":
        return identity_iota(source)
    if spec in ("const-", "const+"):
        return constant_rho(source, I, spec[-1])
    if spec.startswith("h_"):
        for h in onto_maps_to_interval(source, I):
            if h.name == spec:
                return h
        raise SchemaError(f"no onto map named {spec!r} on {source.name}")
    with open(spec) as f:
        doc = json.load(f)
    src_name, target_name, assignment = map_from_dict(doc)
    if src_name != source.name:
        raise SchemaError(f"map source {src_name!r} does not match {source.name!r}")
    target = I if target_name == I.name else _load(target_name)
    return IotaMap(source, target, assignment, name=f"{src_name}->{target_name}")


def cmd_validate(args) -> int:
    P = _load(args.file)
    report = validate_structure(P)
    if report.ok:
        report = is_opetopic_cardinal(P)
    payload = report_to_dict(report)
    payload["size"] = list(size(P)) if report.ok else None
    payload["opetope"] = bool(report.ok and is_opetope(P))
    _emit(payload, args.format, f"{P.name}: {report.summary()}; opetope={payload['opetope']}")
    return PASS if report.ok and payload["opetope"] else FAIL


def cmd_info(args) -> int:
    P = _load(args.file)
    payload = {
        "name": P.name,
        "dim": P.dim,
        "faces_per_level": [len(P.faces(k)) for k in range(P.dim + 1)],
        "size": list(size(P)),
        "opetope": is_opetope(P),
        "top": P.top(),
    }
    _emit(payload, args.format, "\n".join(f"{k}: {v}" for k, v in payload.items()))
    return PASS


def cmd_flags(args) -> int:
    P = _load(args.file)
    flags = maximal_flags(P)
    payload = {"name": P.name, "count": len(flags), "flags": [format_flag(f) for f in flags]}
    _emit(payload, args.format, "\n".join(payload["flags"]))
    return PASS


def cmd_next(args) -> int:
    P = _load(args.file)
    f = parse_flag(args.flag)
    try:
        g = next_flag(P, f)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    _emit({"flag": format_flag(f), "next": format_flag(g)}, args.format, format_flag(g))
    return PASS


def cmd_dual(args) -> int:
    P = _load(args.file)
    _emit(hypergraph_to_dict(dual(P)), "json")
    return PASS


def cmd_cyl(args) -> int:
    P = _load(args.file)
    if args.action == "build":
        _emit(hypergraph_to_dict(build_cylinder(P)), "json")
        return PASS
    if args.action == "star":
        phi = parse_face_id(args.face)
        out = star(P, args.p, phi)
        _emit({"p": args.p, "face": args.face, "star": face_id(out)}, args.format, face_id(out))
        return PASS
    if args.action == "flag-opetope":
        sub = flag_opetope(P, parse_flag(args.flag))
        _emit(hypergraph_to_dict(sub), "json")
        return PASS
    if args.action == "straight":
        cert = straightness_certificate(P)
        payload = cert.to_dict()
        _emit(payload, args.format, f"{len(payload['steps'])} steps, covered={cert.covered}")
        return PASS if cert.covered else INTERNAL
    raise SchemaError(f"unknown cyl action {args.action!r}")


def cmd_product(args) -> int:
    Q = _load(args.q)
    rho = _load_map(args.rho, Q)
    h = _load_map(args.h, Q)
    if args.action == "analyze":
        analysis = analyze_splitting(rho, h)
        payload = {
            "splitting": {str(k): v for k, v in analysis.S.items()},
            "threshold": {str(k): v for k, v in analysis.T.items()},
            "splitting_witnesses": {str(k): v for k, v in analysis.A.items()},
            "threshold_witnesses": {str(k): v for k, v in analysis.B.items()},
            "report": report_to_dict(analysis.report),
        }
        _emit(payload, args.format)
        return PASS if analysis.report.ok else INTERNAL
    if args.action == "build-H":
        H = build_H(rho, h)
        payload = {
            "source": Q.name,
            "target": H.target.name,
            "assignment": {q: H.assignment[q] for q in sorted(H.assignment)},
            "cases": {q: H.cases[q] for q in sorted(H.cases)},
        }
        _emit(payload, "json")
        return PASS
    if args.action == "verify":
        verdict = verify_product(rho, h)
        lemmas = h_lemma_suite(rho, h)
        payload = verdict.to_dict()
        payload["lemmas"] = report_to_dict(lemmas)
        _emit(
            payload,
            args.format,
            f"unique={verdict.solutions == 1} solutions={verdict.solutions} "
            f"nodes={verdict.nodes} lemmas={lemmas.summary()}",
        )
        if not verdict.report.ok or not lemmas.ok:
            return INTERNAL
        return PASS
    raise SchemaError(f"unknown product action {args.action!r}")


def cmd_oracle(args) -> int:
    results = run_oracle(args.oracle, args.selector)
    payload = {"oracle": args.oracle, "results": [r.to_dict() for r in results]}
    text = "\n".join(
        f"{r.oracle} [{r.instance}]: {'pass' if r.ok else 'FAIL ' + r.detail}" for r in results
    )
    _emit(payload, args.format, text)
    return PASS if all(r.ok for r in results) else INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="opetopes", description=__doc__)
    parser.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the axioms of a hypergraph file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("info", help="dimensions, counts, and size of a hypergraph")
    p.add_argument("file")
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("flags", help="maximal flags in flag order")
    p.add_argument("file")
    p.add_argument("--max", action="store_true", help="list maximal flags (default)")
    p.set_defaults(fn=cmd_flags)

    p = sub.add_parser("next", help="successor of a flag")
    p.add_argument("file")
    p.add_argument("flag", help='flag literal, e.g. "[m,a02,v2]"')
    p.set_defaults(fn=cmd_next)

    p = sub.add_parser("dual", help="emit the dual hypergraph as JSON")
    p.add_argument("file")
    p.set_defaults(fn=cmd_dual)

    p = sub.add_parser("cyl", help="cylinder operations")
    p.add_argument("action", choices=("build", "star", "flag-opetope", "straight"))
    p.add_argument("file")
    p.add_argument("--p", help="base face for star")
    p.add_argument("--face", help='cylinder face id, e.g. "flag:[m,a02,v2]"')
    p.add_argument("--flag", help="flag literal for flag-opetope")
    p.set_defaults(fn=cmd_cyl)

    p = sub.add_parser("product", help="splitting analysis and the universal map")
    p.add_argument("action", choices=("analyze", "build-H", "verify"))
    p.add_argument("q", help="hypergraph file or fixture name")
    p.add_argument("rho", help="map file or shorthand (h_<edge>, const-, const+)")
    p.add_argument("h", help="map file or shorthand (id, h_<edge>)")
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("oracle", help="run a named brute-force suite")
    p.add_argument("oracle", choices=sorted(ORACLES))
    p.add_argument("selector", help="fixture name, 'all', or a hypergraph file")
    p.set_defaults(fn=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (SchemaError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return SCHEMA
    except ValueError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return FAIL
    except AssertionError as exc:  # pragma: no cover - library invariant broken
        print(f"internal assertion: {exc}", file=sys.stderr)
        return INTERNAL


if __name__ == "__main__":
    sys.exit(main())
