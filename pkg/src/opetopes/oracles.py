"""Named brute-force oracle suites over the bundled fixtures.

Each oracle is keyed by the behavior it checks and maps a hypergraph to a
list of OracleResult records.  The mutation harness produces corrupted
fixture documents that must each fail validation with a named check.
"""

from __future__ import annotations

import copy
import itertools
from dataclasses import dataclass

from .core import (
    AxiomReport,
    Hypergraph,
    generated_sub,
    is_opetope,
    is_opetopic_cardinal,
    size,
    validate_structure,
)
from .cylinder import (
    dual_star_suite,
    flag_opetope,
    flat_star_suite,
    intersect_flag_opetopes,
    iteration_suite,
    monotone_overlap_suite,
    monotone_star_suite,
    star_projection_suite,
    straightness_certificate,
    unique_projection_check,
)
from .flags import (
    dual_flag_suite,
    enumerate_flags,
    initial_flag,
    maximal_flags,
    successor_chain,
    terminal_flag,
)
from .io import SchemaError, hypergraph_from_dict, hypergraph_to_dict
from .morphisms import (
    IotaMap,
    fiber_interval_check,
    identity_iota,
    iota_preservation_suite,
    kernel,
    onto_maps_to_interval,
    restrict_iota,
)
from .omega import Cell, cell_codomain, cell_compose, cell_domain, cell_from_faces, cell_identity, map_image_cell
from .product import (
    analyze_splitting,
    constant_rho,
    cyl_structure_unique,
    h_lemma_suite,
    kernel_of_H_invariant,
    verify_product,
)


@dataclass(frozen=True)
class OracleResult:
    oracle: str
    instance: str
    ok: bool
    detail: str

    def to_dict(self) -> dict:
        return {"oracle": self.oracle, "instance": self.instance, "ok": self.ok, "detail": self.detail}


def _from_report(oracle: str, instance: str, report: AxiomReport) -> OracleResult:
    return OracleResult(oracle, instance, report.ok, report.summary())


def _interval() -> Hypergraph:
    from .fixtures_catalog import load_fixture

    return load_fixture("I")


# -- catalogs -------------------------------------------------------------------


def map_catalog(P: Hypergraph) -> list[IotaMap]:
    """Identity, every onto map to the interval, the two constant maps, and
    the restriction of each to every generated subobject."""
    I = _interval()
    maps = [identity_iota(P)]
    if P.dim >= 1:
        maps += onto_maps_to_interval(P, I)
        maps += [constant_rho(P, I, "-"), constant_rho(P, I, "+")]
    out = list(maps)
    for h in maps:
        for q in sorted(P.all_faces()):
            if generated_sub(P, q).face_set() != P.face_set():
                out.append(restrict_iota(h, q))
    return out


def product_pair_catalog(Q: Hypergraph) -> list[tuple[IotaMap, IotaMap]]:
    """All (rho, h) pairs used by the product oracle: rho over the onto maps
    to the interval and both constants, h over the identity and the onto maps."""
    I = _interval()
    if Q.dim < 1:
        return []
    rhos = onto_maps_to_interval(Q, I) + [constant_rho(Q, I, "-"), constant_rho(Q, I, "+")]
    hs = [identity_iota(Q)] + onto_maps_to_interval(Q, I)
    return [(rho, h) for rho in rhos for h in hs]


# -- fixture-level suites ---------------------------------------------------------


def flag_successor_suite(P: Hypergraph) -> AxiomReport:
    """Walking the successor from the first flag visits exactly the sorted
    flag enumeration."""
    report = AxiomReport()
    chain = successor_chain(P)
    listed = maximal_flags(P)
    if chain != listed:
        report.add("successor-chain", (), f"chain {chain} != sorted enumeration {listed}")
    if chain and chain[0] != initial_flag(P):
        report.add("initial", (), "chain does not start at the initial flag")
    if chain and chain[-1] != terminal_flag(P):
        report.add("terminal", (), "chain does not end at the terminal flag")
    return report


def flag_endpoint_suite(P: Hypergraph) -> AxiomReport:
    """The case formulas for first/last flags match the extremes of the full
    enumeration, for every top face and every face under it."""
    report = AxiomReport()
    for top in P.all_faces():
        flags = enumerate_flags(P, top, 0)
        if flags:
            if initial_flag(P, top) != flags[0]:
                report.add("initial-formula", (top,), f"{initial_flag(P, top)} != {flags[0]}")
            if terminal_flag(P, top) != flags[-1]:
                report.add("terminal-formula", (top,), f"{terminal_flag(P, top)} != {flags[-1]}")
        for over in sorted(generated_sub(P, top).face_set() - {top}):
            sub = enumerate_flags(P, top, P.dim_of[over], over)
            if not sub:
                continue
            if initial_flag(P, top, over) != sub[0]:
                report.add("initial-over", (top, over), f"{initial_flag(P, top, over)} != {sub[0]}")
            if terminal_flag(P, top, over) != sub[-1]:
                report.add("terminal-over", (top, over), f"{terminal_flag(P, top, over)} != {sub[-1]}")
    return report


def flag_opetope_suite(P: Hypergraph) -> AxiomReport:
    """Every maximal flag spans a sub-hypergraph of the cylinder that is an
    opetope of the expected census, with a unique projection."""
    report = AxiomReport()
    for f in maximal_flags(P):
        try:
            sub = flag_opetope(P, f)
        except ValueError as exc:
            report.add("census", f, str(exc))
            continue
        if not is_opetope(sub):
            report.add("opetope", f, is_opetopic_cardinal(sub).summary())
        if any(s > 1 for s in size(sub)):
            report.add("size", f, f"size {size(sub)} has an entry above 1")
        report.extend(unique_projection_check(P, f))
    return report


def flag_intersection_suite(P: Hypergraph) -> AxiomReport:
    """Consecutive flag opetopes intersect in the punctured-flag opetope of
    their flag intersection."""
    report = AxiomReport()
    flags = maximal_flags(P)
    for f, g in zip(flags, flags[1:]):
        try:
            intersect_flag_opetopes(P, f, g)
        except ValueError as exc:
            report.add("intersection", tuple(map(str, (f, g))), str(exc))
    return report


def straightness_suite(P: Hypergraph) -> AxiomReport:
    report = AxiomReport()
    cert = straightness_certificate(P)
    if not cert.covered:
        report.add("coverage", (), "flag opetopes do not cover the cylinder")
    return report


def iota_suite(P: Hypergraph) -> list[OracleResult]:
    """Order preservation, interval fibers, double collapse, and the embedding
    identities for every map in the catalog."""
    out = []
    for h in map_catalog(P):
        report = AxiomReport()
        report.extend(iota_preservation_suite(h))
        for p in sorted(h.target.all_faces()):
            if not fiber_interval_check(h, p):
                report.add("fiber-interval", (p,), "non-kernel fiber is not an interval")
        Q, T = h.source, h.target
        for q in Q.all_faces():
            k = Q.dim_of[q]
            if k >= 2 and T.dim_of[h(q)] == k - 2:
                for d in Q.delta[q]:
                    if T.dim_of[h(d)] == k - 2 and h(d) != h(Q.gamma[q]):
                        report.add("double-collapse", (q, d), "image differs from the gamma image")
            # the image of a generated subobject is the subobject generated
            # by the image
            img = h.image(generated_sub(Q, q).face_set())
            if img != generated_sub(T, h(q)).face_set():
                report.add("embedding-subobject", (q,), "h(Q[q]) != T[h(q)]")
        # commutation with cell boundaries
        for q in Q.all_faces():
            c = cell_from_faces(Q, [q])
            hc = map_image_cell(h, c)
            for k in range(c.level):
                if map_image_cell(h, cell_domain(c, k)) != cell_domain(hc, k):
                    report.add("embedding-domain", (q, str(k)), "image of domain != domain of image")
                if map_image_cell(h, cell_codomain(c, k)) != cell_codomain(hc, k):
                    report.add("embedding-codomain", (q, str(k)), "image of codomain != codomain of image")
        out.append(_from_report("iota", h.name or "map", report))
    return out


def _closed_cells(P: Hypergraph) -> list[Cell]:
    """All gamma/delta-closed subsets of P that carry an opetopic cardinal,
    as proper cells."""
    faces = sorted(P.all_faces())
    cells = []
    seen = set()
    for r in range(1, len(faces) + 1):
        for combo in itertools.combinations(faces, r):
            s = set(combo)
            if any(
                P.dim_of[x] > 0 and not (P.delta[x] | {P.gamma[x]}) <= s for x in s
            ):
                continue
            key = frozenset(s)
            if key in seen:
                continue
            seen.add(key)
            try:
                cells.append(Cell(P, key, max(P.dim_of[x] for x in s)))
            except ValueError:
                continue
    return cells


def omega_law_suite(P: Hypergraph) -> AxiomReport:
    """Globularity of iterated boundaries, identity boundaries, and the
    composition laws over all subcardinal cells."""
    report = AxiomReport()
    cells = _closed_cells(P)
    for c in cells:
        for l in range(c.level):
            dl, cl = cell_domain(c, l), cell_codomain(c, l)
            for k in range(l):
                if cell_domain(dl, k) != cell_domain(c, k):
                    report.add("globular-dd", (str(k), str(l)), f"{c}")
                if cell_codomain(cl, k) != cell_codomain(c, k):
                    report.add("globular-cc", (str(k), str(l)), f"{c}")
                if cell_domain(cl, k) != cell_domain(c, k):
                    report.add("globular-dc", (str(k), str(l)), f"{c}")
                if cell_codomain(dl, k) != cell_codomain(c, k):
                    report.add("globular-cd", (str(k), str(l)), f"{c}")
        ident = cell_identity(c)
        if cell_domain(ident, c.level) != c or cell_codomain(ident, c.level) != c:
            report.add("identity-boundary", (), f"{c}")
    generators = [cell_from_faces(P, [q]) for q in sorted(P.all_faces())]
    generators.append(cell_from_faces(P, P.all_faces()))
    for c1 in generators:
        for c2 in generators:
            for k in range(min(c1.level, c2.level)):
                try:
                    if cell_domain(c1, k) != cell_codomain(c2, k):
                        continue
                except ValueError:
                    continue
                comp = cell_compose(c1, c2, k)
                if cell_domain(comp, k) != cell_domain(c2, k):
                    report.add("compose-domain", (str(k),), f"{c1} o {c2}")
                if cell_codomain(comp, k) != cell_codomain(c1, k):
                    report.add("compose-codomain", (str(k),), f"{c1} o {c2}")
    return report


def omega_map_suite(P: Hypergraph) -> AxiomReport:
    """Contraction maps commute with cell boundaries over all subcardinal
    cells."""
    report = AxiomReport()
    cells = _closed_cells(P)
    for h in map_catalog(P):
        if h.source.face_set() != P.face_set():
            continue
        for c in cells:
            hc = map_image_cell(h, c)
            for k in range(c.level):
                if map_image_cell(h, cell_domain(c, k)) != cell_domain(hc, k):
                    report.add("map-domain", (h.name, str(k)), f"{c}")
                if map_image_cell(h, cell_codomain(c, k)) != cell_codomain(hc, k):
                    report.add("map-codomain", (h.name, str(k)), f"{c}")
    return report


def product_suite(Q: Hypergraph) -> list[OracleResult]:
    """The universal-map theorem over every pair in the catalog: H validates,
    both projections hold, the solution is unique, and every companion lemma
    passes."""
    out = []
    for rho, h in product_pair_catalog(Q):
        tag = f"rho={rho.name},h={h.name}"
        verdict = verify_product(rho, h)
        report = AxiomReport()
        report.extend(verdict.report)
        report.extend(h_lemma_suite(rho, h))
        report.extend(kernel_of_H_invariant(rho, h))
        report.extend(analyze_splitting(rho, h).report)
        ok = report.ok and verdict.solutions == 1
        out.append(OracleResult("product", tag, ok, report.summary()))
    return out


# -- mutation harness -------------------------------------------------------------


def mutations(P: Hypergraph, count: int = 20) -> list[tuple[str, dict]]:
    """Deterministic stream of corrupted fixture documents.  Each must fail
    loading or validation with a named check."""
    base = hypergraph_to_dict(P)
    out: list[tuple[str, dict]] = []

    def emit(label: str, doc: dict) -> None:
        # only corruptions that actually break an axiom count (a flip can
        # accidentally produce a relabelled valid opetope)
        if len(out) < count and mutation_failure(doc) is not None:
            out.append((label, doc))

    entries = base["faces"]
    by_dim: dict[int, list[str]] = {}
    for e in entries:
        by_dim.setdefault(e["dim"], []).append(e["id"])

    def variant(mutate) -> dict:
        doc = copy.deepcopy(base)
        mutate(doc)
        return doc

    for i, e in enumerate(entries):
        if e["dim"] == 0:
            continue
        for r in by_dim.get(e["dim"] - 1, []):
            if r != e["gamma"]:
                emit(
                    f"flip-gamma:{e['id']}->{r}",
                    variant(lambda d, i=i, r=r: d["faces"][i].__setitem__("gamma", r)),
                )
        for j, dd in enumerate(e["delta"]):
            emit(
                f"drop-delta:{e['id']}-{dd}",
                variant(lambda d, i=i, j=j: d["faces"][i]["delta"].pop(j)),
            )
        for dd in e["delta"]:
            emit(
                f"swap-gamma-delta:{e['id']}:{dd}",
                variant(
                    lambda d, i=i, dd=dd: (
                        d["faces"][i].__setitem__(
                            "delta",
                            sorted(set(d["faces"][i]["delta"]) - {dd} | {d["faces"][i]["gamma"]}),
                        ),
                        d["faces"][i].__setitem__("gamma", dd),
                    )
                ),
            )
        emit(
            f"gamma-into-delta:{e['id']}",
            variant(
                lambda d, i=i: d["faces"][i].__setitem__(
                    "delta", sorted(set(d["faces"][i]["delta"]) | {d["faces"][i]["gamma"]})
                )
            ),
        )
        emit(
            f"dangling-gamma:{e['id']}",
            variant(lambda d, i=i: d["faces"][i].__setitem__("gamma", "ghost")),
        )
        emit(
            f"dangling-delta:{e['id']}",
            variant(lambda d, i=i: d["faces"][i].__setitem__("delta", ["ghost"])),
        )
        emit(
            f"self-gamma:{e['id']}",
            variant(lambda d, i=i: d["faces"][i].__setitem__("gamma", d["faces"][i]["id"])),
        )
    # structural corruptions, enough to cover dimension-0 fixtures
    for i, e in enumerate(entries):
        emit(
            f"duplicate-id:{e['id']}",
            variant(lambda d, i=i: d["faces"].append(dict(d["faces"][i]))),
        )
    for n in range(count):
        emit(
            f"dim-skip:{n}",
            variant(
                lambda d, n=n: d["faces"].append(
                    {"id": f"ghost{n}", "dim": max(by_dim) + 2 + n, "gamma": entries[0]["id"], "delta": [entries[0]["id"]]}
                )
            ),
        )
        emit(
            f"dangling-new-edge:{n}",
            variant(
                lambda d, n=n: d["faces"].append(
                    {"id": f"edge{n}", "dim": 1, "gamma": f"nowhere{n}", "delta": []}
                )
            ),
        )
        emit(
            f"vertex-with-gamma:{n}",
            variant(
                lambda d, n=n: d["faces"].append(
                    {"id": f"pt{n}", "dim": 0, "gamma": entries[0]["id"], "delta": []}
                )
            ),
        )
    return out[:count]


def mutation_failure(doc: dict) -> str | None:
    """Name of the first check the corrupted document fails, or None if it
    still validates as an opetope."""
    try:
        H = hypergraph_from_dict(doc, validate=False)
    except SchemaError as exc:
        return f"schema: {exc}"
    report = validate_structure(H)
    if not report.ok:
        return report.violations[0].check
    report = is_opetopic_cardinal(H)
    if not report.ok:
        return report.violations[0].check
    if any(s > 1 for s in size(H)):
        return "size"
    return None


# -- registry ----------------------------------------------------------------------


def _single(name, fn):
    def run(P: Hypergraph) -> list[OracleResult]:
        return [_from_report(name, P.name, fn(P))]

    return run


def _opetope_oracle(P: Hypergraph) -> list[OracleResult]:
    report = validate_structure(P)
    if report.ok:
        report = is_opetopic_cardinal(P)
    if report.ok and any(s > 1 for s in size(P)):
        report.add("size", (), f"size {size(P)} has an entry above 1")
    return [_from_report("opetope", P.name, report)]


ORACLES = {
    "structure": _single("structure", validate_structure),
    "cardinal": _single("cardinal", is_opetopic_cardinal),
    "opetope": _opetope_oracle,
    "flag-successor": _single("flag-successor", flag_successor_suite),
    "flag-endpoints": _single("flag-endpoints", flag_endpoint_suite),
    "dual-flags": _single("dual-flags", dual_flag_suite),
    "flag-opetopes": _single("flag-opetopes", flag_opetope_suite),
    "flag-intersections": _single("flag-intersections", flag_intersection_suite),
    "straightness": _single("straightness", straightness_suite),
    "cyl-boundary-unique": _single("cyl-boundary-unique", cyl_structure_unique),
    "star-projection": _single("star-projection", star_projection_suite),
    "flat-star": _single("flat-star", flat_star_suite),
    "star-iteration": _single("star-iteration", iteration_suite),
    "star-monotone": _single("star-monotone", monotone_star_suite),
    "dual-star": _single("dual-star", dual_star_suite),
    "star-overlap": _single("star-overlap", monotone_overlap_suite),
    "iota": iota_suite,
    "omega-laws": _single("omega-laws", omega_law_suite),
    "omega-maps": _single("omega-maps", omega_map_suite),
    "product": product_suite,
}


def run_oracle(oracle_id: str, selector: str) -> list[OracleResult]:
    """Run the named oracle against a fixture name ('all' for every bundled
    fixture) or a hypergraph JSON file path."""
    from .fixtures_catalog import FIXTURE_NAMES, load_fixture
    from .io import load_hypergraph

    if oracle_id not in ORACLES:
        raise KeyError(f"unknown oracle {oracle_id!r}; have {sorted(ORACLES)}")
    if selector == "all":
        targets = [load_fixture(n) for n in FIXTURE_NAMES]
    elif selector in FIXTURE_NAMES or selector.endswith("^op"):
        targets = [load_fixture(selector)]
    else:
        targets = [load_hypergraph(selector)]
    out: list[OracleResult] = []
    for P in targets:
        out.extend(ORACLES[oracle_id](P))
    return out
