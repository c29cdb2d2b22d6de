"""The cylinder complex over a positive opetope.

Faces come in three kinds: flat faces (signed copies of the base faces),
flags (descending chains to level 0), and punctured flags.  The star
operation lifts a base face against a (punctured) flag; gamma and delta on
the cylinder are defined through it.  The complex decomposes as a chain of
flag opetopes glued along p-flag opetopes, recorded by a straightness
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .core import (
    AxiomReport,
    Hypergraph,
    boundary,
    dual,
    generated_sub,
    is_opetope,
    iterated_codomain,
    le_plus,
    lt_plus,
    occurrence_set,
)
from .flags import (
    DUMMY,
    Entries,
    Flat,
    entry_at,
    enumerate_flags,
    flag_high,
    flag_low,
    format_flag,
    initial_flag,
    intersect_consecutive,
    is_pflag,
    maximal_flags,
    maximal_pflags,
    next_flag,
    parse_flag,
    pflag_order,
    puncture_level,
    sign,
    terminal_flag,
    truncate,
    _gamma_chain,
)
from .morphisms import FaceMap

CylFace = Flat | Entries


# -- face identity and serialization -----------------------------------------


def cyl_dim(P: Hypergraph, phi: CylFace) -> int:
    if isinstance(phi, Flat):
        return P.dim_of[phi.base]
    return sum(1 for e in phi if e != DUMMY)


def project(phi: CylFace) -> str:
    """The base face a cylinder face sits over."""
    return phi.base if isinstance(phi, Flat) else phi[0]


def face_id(phi: CylFace) -> str:
    if isinstance(phi, Flat):
        return f"flat:{phi.sign}:{phi.base}"
    tag = "pflag" if DUMMY in phi else "flag"
    return f"{tag}:{format_flag(phi)}"


def parse_face_id(text: str) -> CylFace:
    tag, _, rest = text.partition(":")
    if tag == "flat":
        s, _, base = rest.partition(":")
        if s not in "-+" or not base:
            raise ValueError(f"bad flat face id {text!r}")
        return Flat(s, base)
    if tag in ("flag", "pflag"):
        return parse_flag(rest)
    raise ValueError(f"bad cylinder face id {text!r}")


# -- the star operation -------------------------------------------------------


def _t_above(P: Hypergraph, x: str, candidates: Iterable[str]) -> str | None:
    found = [t for t in candidates if le_plus(P, x, t)]
    if len(found) > 1:
        raise ValueError(f"several domain faces above {x}: {found}")
    return found[0] if found else None


def star_flag_case(P: Hypergraph, p: str, f: Entries) -> tuple[CylFace, str]:
    """Lift of p against a flag, with the name of the clause that fired."""
    top = P.dim_of[f[0]]
    k = P.dim_of[p]
    if entry_at(f, k, top) == p:
        return truncate(P, f, k), "flag"
    if k >= 1:
        if lt_plus(P, entry_at(f, k, top), p):
            return (p, DUMMY) + f[top - k + 2 :], "high-pflag"
        for lp in range(k - 2, -1, -1):
            t = _t_above(P, entry_at(f, lp + 1, top), P.delta[iterated_codomain(P, p, lp + 2)])
            if t is not None:
                chain = tuple(_gamma_chain(P, p, lp + 2))
                return chain + (t, DUMMY) + f[top - lp + 1 :], "low-pflag"
    g0 = iterated_codomain(P, p, 0)
    if le_plus(P, g0, f[-1]):
        return Flat("-", p), "bottom-flat"
    if lt_plus(P, f[-1], g0):
        return Flat("+", p), "top-flat"
    raise ValueError(f"no star clause fires for {p} against {format_flag(f)}")


def star_pflag_case(P: Hypergraph, p: str, z: Entries) -> tuple[CylFace, str]:
    """Lift of p against a punctured flag, with the clause that fired.

    Each punctured clause admits a degenerate instance in which the witness
    face above the new puncture is p itself (its codomain chain is empty);
    these instances are required for the faces on the codomain chain of the
    top face that are not entries of the p-flag.
    """
    top = P.dim_of[z[0]]
    i = puncture_level(P, z)
    k = P.dim_of[p]
    if k != i and entry_at(z, k, top) == p:
        return z[top - k :], "truncate"
    if k > i:
        if k == i + 1:
            if le_plus(P, entry_at(z, i + 1, top), p):
                return (p, DUMMY) + z[top - i + 1 :], "same-puncture"
        else:
            t = _t_above(P, entry_at(z, i + 1, top), P.delta[iterated_codomain(P, p, i + 2)])
            if t is not None:
                chain = tuple(_gamma_chain(P, p, i + 2))
                return chain + (t, DUMMY) + z[top - i + 1 :], "same-puncture"
    if k >= i > 0:
        gx = P.gamma[entry_at(z, i + 1, top)]
        if k == i:
            if le_plus(P, gx, p):
                return (p, DUMMY) + z[top - i + 2 :], "puncture-down-one"
        else:
            t = _t_above(P, gx, P.delta[iterated_codomain(P, p, i + 1)])
            if t is not None:
                chain = tuple(_gamma_chain(P, p, i + 1))
                return chain + (t, DUMMY) + z[top - i + 2 :], "puncture-down-one"
    for lp in range(min(i - 2, k - 1), -1, -1):
        if lp == k - 1:
            if le_plus(P, entry_at(z, lp + 1, top), p):
                return (p, DUMMY) + z[top - lp + 1 :], "puncture-below"
        else:
            t = _t_above(P, entry_at(z, lp + 1, top), P.delta[iterated_codomain(P, p, lp + 2)])
            if t is not None:
                chain = tuple(_gamma_chain(P, p, lp + 2))
                return chain + (t, DUMMY) + z[top - lp + 1 :], "puncture-below"
    g0 = iterated_codomain(P, p, 0)
    if i > 0:
        if le_plus(P, g0, z[-1]):
            return Flat("-", p), "bottom-flat"
        if lt_plus(P, z[-1], g0):
            return Flat("+", p), "top-flat"
    else:
        gx1 = P.gamma[z[-2]]
        if lt_plus(P, g0, gx1):
            return Flat("-", p), "bottom-flat"
        if le_plus(P, gx1, g0):
            return Flat("+", p), "top-flat"
    raise ValueError(f"no star clause fires for {p} against {format_flag(z)}")


def star_case(P: Hypergraph, p: str, phi: CylFace) -> tuple[CylFace, str]:
    if isinstance(phi, Flat):
        return Flat(phi.sign, p), "flat"
    if is_pflag(phi):
        return star_pflag_case(P, p, phi)
    return star_flag_case(P, p, phi)


def star(P: Hypergraph, p: str, phi: CylFace) -> CylFace:
    return star_case(P, p, phi)[0]


def star_flag(P: Hypergraph, p: str, f: Entries) -> CylFace:
    return star_flag_case(P, p, f)[0]


def star_pflag(P: Hypergraph, p: str, z: Entries) -> CylFace:
    return star_pflag_case(P, p, z)[0]


def star_flat(P: Hypergraph, p: str, phi: Flat) -> Flat:
    return Flat(phi.sign, p)


# -- high / low punctures with flat sentinels ---------------------------------


def cyl_high(P: Hypergraph, f: Entries) -> CylFace:
    """Puncture below the top; a single-entry flag falls onto +x_0."""
    if len(f) == 1:
        return Flat("+", f[0])
    return flag_high(P, f)


def cyl_low(P: Hypergraph, f: Entries) -> CylFace:
    """Puncture at the low level, or the flat sentinel off either end."""
    if len(f) == 1:
        return Flat("-", f[0])
    return flag_low(P, f)


def _star_variant(P: Hypergraph, p: str, f: Entries, side) -> CylFace:
    top = P.dim_of[f[0]]
    k = P.dim_of[p]
    if k <= top and entry_at(f, k, top) == p:
        trunc = f[top - k :]
        # a truncation that kept the puncture is already a p-flag over p
        return trunc if DUMMY in trunc else side(P, trunc)
    return star(P, p, f)


def star_low(P: Hypergraph, p: str, f: Entries) -> CylFace:
    """As star, except the flag's own entry falls to the low puncture."""
    return _star_variant(P, p, f, cyl_low)


def star_high(P: Hypergraph, p: str, f: Entries) -> CylFace:
    """As star, except the flag's own entry falls to the high puncture."""
    return _star_variant(P, p, f, cyl_high)


# -- gamma and delta on cylinder faces ----------------------------------------


def cyl_gamma(P: Hypergraph, phi: CylFace) -> CylFace:
    if isinstance(phi, Flat):
        return Flat(phi.sign, P.gamma[phi.base])
    if DUMMY not in phi:
        return cyl_high(P, phi)
    m = P.dim_of[phi[0]]
    if m == 1:
        return Flat("+", P.gamma[phi[0]])
    if puncture_level(P, phi) >= m - 2:
        return (P.gamma[phi[0]], DUMMY) + phi[3:]
    return phi[1:]


def cyl_delta(P: Hypergraph, phi: CylFace) -> frozenset[CylFace]:
    if isinstance(phi, Flat):
        return frozenset(Flat(phi.sign, q) for q in P.delta[phi.base])
    if DUMMY not in phi:
        if len(phi) == 1:
            return frozenset({Flat("-", phi[0])})
        return frozenset({phi[1:], cyl_low(P, phi)})
    m = P.dim_of[phi[0]]
    out = {star(P, p, phi) for p in P.delta[phi[0]]}
    if m >= 2 and puncture_level(P, phi) == m - 1:
        out.add(phi[2:])
    return frozenset(out)


# -- the cylinder complex -------------------------------------------------------


def _descending_chains(P: Hypergraph, x: str) -> list[Entries]:
    out: list[Entries] = []
    stack: list[Entries] = [(x,)]
    while stack:
        c = stack.pop()
        if P.dim_of[c[-1]] == 0:
            out.append(c)
        else:
            stack.extend(c + (b,) for b in boundary(P, c[-1]))
    return out


def enumerate_cyl_faces(P: Hypergraph) -> list[CylFace]:
    """Flat faces, all flags of all faces, and all p-flags of all faces.

    A p-flag is a flag punctured just below its top, or punctured at its low
    level; an arbitrary puncture position does not give a face (it would not
    occur in any maximal-flag face).
    """
    faces: set[CylFace] = set()
    for p in P.all_faces():
        faces.add(Flat("-", p))
        faces.add(Flat("+", p))
    for x in P.all_faces():
        faces.update(_descending_chains(P, x))
        if P.dim_of[x] >= 1:
            faces.update(maximal_pflags(P, x))
    return sorted(faces, key=lambda f: (cyl_dim(P, f), face_id(f)))


@lru_cache(maxsize=None)
def build_cylinder(P: Hypergraph) -> Hypergraph:
    if not is_opetope(P):
        raise ValueError(f"{P.name} is not a positive opetope")
    cells = enumerate_cyl_faces(P)
    by_dim: list[list[str]] = [[] for _ in range(P.dim + 2)]
    gamma: dict[str, str] = {}
    delta: dict[str, frozenset[str]] = {}
    for phi in cells:
        d = cyl_dim(P, phi)
        by_dim[d].append(face_id(phi))
        if d > 0:
            gamma[face_id(phi)] = face_id(cyl_gamma(P, phi))
            delta[face_id(phi)] = frozenset(face_id(q) for q in cyl_delta(P, phi))
    return Hypergraph(f"Cyl({P.name})", by_dim, gamma, delta)


# -- flag and p-flag opetopes ---------------------------------------------------


def flag_opetope_census(P: Hypergraph, f: Entries) -> dict[int, frozenset[str]]:
    """Per-level face ids of the flag opetope, from the explicit formulas."""
    n = P.dim_of[f[0]]
    census: dict[int, set[str]] = {n + 1: {face_id(f)}}
    for l in range(1, n + 1):
        xl = entry_at(f, l, n)
        level = {face_id(star_flag(P, p, f)) for p in P.faces(l) if p != xl}
        trunc = truncate(P, f, l)
        level |= {
            face_id(cyl_low(P, trunc)),
            face_id(cyl_high(P, trunc)),
            face_id(truncate(P, f, l - 1)),
        }
        census[l] = level
    x0 = f[-1]
    census[0] = {face_id(Flat("-", p)) for p in P.faces(0) if le_plus(P, p, x0)} | {
        face_id(Flat("+", p)) for p in P.faces(0) if le_plus(P, x0, p)
    }
    return {l: frozenset(v) for l, v in census.items()}


def pflag_opetope_census(P: Hypergraph, z: Entries) -> dict[int, frozenset[str]]:
    n = P.dim_of[z[0]]
    k = puncture_level(P, z)
    census: dict[int, set[str]] = {n: {face_id(z)}}
    for l in range(k, n):
        level = {face_id(star_pflag(P, p, z)) for p in P.faces(l)}
        if l == k > 0:
            level.add(face_id(z[n - (k - 1) :]))
        census[l] = level
    for l in range(0, k):
        xl = entry_at(z, l, n)
        level = {face_id(star_pflag(P, p, z)) for p in P.faces(l) if p != xl}
        trunc = z[n - l :]
        level |= {face_id(cyl_low(P, trunc)), face_id(cyl_high(P, trunc))}
        if l > 0:
            level.add(face_id(z[n - (l - 1) :]))
        census[l] = level
    return {l: frozenset(v) for l, v in census.items()}


def _extract(P: Hypergraph, phi: CylFace, census: dict[int, frozenset[str]]) -> Hypergraph:
    C = build_cylinder(P)
    sub = generated_sub(C, face_id(phi), name=f"{P.name}^{format_flag(phi)}")
    expected = {x for level in census.values() for x in level}
    if sub.face_set() != expected:
        raise ValueError(
            f"closure of {format_flag(phi)} disagrees with the face formula: "
            f"closure-only={sorted(sub.face_set() - expected)}, "
            f"formula-only={sorted(expected - sub.face_set())}"
        )
    return sub


def flag_opetope(P: Hypergraph, f: Entries) -> Hypergraph:
    if f[0] != P.top() or P.dim_of[f[-1]] != 0:
        raise ValueError("flag opetopes are taken over maximal flags")
    return _extract(P, f, flag_opetope_census(P, f))


def pflag_opetope(P: Hypergraph, z: Entries) -> Hypergraph:
    if z[0] != P.top() or not is_pflag(z):
        raise ValueError("p-flag opetopes are taken over maximal punctured flags")
    return _extract(P, z, pflag_opetope_census(P, z))


def unique_projection_check(P: Hypergraph, f: Entries) -> AxiomReport:
    """Every base face off the flag has exactly one lift, namely its star."""
    report = AxiomReport()
    sub = flag_opetope(P, f)
    fibers: dict[str, list[str]] = {}
    for x in sub.all_faces():
        fibers.setdefault(project(parse_face_id(x)), []).append(x)
    for p in P.all_faces():
        if p in f:
            continue
        lifts = fibers.get(p, [])
        if len(lifts) != 1:
            report.add("unique-projection", (p,), f"{len(lifts)} lifts: {sorted(lifts)}")
        elif lifts[0] != face_id(star_flag(P, p, f)):
            report.add("unique-projection", (p,), "lift differs from the star value")
    return report


# -- intersections and straightness ---------------------------------------------


def intersect_flag_opetopes(P: Hypergraph, f: Entries, g: Entries) -> Hypergraph:
    if next_flag(P, f) != g:
        raise ValueError("flags are not consecutive")
    C = build_cylinder(P)
    common = flag_opetope(P, f).face_set() & flag_opetope(P, g).face_set()
    z = intersect_consecutive(P, f, g)
    if common != pflag_opetope(P, z).face_set():
        raise ValueError(
            f"intersection of {format_flag(f)} and {format_flag(g)} "
            f"is not the p-flag opetope of {format_flag(z)}"
        )
    return C.restrict(common, name=f"{P.name}^{format_flag(z)}")


@dataclass(frozen=True)
class StraightnessCertificate:
    """A chain decomposition of the cylinder into flag opetopes: consecutive
    pieces meet in the p-flag opetope of the flags' intersection, each new
    piece meets the accumulated union in exactly that intersection, and the
    final union is the whole complex."""

    complex_name: str
    flags: tuple[Entries, ...]
    step_faces: tuple[frozenset[str], ...]
    intersections: tuple[Entries, ...]
    intersection_faces: tuple[frozenset[str], ...]
    covered: bool
    total_faces: int

    def to_dict(self) -> dict:
        return {
            "complex": self.complex_name,
            "steps": [
                {"flag": format_flag(f), "faces": len(fs)}
                for f, fs in zip(self.flags, self.step_faces)
            ],
            "intersections": [
                {"pflag": format_flag(z), "faces": len(fs)}
                for z, fs in zip(self.intersections, self.intersection_faces)
            ],
            "covered": self.covered,
            "total_faces": self.total_faces,
        }


def straightness_certificate(P: Hypergraph) -> StraightnessCertificate:
    C = build_cylinder(P)
    chain = maximal_flags(P)
    steps = [flag_opetope(P, f).face_set() for f in chain]
    seen: set[str] = set(steps[0])
    intersections: list[Entries] = []
    inter_faces: list[frozenset[str]] = []
    for prev, cur, faces in zip(chain, chain[1:], steps[1:]):
        z = intersect_consecutive(P, prev, cur)
        expected = pflag_opetope(P, z).face_set()
        if frozenset(seen) & faces != expected:
            raise ValueError(
                f"union-so-far meets {format_flag(cur)} in more than "
                f"the p-flag opetope of {format_flag(z)}"
            )
        intersections.append(z)
        inter_faces.append(expected)
        seen |= faces
    return StraightnessCertificate(
        complex_name=C.name,
        flags=tuple(chain),
        step_faces=tuple(steps),
        intersections=tuple(intersections),
        intersection_faces=tuple(inter_faces),
        covered=seen == C.face_set(),
        total_faces=len(C),
    )


# -- functoriality -----------------------------------------------------------


def cyl_map(f: FaceMap) -> FaceMap:
    """Entrywise image of cylinder faces under a face map of the bases."""
    CP = build_cylinder(f.source)
    CQ = build_cylinder(f.target)

    def image(phi: CylFace) -> CylFace:
        if isinstance(phi, Flat):
            return Flat(phi.sign, f(phi.base))
        return tuple(DUMMY if e == DUMMY else f(e) for e in phi)

    assignment = {x: face_id(image(parse_face_id(x))) for x in CP.all_faces()}
    return FaceMap(CP, CQ, assignment)


# -- brute-force lemma suites -------------------------------------------------


def star_projection_suite(P: Hypergraph) -> AxiomReport:
    """pi(p * phi) = p for every face p occurring under every maximal-flag face."""
    report = AxiomReport()
    C = build_cylinder(P)
    for x in C.all_faces():
        phi = parse_face_id(x)
        for p in occurrence_set(P, project(phi)):
            got = star(P, p, phi)
            if project(got) != p:
                report.add("star-projection", (p, x), f"projects to {project(got)}")
    return report


def flat_star_suite(P: Hypergraph) -> AxiomReport:
    """Flat star values propagate downward with the same sign."""
    report = AxiomReport()
    n = P.dim
    for f in maximal_flags(P):
        flats = {
            p: v
            for p in P.all_faces()
            if p not in f
            for v in [star_flag(P, p, f)]
            if isinstance(v, Flat)
        }
        for p, v in flats.items():
            for p2 in occurrence_set(P, p):
                if p2 == p or p2 in f:
                    continue
                w = star_flag(P, p2, f)
                if not isinstance(w, Flat) or w.sign != v.sign:
                    report.add("flat-star", (p2, p), f"{v} does not propagate to {p2}")
    return report


def iteration_suite(P: Hypergraph) -> AxiomReport:
    """Iterating the star: lifting p' against the lift of p agrees with
    lifting p' directly, except over the flag's own entries, where it lands
    on the truncation or its high/low puncture by the three-way table."""
    report = AxiomReport()
    n = P.dim
    for f in maximal_flags(P):
        occ = {p: occurrence_set(P, p) for p in P.all_faces()}
        for p in P.all_faces():
            lifted = star_flag(P, p, f)
            m = P.dim_of[p]
            for p2 in occ[p]:
                k = P.dim_of[p2]
                value = star(P, p2, lifted)
                if p2 != entry_at(f, k, n) or p == entry_at(f, m, n):
                    if value != star_flag(P, p2, f):
                        report.add("iterate-direct", (p2, p), "differs from the direct lift")
                    continue
                if isinstance(lifted, Flat):
                    if value != Flat(lifted.sign, p2):
                        report.add("iterate-flat", (p2, p), "flat lift does not restrict")
                    continue
                l = puncture_level(P, lifted)
                t = entry_at(lifted, l + 1, m)
                if l < k and t != entry_at(f, l + 1, n):
                    report.add("iterate-witness", (p2, p), "witness entry is not x_{l+1}")
                trunc = truncate(P, f, k)
                if k < l:
                    expected = trunc
                elif (k == l and P.gamma[t] == p2) or k == l + 1:
                    expected = cyl_high(P, trunc)
                elif (k == l and not le_plus(P, P.gamma[t], p2)) or k >= l + 2:
                    expected = cyl_low(P, trunc)
                else:
                    report.add("iterate-table", (p2, p), "no table row applies")
                    continue
                if value != expected:
                    report.add("iterate-table", (p2, p), f"{value} != {expected}")
    return report


def monotone_star_suite(P: Hypergraph) -> AxiomReport:
    """The low and high star lifts are monotone from the maximal-flag order
    to the p-flag order over each base face, and the lift against the
    intersection of consecutive flags sits between their lifts."""
    report = AxiomReport()
    chain = maximal_flags(P)
    n = P.dim
    for p in P.all_faces():
        if P.dim_of[p] >= n:
            continue
        order = pflag_order(P, p)
        rank = {face_id(v): i for i, v in enumerate(order)}

        def pos(v: CylFace, tag: str) -> int | None:
            i = rank.get(face_id(v))
            if i is None:
                report.add("monotone-range", (p,), f"{tag} value {face_id(v)} not in the order")
            return i

        for variant, tag in ((star_low, "low"), (star_high, "high")):
            seq = [pos(variant(P, p, f), tag) for f in chain]
            if None in seq:
                continue
            if any(a > b for a, b in zip(seq, seq[1:])):
                report.add("monotone", (p,), f"star_{tag} not monotone: {seq}")
            for j, (f, g) in enumerate(zip(chain, chain[1:])):
                mid = pos(variant(P, p, intersect_consecutive(P, f, g)), "mid")
                if mid is None:
                    continue
                if not seq[j] <= mid <= seq[j + 1]:
                    report.add("sandwich", (p,), f"star_{tag}: {seq[j]} !<= {mid} !<= {seq[j+1]}")
    return report


def dual_star_suite(P: Hypergraph) -> AxiomReport:
    """Star over the dual equals star over P with flat signs swapped."""
    report = AxiomReport()
    D = dual(P)
    for f in maximal_flags(P):
        for p in P.all_faces():
            a = star_flag(P, p, f)
            b = star_flag(D, p, f)
            expected = Flat("+" if a.sign == "-" else "-", a.base) if isinstance(a, Flat) else a
            if b != expected:
                report.add("dual-star", (p,), f"{face_id(b)} != {face_id(expected)}")
    return report


def monotone_overlap_suite(P: Hypergraph) -> AxiomReport:
    """Earlier flag opetopes meet the successor within the current overlap:
    for y < x < x' consecutive, P^y intersect P^x' lies inside P^x intersect P^x'."""
    report = AxiomReport()
    chain = maximal_flags(P)
    faces = [flag_opetope(P, f).face_set() for f in chain]
    for j in range(1, len(chain)):
        cur = faces[j - 1] & faces[j]
        for i in range(j - 1):
            if not faces[i] & faces[j] <= cur:
                report.add(
                    "monotone-overlap",
                    (format_flag(chain[i]), format_flag(chain[j])),
                    "earlier overlap escapes the consecutive intersection",
                )
    return report
