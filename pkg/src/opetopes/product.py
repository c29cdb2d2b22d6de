"""The universal map into the cylinder.

Given contraction maps rho: Q -> I (interval) and h: Q -> P, the faces of Q
that rho sends to the arrow are organised by the splitting/threshold
analysis; from it a seven-clause assignment H: Q -> Cyl(P) is built, which
is the unique contraction map projecting back to h and rho.  A brute-force
search verifies the uniqueness on desk-scale inputs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .core import (
    AxiomReport,
    Hypergraph,
    generated_sub,
    iterated_codomain,
    lt_minus,
    lt_plus,
)
from .cylinder import (
    CylFace,
    build_cylinder,
    cyl_high,
    cyl_low,
    face_id,
    parse_face_id,
    project,
    star,
)
from .flags import DUMMY, Entries, Flat
from .morphisms import IotaMap, interval_sign, kernel

MAX_SEARCH_DEFAULT = 10**7


# -- the analysed pair ---------------------------------------------------------


class ProductPair:
    """A pair (rho: Q -> I, h: Q -> P) with the derived face classification."""

    def __init__(self, rho: IotaMap, h: IotaMap):
        if rho.source.face_set() != h.source.face_set():
            raise ValueError("rho and h must share their source")
        self.Q = h.source
        self.P = h.target
        self.I = rho.target
        self.rho = rho
        self.h = h
        self._split: dict[str, bool] = {}
        self.case: dict[str, str] = {}
        self._H: dict[str, CylFace] = {}
        self.ker = kernel(h)

    # -- classification -----------------------------------------------------

    def sign(self, q: str) -> str:
        """'-', '+', or 'a' according to where rho sends q."""
        return interval_sign(self.I, self.rho(q))

    def splitting(self, q: str) -> bool:
        """q maps to the arrow and its image collapses one dimension,
        witnessed recursively through the domain."""
        if q in self._split:
            return self._split[q]
        k = self.Q.dim_of[q]
        if k == 0 or self.sign(q) != "a":
            out = False
        elif k == 1:
            out = self.P.dim_of[self.h(q)] == 0
        else:
            out = self.P.dim_of[self.h(q)] == k - 1 and any(
                self.splitting(d) for d in self.Q.delta[q]
            )
        self._split[q] = out
        return out

    def threshold(self, q: str) -> bool:
        """q maps to the arrow without collapsing, just past the splitting zone."""
        k = self.Q.dim_of[q]
        if k == 1:
            return self.sign(q) == "a" and self.P.dim_of[self.h(q)] == 1
        if k >= 2:
            return self.Q.dim_of[q] == self.P.dim_of[self.h(q)] and any(
                self.splitting(d) for d in self.Q.delta[q]
            )
        return False

    def _unique_in_delta(self, q: str, pred, what: str) -> str | None:
        found = [d for d in self.Q.delta[q] if pred(d)]
        if len(found) > 1:
            raise ValueError(f"several {what} faces in delta({q}): {found}")
        return found[0] if found else None

    def sigma(self, q: str) -> str | None:
        """The unique splitting face in delta(q), if any."""
        if self.Q.dim_of[q] < 2:
            return None
        return self._unique_in_delta(q, self.splitting, "splitting")

    def tau(self, q: str) -> str | None:
        """The unique threshold face in delta(q), if any."""
        if self.Q.dim_of[q] < 2:
            return None
        return self._unique_in_delta(q, self.threshold, "threshold")

    def collapse(self, q: str) -> int:
        return self.Q.dim_of[q] - self.P.dim_of[self.h(q)]

    def xi(self, q: str) -> str | None:
        """For 1-collapsing q: the unique domain face with h-image h(gamma(q))."""
        if self.Q.dim_of[q] < 1 or self.collapse(q) != 1:
            return None
        target = self.h(self.Q.gamma[q])
        return self._unique_in_delta(q, lambda d: self.h(d) == target, "gamma-imaged")

    # -- splitting sequences --------------------------------------------------

    def splitting_sequence(self, q: str) -> tuple[str, list[str]] | None:
        Q = self.Q
        k = Q.dim_of[q]
        if k == 0:
            return None
        if k == 1:
            return ("one-face", [q]) if self.sign(q) == "a" else None
        if q not in self.ker:
            for l in range(0, k - 1):
                g = iterated_codomain(Q, q, l + 2)
                t = self.tau(g)
                if t is not None:
                    seq = [iterated_codomain(Q, q, j) for j in range(k, l + 1, -1)]
                    seq.append(t)
                    s = self.sigma(t) if Q.dim_of[t] >= 2 else None
                    while s is not None:
                        seq.append(s)
                        s = self.sigma(s) if Q.dim_of[s] >= 2 else None
                    return ("threshold-form", seq)
        if self.collapse(q) == 1 and self.sigma(q) is not None:
            seq = [q]
            s = self.sigma(q)
            while s is not None:
                seq.append(s)
                s = self.sigma(s) if Q.dim_of[s] >= 2 else None
            return ("splitting-form", seq)
        inherited = self.splitting_sequence(Q.gamma[q])
        if inherited is not None:
            return ("inherited", inherited[1])
        return None

    def value_from_sequence(self, q: str) -> CylFace | None:
        """H(q) computed independently from the splitting sequence."""
        found = self.splitting_sequence(q)
        if found is None:
            if self.Q.dim_of[q] == 0:
                return None
            g1 = iterated_codomain(self.Q, q, 1)
            verdicts = set()
            for x in self.Q.faces(1):
                if self.sign(x) != "a":
                    continue
                if lt_minus(self.Q, g1, x):
                    verdicts.add("-")
                if lt_minus(self.Q, x, g1):
                    verdicts.add("+")
            if len(verdicts) != 1:
                return None
            return Flat(verdicts.pop(), self.h(q))
        kind, seq = found
        if kind == "inherited":
            return self.value_from_sequence(self.Q.gamma[q])
        if kind == "one-face":
            p = self.h(q)
            return (p,) if self.P.dim_of[p] == 0 else (p, DUMMY)
        images = tuple(self.h(x) for x in seq)
        if kind == "splitting-form":
            return images
        cut = next(i for i, x in enumerate(seq) if self.threshold(x)) + 1
        return images[:cut] + (DUMMY,) + images[cut:]

    # -- the seven-clause assignment -----------------------------------------

    def value(self, q: str) -> CylFace:
        if q in self._H:
            return self._H[q]
        sign = self.sign(q)
        if sign in "-+":
            out: CylFace = Flat(sign, self.h(q))
            label = "flat"
        else:
            k = self.Q.dim_of[q]
            ker = self.ker
            if k == 1:
                if self.splitting(q):
                    out, label = (self.h(q),), "H1"
                else:
                    out, label = (self.h(q), DUMMY), "H2"
            elif self.splitting(q):
                out, label = (self.h(q),) + self.value(self.sigma(q)), "H3"
            elif q not in ker and self.sigma(q) is not None:
                out, label = (self.h(q), DUMMY) + self.value(self.sigma(q)), "H4"
            elif self.threshold(q):
                out, label = (self.h(q), DUMMY) + self.value(self.sigma(q)), "H4.1"
            elif q not in ker and self.tau(q) is not None:
                out, label = (self.h(q),) + self.value(self.tau(q)), "H5"
            elif q not in ker:
                gv = self.value(self.Q.gamma[q])
                if isinstance(gv, Flat):
                    raise ValueError(f"gamma value of {q} is flat; no p-flag extension")
                out, label = (self.h(q),) + gv, "H6"
            else:
                out, label = self.value(self.Q.gamma[q]), "H7"
        self._H[q] = out
        self.case[q] = label
        return out


def cyl_sign(phi: CylFace) -> str:
    """Where the cylinder projects to the interval: flats to their sign,
    flags and p-flags to the arrow."""
    return phi.sign if isinstance(phi, Flat) else "a"


def _interval_end(I: Hypergraph, s: str) -> str:
    arrow = I.top()
    (src,) = I.delta[arrow]
    return src if s == "-" else I.gamma[arrow]


def build_H(rho: IotaMap, h: IotaMap) -> IotaMap:
    """The universal contraction map Q -> Cyl(P) over the pair (rho, h)."""
    P = h.target
    image = set(h.assignment.values())
    if image != P.face_set():
        sub = generated_sub(P, h(h.source.top()))
        if not image <= sub.face_set():
            raise ValueError("image of h is not generated by the top image")
        pair = ProductPair(rho, IotaMap.raw(h.source, sub, h.assignment, h.name))
    else:
        pair = ProductPair(rho, h)
    C = build_cylinder(P)
    assignment = {q: face_id(pair.value(q)) for q in h.source.all_faces()}
    name = f"H({rho.name or 'rho'},{h.name or 'h'})"
    H = IotaMap(h.source, C, assignment, name)
    H.cases = dict(pair.case)
    return H


# -- interval bookkeeping of the analysis --------------------------------------


@dataclass
class SplitAnalysis:
    pair: ProductPair
    S: dict[int, list[str]]
    T: dict[int, list[str]]
    A: dict[int, list[str]]
    B: dict[int, list[str]]
    top_dim: int
    report: AxiomReport = field(default_factory=AxiomReport)


def _sorted_chain(Q: Hypergraph, faces: list[str], report: AxiomReport, what: str) -> list[str]:
    out = sorted(faces, key=lambda x: sum(1 for y in faces if lt_plus(Q, y, x)))
    for a, b in zip(out, out[1:]):
        if not lt_plus(Q, a, b):
            report.add("chain", (a, b), f"{what} is not linearly ordered by the upper order")
    return out


def _witnesses(
    Q: Hypergraph, chain: list[str], degrees: set[int], pair: ProductPair,
    report: AxiomReport, what: str,
) -> list[str]:
    non_codomain = set(Q.all_faces()) - {Q.gamma[x] for x in Q.all_faces() if Q.dim_of[x] > 0}
    out = []
    for prev, cur in zip(chain, chain[1:]):
        ys = [
            y
            for y in non_codomain
            if Q.dim_of[y] == Q.dim_of[cur] + 1
            and prev in Q.delta[y]
            and Q.gamma[y] == cur
            and pair.collapse(y) in degrees
        ]
        if len(ys) != 1:
            report.add("witness", (prev, cur), f"{what}: {len(ys)} witnesses")
            continue
        out.append(ys[0])
    return out


def analyze_splitting(rho: IotaMap, h: IotaMap) -> SplitAnalysis:
    """Collect splitting and threshold faces per dimension, check that they
    form the expected intervals, and construct their witness sequences."""
    pair = ProductPair(rho, h)
    Q = pair.Q
    report = AxiomReport()
    S: dict[int, list[str]] = {}
    T: dict[int, list[str]] = {}
    A: dict[int, list[str]] = {}
    B: dict[int, list[str]] = {}
    for i in range(1, Q.dim + 1):
        s = [q for q in Q.faces(i) if pair.splitting(q)]
        t = [q for q in Q.faces(i) if pair.threshold(q)]
        if not s and not t:
            continue
        S[i] = _sorted_chain(Q, s, report, f"S^{i}")
        T[i] = _sorted_chain(Q, t, report, f"T^{i}")
        A[i + 1] = _witnesses(Q, S[i], {2}, pair, report, f"A^{i+1}")
        B[i + 1] = _witnesses(Q, T[i], {0, 1}, pair, report, f"B^{i+1}")
        whole = _sorted_chain(Q, s + t, report, f"S^{i}+T^{i}")
        if s and whole[: len(s)] != S[i]:
            report.add("interval-order", (str(i),), "splitting faces do not precede thresholds")
        # splitting interval starts off the codomain image; the union is a
        # maximal interval of the upper order
        codomains = {Q.gamma[x] for x in Q.faces(i + 1)}
        if S[i] and S[i][0] in codomains:
            report.add("initial-interval", (S[i][0],), "least splitting face is a codomain")
        lo, hi = whole[0], whole[-1]
        if any(lt_plus(Q, y, lo) for y in Q.faces(i)):
            report.add("maximal-interval", (lo,), "extendable below")
        if any(lt_plus(Q, hi, y) for y in Q.faces(i)):
            report.add("maximal-interval", (hi,), "extendable above")
        for x in Q.faces(i):
            if x not in whole and lt_plus(Q, lo, x) and lt_plus(Q, x, hi):
                report.add("interval-gap", (x,), "face inside the interval span is missing")
        # threshold fiber steps (witness collapse degree vs image comparison)
        for (prev, cur), b in zip(zip(T[i], T[i][1:]), B[i + 1]):
            if pair.collapse(b) == 0 and not lt_plus(pair.P, pair.h(prev), pair.h(cur)):
                report.add("threshold-step", (prev, cur), "non-collapsing witness, images not <+")
            if pair.collapse(b) == 1 and pair.h(prev) != pair.h(cur):
                report.add("threshold-step", (prev, cur), "1-collapsing witness, images differ")
    dims = sorted(S.keys())
    top = dims[-1] if dims else 0
    if top and S[top] and T[top]:
        report.add("top-level", (str(top),), "both splitting and threshold faces at the top level")
    for i in dims:
        if i + 1 in dims:
            lo_i = (S[i] + T[i])[0]
            hi_next = (S[i + 1] + T[i + 1])[-1]
            if lo_i not in Q.delta[iterated_codomain(Q, hi_next, i + 1)]:
                report.add("stack-bottom", (str(i),), "least face not in the domain one level up")
            hi_i = (S[i] + T[i])[-1]
            if iterated_codomain(Q, hi_next, i) != hi_i:
                report.add("stack-top", (str(i),), "codomain of the largest face above mismatch")
        # the joint witness row: between the last splitting and first
        # threshold face sits the first splitting face one level up
        if S[i] and T[i] and i + 1 in dims and S[i + 1]:
            bridge = S[i + 1][0]
            if not (S[i][-1] in Q.delta[bridge] and Q.gamma[bridge] == T[i][0]):
                report.add("bridge-witness", (str(i),), "first upper splitting face is not the bridge")
    return SplitAnalysis(pair, S, T, A, B, top, report)


# -- lemma suites --------------------------------------------------------------


def h_lemma_suite(rho: IotaMap, h: IotaMap) -> AxiomReport:
    """Brute-force the identities tying H to the collapse structure."""
    report = AxiomReport()
    pair = ProductPair(rho, h)
    Q, P = pair.Q, pair.P
    H = pair.value
    ker = kernel(h)
    for q in Q.all_faces():
        k = Q.dim_of[q]
        if k < 1:
            continue
        # 2-collapsing faces send every doubly-collapsed domain face with
        # the codomain image
        if k >= 2:
            for d in Q.delta[q]:
                if P.dim_of[h(q)] == k - 2 and P.dim_of[h(d)] == k - 2:
                    if h(d) != h(Q.gamma[q]):
                        report.add("double-collapse", (q, d), "image differs from gamma image")
        if k >= 2 and pair.collapse(q) == 1 and not pair.splitting(q):
            x = pair.xi(q)
            if x is None or H(x) != H(Q.gamma[q]):
                report.add("collapse-gamma", (q,), "H(xi(q)) != H(gamma(q))")
        if k >= 2 and pair.splitting(q):
            x = pair.xi(q)
            hq = H(q)
            if x is None or H(x) != cyl_low(P, hq):
                report.add("split-low", (q,), "H(xi(q)) != low puncture of H(q)")
            if H(Q.gamma[q]) != cyl_high(P, hq):
                report.add("split-high", (q,), "H(gamma(q)) != high puncture of H(q)")
            s = pair.sigma(q)
            if lt_minus(Q, s, x):
                if Q.dim_of[x] >= 2:
                    tx = pair.tau(x)
                    if tx is None or Q.gamma[s] != tx:
                        report.add("xi-sigma", (q,), "gamma(sigma(q)) is not the threshold of xi(q)")
            elif lt_minus(Q, x, s):
                if h(s) != h(iterated_codomain(Q, q, k - 2)):
                    report.add("xi-sigma", (q,), "h(sigma(q)) != h(gamma^2(q))")
            else:
                report.add("xi-sigma", (q,), "sigma(q) and xi(q) not lower-comparable")
        if q not in ker:
            for d in Q.delta[q]:
                if d in ker:
                    continue
                if H(d) != star(P, h(d), H(q)):
                    report.add("star-preservation", (q, d), "H(d) != h(d) * H(q)")
        # splitting sequences reproduce H
        seq = pair.splitting_sequence(q)
        if (seq is not None) != (pair.sign(q) == "a"):
            report.add("sequence-exists", (q,), "sequence exists iff the image is the arrow")
        expected = pair.value_from_sequence(q)
        if expected is not None and expected != H(q):
            report.add("sequence-value", (q,), f"{expected} != {H(q)}")
    return report


def cyl_structure_unique(P: Hypergraph) -> AxiomReport:
    """Two cylinder faces over the same base with equal gamma and delta
    coincide."""
    report = AxiomReport()
    C = build_cylinder(P)
    faces = [x for x in C.all_faces() if C.dim_of[x] > 0]
    for x in faces:
        for y in faces:
            if x >= y:
                continue
            if (
                project(parse_face_id(x)) == project(parse_face_id(y))
                and C.gamma[x] == C.gamma[y]
                and C.delta[x] == C.delta[y]
            ):
                report.add("boundary-determined", (x, y), "distinct faces with equal boundary")
    return report


# -- projections of a flag opetope ---------------------------------------------


def projection_pair(P: Hypergraph, flag: Entries, I: Hypergraph) -> tuple[IotaMap, IotaMap]:
    """The two contraction maps off a flag opetope: down to the base and to
    the interval."""
    from .cylinder import flag_opetope

    sub = flag_opetope(P, flag)
    arrow = I.top()
    (src,) = I.delta[arrow]
    tgt = I.gamma[arrow]
    pi = {}
    rho = {}
    for x in sub.all_faces():
        phi = parse_face_id(x)
        pi[x] = project(phi)
        rho[x] = {"-": src, "+": tgt}.get(cyl_sign(phi), arrow)
    return (
        IotaMap(sub, P, pi, name=f"pi^{sub.name}"),
        IotaMap(sub, I, rho, name=f"rho^{sub.name}"),
    )


# -- uniqueness oracle ---------------------------------------------------------


@dataclass
class ProductVerdict:
    report: AxiomReport
    solutions: int
    nodes: int

    @property
    def ok(self) -> bool:
        return self.report.ok and self.solutions == 1

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "solutions": self.solutions,
            "nodes_visited": self.nodes,
            "violations": [
                {"check": v.check, "faces": list(v.faces), "message": v.message}
                for v in self.report.violations
            ],
        }


def _search_budget() -> int:
    return int(os.environ.get("OPETOPE_MAX_SEARCH", MAX_SEARCH_DEFAULT))


def verify_product(rho: IotaMap, h: IotaMap) -> ProductVerdict:
    """Build H, check both projection equations, and confirm by exhaustive
    search that no other contraction map satisfies them."""
    report = AxiomReport()
    Q, P, I = h.source, h.target, rho.target
    H = build_H(rho, h)
    C = H.target
    for q in Q.all_faces():
        phi = parse_face_id(H(q))
        if project(phi) != h(q):
            report.add("projection-base", (q,), f"{H(q)} does not project to {h(q)}")
        s = cyl_sign(phi)
        expected = interval_sign(I, rho(q))
        if s != expected:
            report.add("projection-interval", (q,), f"{s} != {expected}")

    # exhaustive search for contraction maps with the same projections
    budget = _search_budget()
    order = sorted(Q.all_faces(), key=lambda q: (Q.dim_of[q], q))
    cands: dict[str, list[str]] = {}
    for q in order:
        want = interval_sign(I, rho(q))
        cands[q] = [
            x
            for x in C.all_faces()
            if C.dim_of[x] <= Q.dim_of[q]
            and project(parse_face_id(x)) == h(q)
            and cyl_sign(parse_face_id(x)) == want
        ]
    assignment: dict[str, str] = {}
    state = {"nodes": 0, "solutions": 0}

    def consistent(q: str, x: str) -> bool:
        dq, dx = Q.dim_of[q], C.dim_of[x]
        for k in range(dq):
            if assignment[iterated_codomain(Q, q, k)] != iterated_codomain(C, x, k):
                return False
        if dq == 0:
            return True
        nonker = [
            d for d in Q.delta[q] if Q.dim_of[d] == C.dim_of[assignment[d]]
        ]
        img = [assignment[d] for d in nonker]
        if dx == dq:
            return len(set(img)) == len(img) and set(img) == set(C.delta[x])
        if dx == dq - 1:
            return len(img) == 1 and img[0] == x
        return not nonker

    def dfs(i: int) -> None:
        if state["nodes"] > budget:
            raise RuntimeError("uniqueness search budget exhausted")
        if i == len(order):
            state["solutions"] += 1
            return
        q = order[i]
        for x in cands[q]:
            state["nodes"] += 1
            if consistent(q, x):
                assignment[q] = x
                dfs(i + 1)
                del assignment[q]

    dfs(0)
    if state["solutions"] != 1:
        report.add("uniqueness", (), f"{state['solutions']} maps satisfy both projections")
    return ProductVerdict(report, state["solutions"], state["nodes"])


# -- the map catalog ------------------------------------------------------------


def constant_rho(Q: Hypergraph, I: Hypergraph, sign: str) -> IotaMap:
    """The contraction map collapsing Q onto one end of the interval."""
    end = _interval_end(I, sign)
    return IotaMap(Q, I, {q: end for q in Q.all_faces()}, name=f"const{sign}")


def kernel_of_H_invariant(rho: IotaMap, h: IotaMap) -> AxiomReport:
    """ker(H) is exactly the non-splitting part of ker(h), and the face kind
    of H(q) follows the clause that produced it."""
    report = AxiomReport()
    pair = ProductPair(rho, h)
    H = build_H(rho, h)
    C = H.target
    ker_h = kernel(h)
    ker_H = kernel(H)
    expected = {q for q in ker_h if not pair.splitting(q)}
    if ker_H != expected:
        report.add("kernel", tuple(sorted(ker_H ^ expected)), "kernel of H mismatch")
    for q, label in H.cases.items():
        d = C.dim_of[H(q)]
        phi = parse_face_id(H(q))
        if label in ("H1", "H3"):
            if d != h.source.dim_of[q] or not isinstance(phi, tuple) or DUMMY in phi:
                report.add("case-shape", (q,), f"{label} value is not a full-dimension flag")
        elif label in ("H2", "H4", "H4.1", "H5", "H6"):
            if d != h.source.dim_of[q] or not isinstance(phi, tuple) or DUMMY not in phi:
                report.add("case-shape", (q,), f"{label} value is not a full-dimension p-flag")
        elif label == "H7" and d >= h.source.dim_of[q]:
            report.add("case-shape", (q,), "H7 value does not drop dimension")
    return report
