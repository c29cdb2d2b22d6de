"""Face maps of positive hypergraphs and contraction maps.

A face map preserves gamma and restricts to bijections on delta sets.
A contraction map may lower dimension; faces that drop dimension form the
kernel, and the three domain clauses below govern how delta sets collapse.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import (
    AxiomReport,
    Hypergraph,
    generated_sub,
    iterated_codomain,
    le_plus,
    lt_minus,
    lt_plus,
    lt_plus as _lt_plus,
    perp_plus,
    upper_order,
)


@dataclass
class FaceMap:
    source: Hypergraph
    target: Hypergraph
    assignment: dict[str, str]
    _validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        self.assignment = dict(self.assignment)
        if self._validate:
            report = validate_face_map(self)
            if not report.ok:
                raise ValueError("invalid face map: " + report.summary())

    @classmethod
    def raw(cls, source, target, assignment) -> "FaceMap":
        return cls(source, target, assignment, _validate=False)

    def __call__(self, q: str) -> str:
        return self.assignment[q]

    def image(self, faces: Iterable[str]) -> frozenset[str]:
        return frozenset(self.assignment[q] for q in faces)


def validate_face_map(f: FaceMap) -> AxiomReport:
    report = AxiomReport()
    Q, P, a = f.source, f.target, f.assignment
    for q in Q.all_faces():
        if q not in a:
            report.add("totality", (q,), "face has no image")
    if not report.ok:
        return report
    for q, p in a.items():
        if q not in Q.dim_of:
            report.add("domain", (q,), "assignment on unknown face")
        elif p not in P.dim_of:
            report.add("codomain", (q,), f"image {p} not in target")
        elif Q.dim_of[q] != P.dim_of[p]:
            report.add("dimension", (q,), "face maps do not change dimension")
    if not report.ok:
        return report
    for q in Q.all_faces():
        if Q.dim_of[q] == 0:
            continue
        if a[Q.gamma[q]] != P.gamma[a[q]]:
            report.add("gamma-naturality", (q,), "gamma(f(q)) != f(gamma(q))")
        img = [a[d] for d in Q.delta[q]]
        if len(set(img)) != len(img) or set(img) != set(P.delta[a[q]]):
            report.add("delta-bijection", (q,), "f is not a bijection delta(q) -> delta(f(q))")
    return report


@dataclass
class IotaMap:
    """Contraction map h: Q -> P, dimension-nonincreasing on faces."""

    source: Hypergraph
    target: Hypergraph
    assignment: dict[str, str]
    name: str = ""
    _validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        self.assignment = dict(self.assignment)
        if self._validate:
            report = validate_iota_map(self)
            if not report.ok:
                raise ValueError(f"invalid contraction map {self.name!r}: " + report.summary())

    @classmethod
    def raw(cls, source, target, assignment, name="") -> "IotaMap":
        return cls(source, target, assignment, name, _validate=False)

    def __call__(self, q: str) -> str:
        return self.assignment[q]

    def image(self, faces: Iterable[str]) -> frozenset[str]:
        return frozenset(self.assignment[q] for q in faces)

    def __repr__(self) -> str:
        tag = self.name or f"{self.source.name}->{self.target.name}"
        return f"IotaMap({tag})"


def kernel(h: IotaMap) -> frozenset[str]:
    Q, P = h.source, h.target
    return frozenset(
        q for q, p in h.assignment.items() if Q.dim_of[q] > P.dim_of[p]
    )


def collapse_degree(h: IotaMap, q: str) -> int:
    return h.source.dim_of[q] - h.target.dim_of[h.assignment[q]]


def validate_iota_map(h: IotaMap) -> AxiomReport:
    report = AxiomReport()
    Q, P, a = h.source, h.target, h.assignment
    for q in Q.all_faces():
        if q not in a:
            report.add("totality", (q,), "face has no image")
        elif a[q] not in P.dim_of:
            report.add("codomain", (q,), f"image {a[q]} not in target")
    if not report.ok:
        return report
    ker = kernel(h)
    for q in Q.all_faces():
        dq, dp = Q.dim_of[q], P.dim_of[a[q]]
        if dq < dp:
            report.add("clause-1", (q,), "image dimension exceeds source dimension")
            continue
        if dq == 0:
            continue
        # clause 2: preservation of iterated codomains
        for k in range(dq):
            if a[iterated_codomain(Q, q, k)] != iterated_codomain(P, a[q], k):
                report.add("clause-2", (q,), f"codomain iterate at dim {k} not preserved")
        # clause 3: preservation of domains
        nonker = [d for d in Q.delta[q] if d not in ker]
        img = [a[d] for d in nonker]
        if dp == dq:
            if len(set(img)) != len(img) or set(img) != set(P.delta[a[q]]):
                report.add("clause-3a", (q,), "no bijection (delta(q)-ker) -> delta(h(q))")
        elif dp == dq - 1:
            if len(img) != 1 or img[0] != a[q]:
                report.add("clause-3b", (q,), "no bijection (delta(q)-ker) -> {h(q)}")
        else:
            if nonker:
                report.add("clause-3c", (q,), "delta(q) not contained in kernel")
    return report


def identity_iota(P: Hypergraph, name: str = "") -> IotaMap:
    return IotaMap(P, P, {q: q for q in P.all_faces()}, name or f"id_{P.name}")


def compose_iota(h2: IotaMap, h1: IotaMap) -> IotaMap:
    if h1.target.face_set() != h2.source.face_set():
        raise ValueError("composition mismatch: target(h1) != source(h2)")
    assignment = {q: h2.assignment[h1.assignment[q]] for q in h1.assignment}
    return IotaMap(h1.source, h2.target, assignment, f"{h2.name}.{h1.name}")


def is_interval(H: Hypergraph, X: Iterable[str]) -> bool:
    """X is empty or equals {x | x0 <=+ x <=+ x1} for some x0 <=+ x1 in H_k."""
    X = set(X)
    if not X:
        return True
    dims = {H.dim_of[x] for x in X}
    if len(dims) != 1:
        return False
    k = dims.pop()
    up = upper_order(H, k)
    for x in X:
        for y in X:
            if x != y and not up.comparable(x, y):
                return False
    lo = [x for x in X if not any(up.lt(y, x) for y in X if y != x)]
    hi = [x for x in X if not any(up.lt(x, y) for y in X if y != x)]
    if len(lo) != 1 or len(hi) != 1:
        return False
    span = {x for x in H.faces(k) if up.le(lo[0], x) and up.le(x, hi[0])}
    return span == X


def fiber_interval_check(h: IotaMap, p: str) -> bool:
    ker = kernel(h)
    fiber = [q for q, v in h.assignment.items() if v == p and q not in ker]
    return is_interval(h.source, fiber)


def interval_sign(I: Hypergraph, p: str) -> str:
    """Classify a face of an interval-shaped opetope as '-', '+', or 'a'."""
    if I.dim_of[p] == 1:
        return "a"
    arrow = I.top()
    (s,) = I.delta[arrow]
    return "-" if p == s else "+"


def onto_maps_to_interval(P: Hypergraph, I: Hypergraph) -> list[IotaMap]:
    """One contraction map h_p per p in P_1 - gamma(P_2): faces whose codomain
    iterate lands at or left of the source of p go to the interval source,
    faces starting at or right of the target of p go to the target, and
    everything passing over p goes to the arrow."""
    if P.dim < 1:
        return []
    arrow = I.top()
    (s,) = I.delta[arrow]
    t = I.gamma[arrow]
    free = [p for p in P.faces(1) if p not in {P.gamma[x] for x in P.faces(2)}]
    maps = []
    for p in free:
        (sp,) = P.delta[p]
        tp = P.gamma[p]
        assignment = {}
        for x in P.all_faces():
            if P.dim_of[x] == 0:
                if le_plus(P, x, sp):
                    assignment[x] = s
                elif le_plus(P, tp, x):
                    assignment[x] = t
                else:
                    raise ValueError(f"vertex {x} neither left nor right of {p}")
            else:
                g0 = iterated_codomain(P, x, 0)
                g1 = iterated_codomain(P, x, 1)
                (src,) = P.delta[g1]
                if le_plus(P, g0, sp):
                    assignment[x] = s
                elif le_plus(P, tp, src):
                    assignment[x] = t
                else:
                    assignment[x] = arrow
        maps.append(IotaMap(P, I, assignment, name=f"h_{p}"))
    return maps


def iota_preservation_suite(h: IotaMap) -> AxiomReport:
    """The four order-preservation facts for non-kernel pairs: lower order is
    reflected exactly; upper order maps to <=+ forward and reflects strictly;
    equal images force upper comparability."""
    report = AxiomReport()
    Q, P, a = h.source, h.target, h.assignment
    ker = kernel(h)
    faces = [q for q in Q.all_faces() if q not in ker]
    for q1 in faces:
        for q2 in faces:
            if q1 == q2 or Q.dim_of[q1] != Q.dim_of[q2]:
                continue
            if lt_minus(Q, q1, q2) != lt_minus(P, a[q1], a[q2]):
                report.add("lower-order-iff", (q1, q2), "item 1 fails")
            if lt_plus(Q, q1, q2) and not le_plus(P, a[q1], a[q2]):
                report.add("upper-order-forward", (q1, q2), "item 2 fails")
            if lt_plus(P, a[q1], a[q2]) and not lt_plus(Q, q1, q2):
                report.add("upper-order-reflect", (q1, q2), "item 3 fails")
            if a[q1] == a[q2] and not perp_plus(Q, q1, q2):
                report.add("fiber-comparable", (q1, q2), "item 4 fails")
    return report


def restrict_iota(h: IotaMap, q: str) -> IotaMap:
    """Restriction of h to the subobject generated by q, onto the subobject
    generated by h(q)."""
    Qq = generated_sub(h.source, q)
    Pp = generated_sub(h.target, h.assignment[q])
    assignment = {x: h.assignment[x] for x in Qq.all_faces()}
    return IotaMap(Qq, Pp, assignment, name=f"{h.name}|{q}")
