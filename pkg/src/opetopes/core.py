"""Positive hypergraphs, derived orders, opetope axioms, subobjects, duals, size.

A positive hypergraph is a graded family of finite face sets S_0, S_1, ...
(finitely many nonempty) with a codomain function gamma sending each face of
dimension k+1 to a face of dimension k, and a domain relation delta sending it
to a nonempty set of faces of dimension k (a singleton when k = 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

DIM_CAP = 16


@dataclass(frozen=True)
class Violation:
    check: str
    faces: tuple[str, ...]
    message: str

    def __str__(self) -> str:
        where = ", ".join(self.faces)
        return f"{self.check} [{where}]: {self.message}"


@dataclass
class AxiomReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, check: str, faces: Iterable[str], message: str) -> None:
        self.violations.append(Violation(check, tuple(faces), message))

    def extend(self, other: "AxiomReport") -> None:
        self.violations.extend(other.violations)

    def summary(self) -> str:
        if self.ok:
            return "pass"
        return "fail: " + "; ".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class OrderRelation:
    dimension: int
    pairs: frozenset[tuple[str, str]]
    kind: str  # "lower" | "upper"

    def lt(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs

    def le(self, a: str, b: str) -> bool:
        return a == b or (a, b) in self.pairs

    def comparable(self, a: str, b: str) -> bool:
        return (a, b) in self.pairs or (b, a) in self.pairs


def transitive_closure(pairs: set[tuple[str, str]]) -> frozenset[tuple[str, str]]:
    succ: dict[str, set[str]] = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    closed: set[tuple[str, str]] = set()
    for start in list(succ):
        seen: set[str] = set()
        stack = list(succ[start])
        while stack:
            b = stack.pop()
            if b in seen:
                continue
            seen.add(b)
            stack.extend(succ.get(b, ()))
        closed.update((start, b) for b in seen)
    return frozenset(closed)


class Hypergraph:
    """Immutable positive hypergraph with cached derived orders.

    Public construction validates the grading eagerly; use Hypergraph.raw for
    deliberately broken instances (test oracles, loaders that want reports).
    """

    def __init__(
        self,
        name: str,
        faces: Iterable[Iterable[str]],
        gamma: Mapping[str, str],
        delta: Mapping[str, Iterable[str]],
        _validate: bool = True,
    ):
        self.name = name
        grades = [tuple(level) for level in faces]
        while grades and not grades[-1]:
            grades.pop()
        self.grades: tuple[tuple[str, ...], ...] = tuple(grades)
        self.gamma: dict[str, str] = dict(gamma)
        self.delta: dict[str, frozenset[str]] = {
            x: frozenset(v) for x, v in delta.items()
        }
        self.dim_of: dict[str, int] = {}
        for k, level in enumerate(self.grades):
            for x in level:
                self.dim_of[x] = k
        self._order_cache: dict[tuple[str, int], OrderRelation] = {}
        if _validate:
            report = validate_structure(self)
            if not report.ok:
                raise ValueError(f"invalid hypergraph {name!r}: " + report.summary())

    @classmethod
    def raw(cls, name, faces, gamma, delta) -> "Hypergraph":
        return cls(name, faces, gamma, delta, _validate=False)

    # -- basic queries -------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.grades) - 1

    def faces(self, k: int) -> tuple[str, ...]:
        if 0 <= k < len(self.grades):
            return self.grades[k]
        return ()

    def all_faces(self) -> list[str]:
        return [x for level in self.grades for x in level]

    def __contains__(self, x: str) -> bool:
        return x in self.dim_of

    def __len__(self) -> int:
        return len(self.dim_of)

    def gamma_of(self, x: str) -> str:
        return self.gamma[x]

    def delta_of(self, x: str) -> frozenset[str]:
        return self.delta[x]

    def top(self) -> str:
        """The unique top-dimensional face (meaningful for opetopes)."""
        level = self.grades[-1]
        if len(level) != 1:
            raise ValueError(f"{self.name}: top dimension has {len(level)} faces")
        return level[0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            set(map(frozenset, self.grades)) == set(map(frozenset, other.grades))
            and self.gamma == other.gamma
            and self.delta == other.delta
        )

    def __hash__(self) -> int:
        return hash((self.grades, tuple(sorted(self.gamma.items()))))

    def __repr__(self) -> str:
        counts = [len(level) for level in self.grades]
        return f"Hypergraph({self.name!r}, counts={counts})"

    def face_set(self) -> frozenset[str]:
        return frozenset(self.dim_of)

    # -- derived structure ---------------------------------------------

    def restrict(self, subset: Iterable[str], name: str | None = None) -> "Hypergraph":
        """Sub-hypergraph on a gamma/delta-closed subset of faces."""
        keep = set(subset)
        faces = [
            [x for x in level if x in keep] for level in self.grades
        ]
        gamma = {x: self.gamma[x] for x in keep if x in self.gamma}
        delta = {x: self.delta[x] for x in keep if x in self.delta}
        return Hypergraph(name or self.name, faces, gamma, delta)


# -- structural validation ----------------------------------------------


def validate_structure(H: Hypergraph) -> AxiomReport:
    report = AxiomReport()
    if H.dim > DIM_CAP:
        report.add("dimension-cap", (), f"dimension {H.dim} exceeds cap {DIM_CAP}")
        return report
    seen: set[str] = set()
    for k, level in enumerate(H.grades):
        for x in level:
            if x in seen:
                report.add("face-unique", (x,), "face id appears twice")
            seen.add(x)
            if k == 0:
                if x in H.gamma:
                    report.add("grading", (x,), "dim-0 face has a gamma value")
                if x in H.delta and H.delta[x]:
                    report.add("grading", (x,), "dim-0 face has delta faces")
                continue
            g = H.gamma.get(x)
            if g is None:
                report.add("gamma-total", (x,), "gamma undefined")
            elif H.dim_of.get(g) != k - 1:
                report.add("gamma-grading", (x,), f"gamma({x})={g} is not one dimension down")
            ds = H.delta.get(x)
            if not ds:
                report.add("delta-nonempty", (x,), "delta is empty or undefined")
            else:
                for d in ds:
                    if H.dim_of.get(d) != k - 1:
                        report.add("delta-grading", (x,), f"{d} in delta({x}) is not one dimension down")
                if k == 1 and len(ds) != 1:
                    report.add("delta0-single-valued", (x,), f"delta of a 1-face has {len(ds)} members")
    for x in H.gamma:
        if x not in H.dim_of:
            report.add("gamma-domain", (x,), "gamma defined on unknown face")
    for x in H.delta:
        if x not in H.dim_of:
            report.add("delta-domain", (x,), "delta defined on unknown face")
    return report


# -- orders ---------------------------------------------------------------


def lower_order(H: Hypergraph, k: int) -> OrderRelation:
    if not 0 < k <= H.dim:
        raise ValueError(f"lower order needs 0 < k <= {H.dim}, got {k}")
    key = ("lower", k)
    if key not in H._order_cache:
        level = H.faces(k)
        base = {
            (a, b)
            for a in level
            for b in level
            if H.gamma[a] in H.delta[b]
        }
        # a <- b directly when gamma(a) in delta(b) would orient a before b;
        # the paper's triangle a \lhd^- b reads gamma(a) in delta(b).
        H._order_cache[key] = OrderRelation(k, transitive_closure(base), "lower")
    return H._order_cache[key]


def upper_order(H: Hypergraph, k: int) -> OrderRelation:
    if not 0 <= k <= H.dim:
        raise ValueError(f"upper order needs 0 <= k <= {H.dim}, got {k}")
    key = ("upper", k)
    if key not in H._order_cache:
        base: set[tuple[str, str]] = set()
        for alpha in H.faces(k + 1):
            b = H.gamma[alpha]
            for a in H.delta[alpha]:
                base.add((a, b))
        H._order_cache[key] = OrderRelation(k, transitive_closure(base), "upper")
    return H._order_cache[key]


def lt_plus(H: Hypergraph, a: str, b: str) -> bool:
    k = H.dim_of[a]
    if k != H.dim_of[b]:
        return False
    return upper_order(H, k).lt(a, b)


def le_plus(H: Hypergraph, a: str, b: str) -> bool:
    return a == b or lt_plus(H, a, b)


def lt_minus(H: Hypergraph, a: str, b: str) -> bool:
    k = H.dim_of[a]
    if k != H.dim_of[b] or k == 0:
        return False
    return lower_order(H, k).lt(a, b)


def perp_plus(H: Hypergraph, a: str, b: str) -> bool:
    return lt_plus(H, a, b) or lt_plus(H, b, a)


def perp_minus(H: Hypergraph, a: str, b: str) -> bool:
    return lt_minus(H, a, b) or lt_minus(H, b, a)


# -- notation helpers ------------------------------------------------------


def gamma_set(H: Hypergraph, faces: Iterable[str]) -> frozenset[str]:
    return frozenset(H.gamma[x] for x in faces)


def delta_set(H: Hypergraph, faces: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for x in faces:
        out |= H.delta[x]
    return frozenset(out)


def iterated_codomain(H: Hypergraph, p: str, k: int) -> str:
    """gamma^(k)(p): apply gamma until dimension k is reached (identity below)."""
    while H.dim_of[p] > k:
        p = H.gamma[p]
    return p


def boundary(H: Hypergraph, p: str) -> frozenset[str]:
    if H.dim_of[p] == 0:
        return frozenset()
    return H.delta[p] | {H.gamma[p]}


def occurs(H: Hypergraph, p_prime: str, p: str) -> bool:
    """p' occurs in p: p'=p, or p' in boundary(p), or in the double boundary
    of the codomain iterate two dimensions above p'."""
    if p_prime == p:
        return True
    k = H.dim_of[p_prime]
    if k == H.dim_of[p] - 1 and p_prime in boundary(H, p):
        return True
    if k + 2 > H.dim_of[p]:
        return False
    q = iterated_codomain(H, p, k + 2)
    for b in boundary(H, q):
        if p_prime in boundary(H, b):
            return True
    return False


def occurrence_set(H: Hypergraph, p: str) -> frozenset[str]:
    return frozenset(x for x in H.all_faces() if occurs(H, x, p))


def iota_faces(H: Hypergraph, x: str) -> frozenset[str]:
    """iota(x) = gamma(delta(x)) intersect delta(delta(x)): internal codim-2 faces."""
    if H.dim_of[x] < 2:
        raise ValueError(f"iota needs dim >= 2, got {x} of dim {H.dim_of[x]}")
    return gamma_set(H, H.delta[x]) & delta_set(H, H.delta[x])


def iota_set(H: Hypergraph, faces: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for x in faces:
        out |= iota_faces(H, x)
    return frozenset(out)


# -- opetopic cardinal axioms ---------------------------------------------


def is_opetopic_cardinal(H: Hypergraph) -> AxiomReport:
    report = validate_structure(H)
    if not report.ok:
        return report
    if not H.grades:
        report.add("nonempty", (), "hypergraph has no faces")
        return report
    # globularity
    for k in range(2, H.dim + 1):
        for a in H.faces(k):
            gd = gamma_set(H, H.delta[a])
            dd = delta_set(H, H.delta[a])
            if gd - dd != {H.gamma[H.gamma[a]]}:
                report.add("globularity", (a,), "gamma gamma(a) != gamma delta(a) - delta delta(a)")
            if dd - gd != H.delta[H.gamma[a]]:
                report.add("globularity", (a,), "delta gamma(a) != delta delta(a) - gamma delta(a)")
    # strictness
    for k in range(0, H.dim + 1):
        up = upper_order(H, k)
        for a in H.faces(k):
            if up.lt(a, a):
                report.add("strictness", (a,), f"{a} <+ {a} at dim {k}")
        if k == 0:
            for a in H.faces(0):
                for b in H.faces(0):
                    if a < b and not up.comparable(a, b):
                        report.add("strictness", (a, b), "dim-0 faces not <+-comparable")
    # disjointness
    for k in range(1, H.dim + 1):
        up = upper_order(H, k)
        low = lower_order(H, k)
        for a in H.faces(k):
            for b in H.faces(k):
                if a < b and up.comparable(a, b) and low.comparable(a, b):
                    report.add("disjointness", (a, b), "pair comparable in both orders")
    # pencil linearity
    for k in range(0, H.dim):
        up = upper_order(H, k + 1)
        for x in H.faces(k):
            gp = [a for a in H.faces(k + 1) if H.gamma[a] == x]
            dp = [a for a in H.faces(k + 1) if x in H.delta[a]]
            for pencil, tag in ((gp, "gamma"), (dp, "delta")):
                for a in pencil:
                    for b in pencil:
                        if a < b and not up.comparable(a, b):
                            report.add(
                                "pencil-linearity",
                                (x, a, b),
                                f"{tag}-pencil over {x} not linear",
                            )
    return report


def size(H: Hypergraph) -> tuple[int, ...]:
    out = []
    for k in range(0, H.dim + 1):
        free = set(H.faces(k)) - delta_set(H, H.faces(k + 1))
        out.append(len(free))
    return tuple(out)


def is_opetope(H: Hypergraph) -> bool:
    if not is_opetopic_cardinal(H).ok:
        return False
    return all(n <= 1 for n in size(H))


# -- subobjects, duals ------------------------------------------------------


def generated_sub(H: Hypergraph, x: str, name: str | None = None) -> Hypergraph:
    """Least sub-hypergraph containing x (closure under gamma and delta)."""
    keep: set[str] = set()
    stack = [x]
    while stack:
        y = stack.pop()
        if y in keep:
            continue
        keep.add(y)
        if H.dim_of[y] > 0:
            stack.append(H.gamma[y])
            stack.extend(H.delta[y])
    return H.restrict(keep, name or f"{H.name}[{x}]")


def dual(P: Hypergraph, name: str | None = None) -> Hypergraph:
    """Swap gamma and delta on dimension-1 faces only."""
    gamma = dict(P.gamma)
    delta = dict(P.delta)
    for a in P.faces(1):
        (s,) = P.delta[a]
        gamma[a] = s
        delta[a] = frozenset({P.gamma[a]})
    return Hypergraph(name or f"{P.name}^op", P.grades, gamma, delta)


# -- face classification over the top face ---------------------------------


def face_type(P: Hypergraph, x: str) -> str:
    """Classify x as gamma-type, iota-type, or delta-type relative to the top
    face: every k-face is the k-th codomain iterate of the top face, an
    internal face of the iterate two up, or a domain face of the iterate one up."""
    m = P.top()
    k = P.dim_of[x]
    n = P.dim_of[m]
    if x == iterated_codomain(P, m, k):
        return "gamma"
    if k + 2 <= n and x in iota_faces(P, iterated_codomain(P, m, k + 2)):
        return "iota"
    if k + 1 <= n and x in P.delta[iterated_codomain(P, m, k + 1)]:
        return "delta"
    raise ValueError(f"{x} escapes the face classification of {P.name}")
