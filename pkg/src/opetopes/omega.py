"""Cells (S, n) over an ambient opetopic cardinal: domains, codomains,
identities, composition, and images under contraction maps.

A cell is a gamma/delta-closed subset S of the ambient together with a level
n >= dim(S); it is proper when n = dim(S).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (
    Hypergraph,
    delta_set,
    gamma_set,
    iota_set,
    is_opetopic_cardinal,
)


@dataclass(frozen=True)
class Cell:
    ambient: Hypergraph
    carrier: frozenset[str]
    level: int

    def __post_init__(self):
        missing = self.carrier - self.ambient.face_set()
        if missing:
            raise ValueError(f"carrier faces not in ambient: {sorted(missing)}")
        for x in self.carrier:
            if self.ambient.dim_of[x] > 0:
                closure = self.ambient.delta[x] | {self.ambient.gamma[x]}
                if not closure <= self.carrier:
                    raise ValueError(f"carrier not closed at {x}")
        sub = self.ambient.restrict(self.carrier, name="cell")
        report = is_opetopic_cardinal(sub)
        if not report.ok:
            raise ValueError("carrier is not an opetopic cardinal: " + report.summary())
        if self.level < self.dim_carrier:
            raise ValueError(f"level {self.level} below carrier dimension {self.dim_carrier}")

    @property
    def dim_carrier(self) -> int:
        return max((self.ambient.dim_of[x] for x in self.carrier), default=-1)

    @property
    def proper(self) -> bool:
        return self.level == self.dim_carrier

    def grade(self, k: int) -> frozenset[str]:
        return frozenset(x for x in self.carrier if self.ambient.dim_of[x] == k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cell):
            return NotImplemented
        return self.carrier == other.carrier and self.level == other.level

    def __hash__(self) -> int:
        return hash((self.carrier, self.level))

    def __repr__(self) -> str:
        return f"Cell({sorted(self.carrier)}, level={self.level})"


def _domain_carrier(c: Cell, k: int) -> frozenset[str]:
    A = c.ambient
    low = frozenset(x for x in c.carrier if A.dim_of[x] < k)
    top = c.grade(k) - gamma_set(A, c.grade(k + 1))
    return low | top


def _codomain_carrier(c: Cell, k: int) -> frozenset[str]:
    A = c.ambient
    low = frozenset(x for x in c.carrier if A.dim_of[x] < k - 1)
    top = c.grade(k) - delta_set(A, c.grade(k + 1))
    out = low | top
    if k - 1 >= 0:
        out |= c.grade(k - 1) - iota_set(A, c.grade(k + 1))
    return out


def cell_domain(c: Cell, k: int) -> Cell:
    if k >= c.level:
        raise ValueError(f"domain needs k < level, got k={k}, level={c.level}")
    return Cell(c.ambient, _domain_carrier(c, k), k)


def cell_codomain(c: Cell, k: int) -> Cell:
    if k >= c.level:
        raise ValueError(f"codomain needs k < level, got k={k}, level={c.level}")
    return Cell(c.ambient, _codomain_carrier(c, k), k)


def cell_identity(c: Cell) -> Cell:
    return Cell(c.ambient, c.carrier, c.level + 1)


def cell_compose(c1: Cell, c2: Cell, k: int) -> Cell:
    """Compose along matching k-boundaries: requires d^(k)(c1) = c^(k)(c2)."""
    if cell_domain(c1, k) != cell_codomain(c2, k):
        raise ValueError(f"boundary mismatch at k={k}")
    return Cell(c1.ambient, c1.carrier | c2.carrier, max(c1.level, c2.level))


def cell_from_faces(H: Hypergraph, faces: Iterable[str], level: int | None = None) -> Cell:
    """Cell on the gamma/delta-closure of the given faces."""
    keep: set[str] = set()
    stack = list(faces)
    while stack:
        y = stack.pop()
        if y in keep:
            continue
        keep.add(y)
        if H.dim_of[y] > 0:
            stack.append(H.gamma[y])
            stack.extend(H.delta[y])
    carrier = frozenset(keep)
    d = max((H.dim_of[x] for x in carrier), default=-1)
    return Cell(H, carrier, d if level is None else level)


def map_image_cell(h, c: Cell) -> Cell:
    """Image of a cell under a contraction map: same level, image carrier."""
    if not c.carrier <= h.source.face_set():
        raise ValueError("cell is not a cell of the map's source")
    image = frozenset(h.assignment[x] for x in c.carrier)
    return Cell(h.target, image, c.level)
