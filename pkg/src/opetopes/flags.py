"""Flags, punctured flags, signs, pencil orders, the flag order, endpoints,
and the successor function with its six-kind classification.

A flag is a descending chain of faces [x_m, ..., x_l], each entry in the
boundary of the next one up, stored top-down as a tuple of face ids. A
punctured flag (p-flag) replaces one entry by the dummy token "0". The flat
tokens -x / +x act as sentinels below the initial and terminal flags.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .core import (
    AxiomReport,
    Hypergraph,
    boundary,
    dual,
    iterated_codomain,
    lt_plus,
    transitive_closure,
)

DUMMY = "0"

Entries = tuple[str, ...]


@dataclass(frozen=True)
class Flat:
    """Flat cylinder face: a signed copy of a base face of P."""

    sign: str  # "-" | "+"
    base: str

    def __str__(self) -> str:
        return f"{self.sign}{self.base}"


# -- literals ---------------------------------------------------------------


def parse_flag(text: str) -> Entries:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"flag literal must be bracketed: {text!r}")
    entries = tuple(t.strip() for t in text[1:-1].split(","))
    if any(not t for t in entries):
        raise ValueError(f"empty entry in flag literal {text!r}")
    return entries


def format_flag(entries: Entries) -> str:
    return "[" + ",".join(entries) + "]"


# -- basic flag structure ---------------------------------------------------


def is_pflag(entries: Entries) -> bool:
    return DUMMY in entries


def flag_dim(entries: Entries) -> int:
    """Dimension of a (p-)flag as a cylinder face: non-dummy entry count."""
    return sum(1 for e in entries if e != DUMMY)


def top_face(entries: Entries) -> str:
    return entries[0]


def check_flag(P: Hypergraph, entries: Entries, bottom: int = 0) -> None:
    levels = [P.dim_of[e] for e in entries]
    k = levels[0]
    if levels != list(range(k, bottom - 1, -1)):
        raise ValueError(f"{format_flag(entries)}: entries are not consecutive dimensions")
    for hi, lo in zip(entries, entries[1:]):
        if lo not in boundary(P, hi):
            raise ValueError(f"{format_flag(entries)}: {lo} not in boundary of {hi}")


def sign(P: Hypergraph, entries: Entries) -> int:
    """+1 for an even number of delta steps down the chain, -1 for odd."""
    s = 1
    for hi, lo in zip(entries, entries[1:]):
        if lo == P.gamma[hi]:
            continue
        if lo in P.delta[hi]:
            s = -s
        else:
            raise ValueError(f"{lo} not adjacent to {hi}")
    return s


def low_level(P: Hypergraph, entries: Entries) -> int | None:
    """ll: the highest level i < k-1 whose entry one up is a delta face of the
    entry two up; None when no level qualifies."""
    k = P.dim_of[entries[0]]
    best = None
    for i in range(k - 1):
        x_up2 = entries[k - (i + 2)]
        x_up1 = entries[k - (i + 1)]
        if x_up1 in P.delta[x_up2]:
            best = i
    return best


def entry_at(entries: Entries, level: int, top_dim: int) -> str:
    return entries[top_dim - level]


# -- pencil order -----------------------------------------------------------


def pencil_lt(P: Hypergraph, x: str, a: str, b: str) -> bool:
    if a == b:
        return False
    if P.gamma[b] == x and x in P.delta[a]:
        return True
    if x in P.delta[a] and x in P.delta[b] and lt_plus(P, a, b):
        return True
    if P.gamma[a] == x == P.gamma[b] and lt_plus(P, b, a):
        return True
    return False


def pencil(P: Hypergraph, x: str) -> list[str]:
    k = P.dim_of[x]
    members = [a for a in P.faces(k + 1) if x in boundary(P, a)]
    for a in members:
        for b in members:
            if a != b and not pencil_lt(P, x, a, b) and not pencil_lt(P, x, b, a):
                raise ValueError(f"pencil over {x} not linear at {a},{b}")
    return sorted(members, key=cmp_to_key(lambda a, b: -1 if pencil_lt(P, x, a, b) else 1))


# -- flag order -------------------------------------------------------------


def flag_lt(P: Hypergraph, f: Entries, g: Entries, bottom: int = 0) -> bool:
    if f == g:
        return False
    if len(f) != len(g) or P.dim_of[f[0]] != P.dim_of[g[0]]:
        raise ValueError("flags live in different flag sets")
    top = P.dim_of[f[0]]
    k = None
    for level in range(bottom, top + 1):
        if entry_at(f, level, top) != entry_at(g, level, top):
            k = level
            break
    if k is None:
        return False
    xk, yk = entry_at(f, k, top), entry_at(g, k, top)
    if k == 0:
        return lt_plus(P, yk, xk)
    prefix = f[top - k + 1 :]  # [x_{k-1}, ..., x_bottom], shared by f and g
    if sign(P, prefix) == 1:
        return pencil_lt(P, f[top - k + 1], xk, yk)
    return pencil_lt(P, f[top - k + 1], yk, xk)


def flag_cmp(P: Hypergraph, f: Entries, g: Entries, bottom: int = 0) -> int:
    if f == g:
        return 0
    return -1 if flag_lt(P, f, g, bottom) else 1


def sort_flags(P: Hypergraph, flags: list[Entries], bottom: int = 0) -> list[Entries]:
    return sorted(flags, key=cmp_to_key(lambda f, g: flag_cmp(P, f, g, bottom)))


# -- enumeration ------------------------------------------------------------


def enumerate_flags(
    P: Hypergraph, top: str, bottom: int = 0, over: str | None = None
) -> list[Entries]:
    """All flags under `top` down to level `bottom` (ending at `over` when
    given), listed in flag order."""
    chains: list[list[str]] = [[top]]
    level = P.dim_of[top]
    while level > bottom:
        chains = [c + [b] for c in chains for b in sorted(boundary(P, c[-1]))]
        level -= 1
    out = [tuple(c) for c in chains if over is None or c[-1] == over]
    return sort_flags(P, out, bottom)


def maximal_flags(P: Hypergraph) -> list[Entries]:
    return enumerate_flags(P, P.top(), 0)


# -- endpoints --------------------------------------------------------------


def _gamma_chain(P: Hypergraph, top: str, down_to: int) -> list[str]:
    chain = [top]
    while P.dim_of[chain[-1]] > down_to:
        chain.append(P.gamma[chain[-1]])
    return chain


def _unique(candidates: list[str], what: str) -> str:
    if len(candidates) != 1:
        raise ValueError(f"expected a unique {what}, got {candidates}")
    return candidates[0]


def initial_flag(P: Hypergraph, top: str | None = None, over: str | None = None) -> Entries:
    """The first flag under `top` (default: the top face), optionally over a
    fixed bottom face: the all-gamma chain, or its delta-variant one level
    above an iota/delta-type bottom face."""
    x_n = top or P.top()
    if over is None:
        return tuple(_gamma_chain(P, x_n, 0))
    from .core import face_type

    l = P.dim_of[over]
    n = P.dim_of[x_n]
    if l >= n:
        if over != x_n:
            raise ValueError(f"{over} is not under {x_n}")
        return (x_n,)
    if l == n - 1:
        if over not in boundary(P, x_n):
            raise ValueError(f"{over} is not under {x_n}")
        return (x_n, over)
    kind = face_type(P.restrict(sorted(_occurrence(P, x_n)), "sub"), over)
    g2 = iterated_codomain(P, x_n, l + 2)
    if kind == "gamma":
        return tuple(_gamma_chain(P, x_n, l))
    x_l1 = _unique([d for d in P.delta[g2] if over in P.delta[d]], f"delta face over {over}")
    return tuple(_gamma_chain(P, x_n, l + 2) + [x_l1, over])


def terminal_flag(P: Hypergraph, top: str | None = None, over: str | None = None) -> Entries:
    """The last flag under `top`, optionally over a fixed bottom face."""
    x_n = top or P.top()
    n = P.dim_of[x_n]
    if over is None:
        if n == 0:
            return (x_n,)
        chain = _gamma_chain(P, x_n, 1)
        (d,) = P.delta[chain[-1]]
        return tuple(chain + [d])
    from .core import face_type

    l = P.dim_of[over]
    if l >= n:
        if over != x_n:
            raise ValueError(f"{over} is not under {x_n}")
        return (x_n,)
    if l == n - 1:
        if over not in boundary(P, x_n):
            raise ValueError(f"{over} is not under {x_n}")
        return (x_n, over)
    kind = face_type(P.restrict(sorted(_occurrence(P, x_n)), "sub"), over)
    g2 = iterated_codomain(P, x_n, l + 2)
    if kind == "delta":
        return tuple(_gamma_chain(P, x_n, l + 1) + [over])
    x_l1 = _unique([d for d in P.delta[g2] if P.gamma[d] == over], f"delta face onto {over}")
    return tuple(_gamma_chain(P, x_n, l + 2) + [x_l1, over])


def _occurrence(P: Hypergraph, x: str) -> set[str]:
    keep: set[str] = set()
    stack = [x]
    while stack:
        y = stack.pop()
        if y in keep:
            continue
        keep.add(y)
        if P.dim_of[y] > 0:
            stack.append(P.gamma[y])
            stack.extend(P.delta[y])
    return keep


# -- successor --------------------------------------------------------------


def _candidates_at(P: Hypergraph, f: Entries, level: int) -> list[str]:
    """Faces eligible at `level` keeping all other entries of f: adjacent to
    the entry above and (virtually, at level 0) to the entry below, listed in
    the order the flag order uses at this level."""
    top = P.dim_of[f[0]]
    above = entry_at(f, level + 1, top)
    below = entry_at(f, level - 1, top) if level > 0 else None
    cand = [y for y in boundary(P, above) if below is None or below in boundary(P, y)]
    if level == 0:
        # over the virtual -1-dimensional target, the pencil order is the
        # reversed upper order on vertices
        return sorted(cand, key=cmp_to_key(lambda a, b: -1 if lt_plus(P, b, a) else 1))
    return sorted(cand, key=cmp_to_key(lambda a, b: -1 if pencil_lt(P, below, a, b) else 1))


def next_flag(P: Hypergraph, f: Entries) -> Entries:
    """The flag-order successor, computed as the high or low neighbour."""
    top = P.dim_of[f[0]]
    if f == terminal_flag(P, f[0]):
        raise ValueError(f"{format_flag(f)} is the terminal flag")
    s = sign(P, f)
    if s == 1:
        level = top - 1
    else:
        level = low_level(P, f)
        if level is None:
            raise ValueError(f"{format_flag(f)} has no low level")
    prefix_sign = 1 if level == 0 else sign(P, f[top - level + 1 :])
    order = _candidates_at(P, f, level)
    pos = order.index(entry_at(f, level, top))
    step = 1 if prefix_sign == 1 else -1
    if not 0 <= pos + step < len(order):
        raise ValueError(f"{format_flag(f)} has no neighbour at level {level}")
    y = order[pos + step]
    g = list(f)
    g[top - level] = y
    return tuple(g)


_KIND_TABLE = {
    (1, "delta", "gamma", "delta", "delta"): "delta",
    (1, "delta", "delta", "delta", "gamma"): "delta-gamma",
    (1, "gamma", "delta", "gamma", "gamma"): "gamma",
    (-1, "gamma", "delta", "delta", "delta"): "inverse-delta",
    (-1, "delta", "delta", "gamma", "delta"): "inverse-gamma-delta",
    (-1, "delta", "gamma", "gamma", "gamma"): "inverse-gamma",
}


def successor_kind(P: Hypergraph, f: Entries) -> tuple[str, str]:
    """Classify the step from f to its successor by the four adjacency
    relations around the changed level; high when the top-1 level changes."""
    g = next_flag(P, f)
    top = P.dim_of[f[0]]
    level = next(l for l in range(top + 1) if entry_at(f, l, top) != entry_at(g, l, top))
    xk, yk = entry_at(f, level, top), entry_at(g, level, top)
    above = entry_at(f, level + 1, top)

    def rel(lo: str, hi: str) -> str:
        return "gamma" if P.gamma[hi] == lo else "delta"

    if level == 0:
        low_l = low_r = "gamma"  # virtual -1-dimensional target
    else:
        below = entry_at(f, level - 1, top)
        low_l, low_r = rel(below, xk), rel(below, yk)
    prefix_sign = 1 if level == 0 else sign(P, f[top - level + 1 :])
    key = (prefix_sign, rel(xk, above), rel(yk, above), low_l, low_r)
    if key not in _KIND_TABLE:
        raise ValueError(f"unclassifiable successor step {key} at {format_flag(f)}")
    return _KIND_TABLE[key], ("high" if level == top - 1 else "low")


def successor_chain(P: Hypergraph, top: str | None = None) -> list[Entries]:
    """The chain from the initial flag to the terminal flag via next_flag."""
    x = top or P.top()
    chain = [initial_flag(P, x)]
    last = terminal_flag(P, x)
    while chain[-1] != last:
        chain.append(next_flag(P, chain[-1]))
        if len(chain) > 10_000:
            raise RuntimeError("successor chain does not terminate")
    return chain


# -- truncation, extension, intersection ------------------------------------


def truncate(P: Hypergraph, f: Entries, k: int) -> Entries:
    top = P.dim_of[f[0]]
    if not 0 <= k <= top:
        raise ValueError(f"cannot truncate to level {k}")
    return f[top - k :]


def extend(P: Hypergraph, f: Entries, x: str) -> Entries:
    if x not in boundary(P, f[-1]):
        raise ValueError(f"{x} not in boundary of {f[-1]}")
    return f + (x,)


def intersect_consecutive(P: Hypergraph, f: Entries, g: Entries) -> Entries:
    """The p-flag common to a flag and its successor: the dummy marks the one
    level where they differ."""
    if next_flag(P, f) != g:
        raise ValueError("flags are not consecutive")
    out = tuple(a if a == b else DUMMY for a, b in zip(f, g))
    if out.count(DUMMY) != 1:
        raise ValueError("consecutive flags differ at more than one level")
    return out


# -- punctured flags --------------------------------------------------------


def puncture_level(P: Hypergraph, z: Entries) -> int:
    top = P.dim_of[z[0]] if z[0] != DUMMY else None
    if top is None:
        raise ValueError("p-flag with dummy on top")
    i = z.index(DUMMY)
    return top - i


def is_high_pflag(P: Hypergraph, z: Entries) -> bool:
    return puncture_level(P, z) == P.dim_of[z[0]] - 1


def flag_high(P: Hypergraph, f: Entries) -> Entries:
    """Puncture at the level below the top."""
    if len(f) < 2:
        raise ValueError("flag too short to puncture")
    return (f[0], DUMMY) + f[2:]


def flag_low(P: Hypergraph, f: Entries):
    """Puncture at the low level; the initial and terminal flags fall off the
    ends onto the flat sentinels."""
    if f == initial_flag(P, f[0]):
        return Flat("-", f[0])
    if f == terminal_flag(P, f[0]):
        return Flat("+", f[0])
    ll = low_level(P, f)
    if ll is None:
        raise ValueError(f"{format_flag(f)} has no low level")
    top = P.dim_of[f[0]]
    i = top - ll
    return f[:i] + (DUMMY,) + f[i + 1 :]


def drop_top(P: Hypergraph, z: Entries) -> Entries:
    """The side face: remove the top entry of a flag, or the top entry and
    the dummy of a high p-flag."""
    if DUMMY not in z:
        return z[1:]
    if not is_high_pflag(P, z):
        raise ValueError("side face only defined for flags and high p-flags")
    return z[2:]


def maximal_pflags(P: Hypergraph, top: str | None = None) -> set[Entries]:
    x = top or P.top()
    out: set[Entries] = set()
    for f in enumerate_flags(P, x, 0):
        if len(f) >= 2:
            out.add(flag_high(P, f))
        lo = flag_low(P, f)
        if not isinstance(lo, Flat):
            out.add(lo)
    return out


def pflag_order(P: Hypergraph, top: str | None = None) -> list:
    """Maximal p-flags with the two flat sentinels, sorted by the transitive
    closure of the generated high/low pairs; asserted linear."""
    x = top or P.top()
    if P.dim_of[x] == 0:
        return [Flat("-", x), Flat("+", x)]
    nodes: dict = {}
    pairs = set()

    def key(v):
        return ("flat", v.sign, v.base) if isinstance(v, Flat) else ("p", v)

    for f in enumerate_flags(P, x, 0):
        hi, lo = flag_high(P, f), flag_low(P, f)
        nodes[key(hi)], nodes[key(lo)] = hi, lo
        if sign(P, f) == 1:
            pairs.add((key(lo), key(hi)))
        else:
            pairs.add((key(hi), key(lo)))
    closed = transitive_closure(pairs)
    for a in nodes:
        if (a, a) in closed:
            raise ValueError("p-flag order has a cycle")
    for a in nodes:
        for b in nodes:
            if a != b and (a, b) not in closed and (b, a) not in closed:
                raise ValueError(f"p-flag order not linear at {a}, {b}")
    ordered = sorted(nodes, key=lambda a: sum(1 for b in nodes if (b, a) in closed))
    return [nodes[a] for a in ordered]


# -- dual compatibility -----------------------------------------------------


def dual_flag_suite(P: Hypergraph) -> AxiomReport:
    """Flags and p-flags agree with the dual opetope: same sets, negated signs
    above dimension 1, pencil order reversed over vertices and kept above,
    and the maximal flag and p-flag orders reversed."""
    report = AxiomReport()
    D = dual(P)
    flags_p = maximal_flags(P)
    flags_d = maximal_flags(D)
    if set(flags_p) != set(flags_d):
        report.add("dual-flag-sets", (P.name,), "maximal flag sets differ")
    if maximal_pflags(P) != maximal_pflags(D):
        report.add("dual-pflag-sets", (P.name,), "maximal p-flag sets differ")
    for f in flags_p:
        if flag_dim(f) > 2 and sign(P, f) != -sign(D, f):
            report.add("dual-sign", f, "sign not negated")
    for x in P.all_faces():
        if P.dim_of[x] >= P.dim:
            continue
        try:
            pp, pd = pencil(P, x), pencil(D, x)
        except ValueError as exc:
            report.add("dual-pencil", (x,), str(exc))
            continue
        if set(pp) != set(pd):
            report.add("dual-pencil-set", (x,), "pencil membership differs")
        if P.dim_of[x] == 0:
            if pp != list(reversed(pd)):
                report.add("dual-pencil-order", (x,), "vertex pencil not reversed")
        elif pp != pd:
            report.add("dual-pencil-order", (x,), "higher pencil not preserved")
    if flags_p != list(reversed(flags_d)):
        report.add("dual-flag-order", (P.name,), "maximal flag order not reversed")
    if P.dim >= 1:
        op, od = pflag_order(P), pflag_order(D)

        def strip(v):
            return ("flat", v.base) if isinstance(v, Flat) else v

        if [strip(v) for v in op] != [strip(v) for v in reversed(od)]:
            report.add("dual-pflag-order", (P.name,), "p-flag order not reversed")
    return report
