"""Exhaustive ground truth for small graphs.

Enumerates every cut side not containing the root (2^(n-1) - 1 subsets)
with Gray-code incremental boundary updates, yielding the global mincut
value, the full mincut family, and the unique minimal mincut per vertex
and per edge.  Used to certify the fast pipeline on desk-scale instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import WeightedGraph

ORACLE_LIMIT = 20


class TooLarge(Exception):
    pass


class MinimalMincutNotUnique(Exception):
    pass


@dataclass
class MincutInventory:
    lam: int
    all_mincuts: list[frozenset[int]]
    minimal_by_vertex: dict[int, frozenset[int] | None]
    minimal_by_edge: dict[int, frozenset[int] | None]


def brute_mincuts(g: WeightedGraph, limit: int = ORACLE_LIMIT) -> MincutInventory:
    n = g.n
    if n > limit:
        raise TooLarge(f"oracle limited to {limit} vertices, got {n}")
    others = [v for v in range(n) if v != g.root]
    k = len(others)

    # weighted adjacency matrix restricted to distinct endpoints
    wadj = [[0] * n for _ in range(n)]
    wdeg = [0] * n
    for u, v, w in g.edges:
        if u != v:
            wadj[u][v] += w
            wadj[v][u] += w
            wdeg[u] += w
            wdeg[v] += w

    in_side = bytearray(n)
    # to_side[v] = total weight from v into the current side
    to_side = [0] * n
    boundary = 0
    lam = None
    mincuts: list[frozenset[int]] = []
    side: set[int] = set()

    for code in range(1, 1 << k):
        flip = others[(code & -code).bit_length() - 1]
        if in_side[flip]:
            boundary -= wdeg[flip] - 2 * to_side[flip]
            in_side[flip] = 0
            side.discard(flip)
            delta = -1
        else:
            boundary += wdeg[flip] - 2 * to_side[flip]
            in_side[flip] = 1
            side.add(flip)
            delta = 1
        row = wadj[flip]
        for v in range(n):
            if row[v]:
                to_side[v] += delta * row[v]
        if not side:
            continue
        if lam is None or boundary < lam:
            lam = boundary
            mincuts = [frozenset(side)]
        elif boundary == lam:
            mincuts.append(frozenset(side))

    mincuts = sorted(set(mincuts), key=lambda s: (len(s), sorted(s)))

    minimal_by_vertex: dict[int, frozenset[int] | None] = {}
    for v in range(n):
        if v == g.root:
            minimal_by_vertex[v] = None
            continue
        containing = [s for s in mincuts if v in s]
        minimal_by_vertex[v] = _unique_smallest(containing, f"vertex {v}")

    minimal_by_edge: dict[int, frozenset[int] | None] = {}
    for eid, (u, v, _) in enumerate(g.edges):
        if g.root in (u, v):
            minimal_by_edge[eid] = None
            continue
        containing = [s for s in mincuts if u in s and v in s]
        minimal_by_edge[eid] = _unique_smallest(containing, f"edge {eid}")

    return MincutInventory(lam, mincuts, minimal_by_vertex, minimal_by_edge)


def _unique_smallest(cuts: list[frozenset[int]], what: str) -> frozenset[int] | None:
    if not cuts:
        return None
    smallest = min(len(s) for s in cuts)
    tied = [s for s in cuts if len(s) == smallest]
    if len(tied) != 1:
        raise MinimalMincutNotUnique(f"{what}: {len(tied)} smallest mincuts of size {smallest}")
    return tied[0]


def minimal_mincut_of_set(inv: MincutInventory, vertices) -> frozenset[int] | None:
    """Unique smallest mincut containing all given vertices, if any."""
    vs = set(vertices)
    containing = [s for s in inv.all_mincuts if vs <= s]
    return _unique_smallest(containing, f"set {sorted(vs)}")


@dataclass
class VerifyReport:
    ok: bool
    missing: list[frozenset[int]]
    extra: list[frozenset[int]]
    detail: str = ""

    def __str__(self):
        if self.ok:
            return "PASS"
        lines = ["FAIL"]
        for s in self.missing:
            lines.append(f"  missing mincut {sorted(s)}")
        for s in self.extra:
            lines.append(f"  extra cut {sorted(s)}")
        if self.detail:
            lines.append("  " + self.detail)
        return "\n".join(lines)


def verify_cactus(g: WeightedGraph, cactus, limit: int = ORACLE_LIMIT) -> VerifyReport:
    from .cactus import enumerate_cactus_cuts

    inv = brute_mincuts(g, limit)
    got = set(enumerate_cactus_cuts(cactus))
    want = set(inv.all_mincuts)
    missing = sorted(want - got, key=lambda s: (len(s), sorted(s)))
    extra = sorted(got - want, key=lambda s: (len(s), sorted(s)))
    detail = ""
    if cactus.lam != inv.lam:
        detail = f"lambda mismatch: cactus {cactus.lam}, oracle {inv.lam}"
    return VerifyReport(not missing and not extra and not detail, missing, extra, detail)


def verify_labels(g: WeightedGraph, vertex_cuts: dict[int, frozenset[int] | None],
                  edge_cuts: dict[int, frozenset[int] | None],
                  limit: int = ORACLE_LIMIT) -> VerifyReport:
    """Compare materialized minimal-mincut labels to the oracle's."""
    inv = brute_mincuts(g, limit)
    bad = []
    for v in range(g.n):
        if v == g.root:
            continue
        want = inv.minimal_by_vertex[v]
        got = vertex_cuts.get(v)
        if want != got:
            bad.append(f"vertex {v}: got {got and sorted(got)}, want {want and sorted(want)}")
    for eid in range(g.m):
        want = inv.minimal_by_edge[eid]
        got = edge_cuts.get(eid)
        if want != got:
            bad.append(f"edge {eid}: got {got and sorted(got)}, want {want and sorted(want)}")
    return VerifyReport(not bad, [], [], "; ".join(bad))
