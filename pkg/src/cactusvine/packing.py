"""Spanning tree packings: every global mincut should 2-respect some tree.

Two strategies:

  greedy      multiplicative-weights packing; each round takes a minimum
              spanning tree under current edge loads, then inflates the
              loads of the edges it used.  Verified a posteriori where an
              oracle is available, retried with a fresh seed otherwise.

  exhaustive  desk scale only: every oracle mincut X gets a witness tree
              (spanning forests of both sides joined by one crossing edge,
              so X is 1-respected), then a greedy set cover selects a
              small subset that still 2-respects every mincut.  Coverage
              holds by construction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .graph import WeightedGraph
from .oracle import ORACLE_LIMIT, brute_mincuts
from .tree import RootedSpanningTree, build_rooted_tree


class PackingUnverifiable(Exception):
    pass


@dataclass
class TreePacking:
    trees: list[RootedSpanningTree]
    strategy: str
    seed: int = 0
    rounds: int = 0
    mincuts_used: list[frozenset[int]] = field(default_factory=list, repr=False)


def default_rounds(n: int) -> int:
    return max(1, math.ceil(3 * math.log(max(2, n))))


def respects_count(tree: RootedSpanningTree, members) -> int:
    s = set(members)
    cnt = 0
    for eid in tree.tree_edges:
        u, v, _ = tree.graph.edges[eid]
        if (u in s) != (v in s):
            cnt += 1
    return cnt


def verify_packing(packing: TreePacking, mincuts) -> tuple[bool, frozenset[int] | None]:
    """True iff every mincut crosses at most two tree edges of some tree;
    otherwise also return the first violating mincut."""
    for s in mincuts:
        if not any(respects_count(t, s) <= 2 for t in packing.trees):
            return False, frozenset(s)
    return True, None


class _UnionFind:
    def __init__(self, n: int):
        self.p = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.p[root] != root:
            root = self.p[root]
        while self.p[x] != root:
            self.p[x], x = root, self.p[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.p[rb] = ra
        return True


def _kruskal(g: WeightedGraph, order: list[int]) -> list[int]:
    uf = _UnionFind(g.n)
    out = []
    for eid in order:
        u, v, _ = g.edges[eid]
        if u != v and uf.union(u, v):
            out.append(eid)
            if len(out) == g.n - 1:
                break
    return out


def pack_trees(g: WeightedGraph, strategy: str = "greedy", rounds: int | None = None,
               seed: int = 0) -> TreePacking:
    if strategy == "exhaustive":
        return _pack_exhaustive(g)
    if strategy != "greedy":
        raise ValueError(f"unknown packing strategy {strategy!r}")
    if rounds is None:
        rounds = default_rounds(g.n)
    rng = random.Random(seed)
    tiebreak = list(range(g.m))
    rng.shuffle(tiebreak)
    load = [1.0 / w for _, _, w in g.edges]
    seen: set[frozenset[int]] = set()
    trees: list[RootedSpanningTree] = []
    for _ in range(rounds):
        order = sorted(range(g.m), key=lambda e: (load[e], tiebreak[e]))
        edges = _kruskal(g, order)
        key = frozenset(edges)
        if key not in seen:
            seen.add(key)
            trees.append(build_rooted_tree(g, edges))
        for eid in edges:
            w = g.edges[eid][2]
            load[eid] *= 1.0 + 1.0 / (2.0 * w * rounds)
    return TreePacking(trees, "greedy", seed=seed, rounds=rounds)


def _pack_exhaustive(g: WeightedGraph) -> TreePacking:
    if g.n > ORACLE_LIMIT:
        raise PackingUnverifiable(
            f"exhaustive packing needs the oracle; n={g.n} exceeds {ORACLE_LIMIT}")
    inv = brute_mincuts(g)
    mincuts = inv.all_mincuts

    candidates: list[RootedSpanningTree] = []
    seen: set[frozenset[int]] = set()
    for s in mincuts:
        edges = _witness_tree_edges(g, s)
        key = frozenset(edges)
        if key not in seen:
            seen.add(key)
            candidates.append(build_rooted_tree(g, edges))

    # greedy set cover over the 2-respect relation
    uncovered = set(range(len(mincuts)))
    covers = [
        {i for i in uncovered if respects_count(t, mincuts[i]) <= 2}
        for t in candidates
    ]
    chosen: list[RootedSpanningTree] = []
    while uncovered:
        best = max(range(len(candidates)), key=lambda c: (len(covers[c] & uncovered), -c))
        gain = covers[best] & uncovered
        if not gain:
            raise PackingUnverifiable("set cover stalled; witness trees incomplete")
        chosen.append(candidates[best])
        uncovered -= gain
    return TreePacking(chosen, "exhaustive", mincuts_used=mincuts)


def _witness_tree_edges(g: WeightedGraph, side: frozenset[int]) -> list[int]:
    """Spanning tree crossing ``side`` exactly once: both induced sides of a
    mincut are connected, so forest each side and add one crossing edge."""
    uf = _UnionFind(g.n)
    out = []
    crossing = None
    for eid, (u, v, _) in enumerate(g.edges):
        if u == v:
            continue
        if (u in side) != (v in side):
            if crossing is None:
                crossing = eid
            continue
        if uf.union(u, v):
            out.append(eid)
    assert crossing is not None
    u, v, _ = g.edges[crossing]
    ok = uf.union(u, v)
    assert ok, "mincut side induced a disconnected subgraph"
    out.append(crossing)
    assert len(out) == g.n - 1, "mincut sides not internally connected"
    return out
