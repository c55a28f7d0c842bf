"""Constant-size cut labels and the per-item combination across trees.

A label (kind, v, w, tree) describes a cut through subtree ranges of one
packing tree:

  type1    v_down
  comp2    v_down minus w_down   (w a strict descendant of v)
  incomp2  v_down union w_down   (v, w incomparable)

Size, membership and materialization are preorder-range arithmetic on the
owning tree, so every query is O(1) or output-sensitive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import WeightedGraph
from .tree import RootedSpanningTree

_KIND_RANK = {"type1": 0, "comp2": 1, "incomp2": 2}


@dataclass(frozen=True, order=False)
class CutLabel:
    kind: str  # type1 | comp2 | incomp2
    v: int
    w: int | None
    tree_id: int

    def key(self):
        return (_KIND_RANK[self.kind], self.tree_id, self.v, -1 if self.w is None else self.w)


def label_size(label: CutLabel, trees: list[RootedSpanningTree]) -> int:
    t = trees[label.tree_id]
    if label.kind == "type1":
        return t.subtree_size[label.v]
    if label.kind == "comp2":
        return t.subtree_size[label.v] - t.subtree_size[label.w]
    return t.subtree_size[label.v] + t.subtree_size[label.w]


def label_contains(label: CutLabel, x: int, trees: list[RootedSpanningTree]) -> bool:
    t = trees[label.tree_id]
    if label.kind == "type1":
        return t.is_ancestor(label.v, x)
    if label.kind == "comp2":
        return t.is_ancestor(label.v, x) and not t.is_ancestor(label.w, x)
    return t.is_ancestor(label.v, x) or t.is_ancestor(label.w, x)


def label_weight(label: CutLabel, g: WeightedGraph, trees: list[RootedSpanningTree]) -> int:
    """Exact cut weight by direct evaluation (O(m); used by verification)."""
    total = 0
    for u, v, w in g.edges:
        if u != v and label_contains(label, u, trees) != label_contains(label, v, trees):
            total += w
    return total


def materialize(label: CutLabel, trees: list[RootedSpanningTree]) -> frozenset[int]:
    t = trees[label.tree_id]
    pre = t.pre_order
    p2v = t.pre_to_vertex

    def rng(v):
        lo = pre[v]
        return set(p2v[lo: lo + t.subtree_size[v]])

    if label.kind == "type1":
        return frozenset(rng(label.v))
    if label.kind == "comp2":
        return frozenset(rng(label.v) - rng(label.w))
    return frozenset(rng(label.v) | rng(label.w))


def combine_candidates(candidates: list[tuple[CutLabel, int]], lam: int,
                       trees: list[RootedSpanningTree]) -> CutLabel | None:
    """Pick the smallest-size candidate whose weight equals lam.

    Each candidate carries the exact cut weight its producer computed; the
    filter re-checks it against lam before any size comparison so a single
    malformed candidate cannot displace the true minimal mincut.  Ties
    break on (kind, tree, v, w) for reproducible output.
    """
    best: CutLabel | None = None
    best_key = None
    for label, weight in candidates:
        if weight != lam:
            continue
        key = (label_size(label, trees), *label.key())
        if best_key is None or key < best_key:
            best_key = key
            best = label
    return best
