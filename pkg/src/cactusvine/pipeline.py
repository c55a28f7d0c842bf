"""End-to-end orchestration: packing, labeling per tree, combination,
cactus construction, with bounded fresh-seed retries for greedy packings.

The global mincut value itself comes out of the packing: for each tree the
cheapest cut crossing at most two tree edges is computed by the same
sweeps that later produce labels, and the minimum over the packing equals
lambda whenever the packing has the 2-respecting cover property.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import comparable, incomparable, respect1
from .cactus import AlgorithmInvariantViolation, Cactus, Hierarchy, build_cactus
from .dynforest import INF
from .graph import GraphError, WeightedGraph
from .labels import CutLabel, combine_candidates
from .oracle import ORACLE_LIMIT, brute_mincuts
from .packing import TreePacking, pack_trees, verify_packing
from .tree import RootedSpanningTree
from .treectx import TreeContext

# forest values fit comfortably in signed 64-bit as long as a few times the
# total weight cannot overflow
MAX_TOTAL_WEIGHT = 1 << 59


class PackingFailed(GraphError):
    pass


@dataclass
class TreeLabels:
    tree_id: int
    ctx: TreeContext
    type1: np.ndarray      # per item: vertex or -1
    comp_upper: np.ndarray
    comp_lower: np.ndarray
    inc_v: np.ndarray
    inc_w: np.ndarray


@dataclass
class PipelineResult:
    graph: WeightedGraph
    lam: int
    packing: TreePacking
    trees: list[RootedSpanningTree]
    vertex_labels: list[CutLabel | None]
    edge_labels: list[CutLabel | None]
    cactus: Cactus
    hierarchy: Hierarchy
    per_tree: list[TreeLabels]
    seed_used: int


def tree_min_2respecting(ctx: TreeContext) -> int:
    """Cheapest cut crossing at most two edges of this tree."""
    best = None
    c1 = ctx.c1
    for v in range(ctx.n):
        if v != ctx.root:
            cand = int(c1[v])
            if best is None or cand < best:
                best = cand
    forest = ctx.make_forest("subtree_cut")
    forest.add_path(ctx.root, INF)
    comp = comparable.min_comparable_value(ctx, forest)
    if comp is not None:
        best = comp if best is None else min(best, comp)
    inc = incomparable.min_incomparable_value(ctx, forest)
    if inc is not None:
        best = inc if best is None else min(best, inc)
    return best


def label_tree(ctx: TreeContext, tree_id: int, lam: int) -> TreeLabels:
    forest = ctx.make_forest("subtree_cut")
    forest.add_path(ctx.root, INF)
    type1 = respect1.minimal_1respecting_labels(ctx, lam)
    upp, low = comparable.comparable_candidates(ctx, forest, lam)
    gv, gw, _r, _f = incomparable.incomparable_candidates(ctx, forest, lam)
    return TreeLabels(tree_id, ctx, type1, upp, low, gv, gw)


def combine_labels(g: WeightedGraph, per_tree: list[TreeLabels], lam: int,
                   trees: list[RootedSpanningTree]):
    """Per-vertex and per-edge minimal mincut labels across all trees."""
    n, m = g.n, g.m
    n_items = m + n
    per_item: list[list[tuple[CutLabel, int]]] = [[] for _ in range(n_items)]
    for tl in per_tree:
        tid = tl.tree_id
        c1 = tl.ctx.c1
        for i in range(n_items):
            v = int(tl.type1[i])
            if v >= 0 and int(c1[v]) == lam:
                per_item[i].append((CutLabel("type1", v, None, tid), lam))
            uv, lv = int(tl.comp_upper[i]), int(tl.comp_lower[i])
            if uv >= 0 and lv >= 0:
                per_item[i].append((CutLabel("comp2", uv, lv, tid), lam))
            av, aw = int(tl.inc_v[i]), int(tl.inc_w[i])
            if av >= 0 and aw >= 0:
                per_item[i].append((CutLabel("incomp2", av, aw, tid), lam))
    edge_labels = [combine_candidates(per_item[i], lam, trees) for i in range(m)]
    vertex_labels = [combine_candidates(per_item[m + u], lam, trees) for u in range(n)]
    return vertex_labels, edge_labels


def _resolve_strategy(g: WeightedGraph, strategy: str) -> str:
    if strategy == "auto":
        return "exhaustive" if g.n <= 10 else "greedy"
    return strategy


def run_pipeline(g: WeightedGraph, strategy: str = "auto", rounds: int | None = None,
                 seed: int = 0, retries: int = 3, verify_cover: bool | None = None,
                 reverse_ties: bool = False) -> PipelineResult:
    """Full computation.  Greedy packings are retried with fresh seeds when
    verification (where available) or a structural invariant fails."""
    if g.n < 2:
        raise GraphError("need at least two vertices for a cut")
    if 4 * g.total_weight() > MAX_TOTAL_WEIGHT:
        raise GraphError("total weight too large for 64-bit sweep arithmetic")
    strategy = _resolve_strategy(g, strategy)
    if verify_cover is None:
        verify_cover = strategy == "greedy" and g.n <= ORACLE_LIMIT

    last_err: Exception | None = None
    for attempt in range(max(1, retries + 1)):
        cur_seed = seed + attempt
        packing = pack_trees(g, strategy, rounds=rounds, seed=cur_seed)
        if verify_cover:
            ok, bad = verify_packing(packing, brute_mincuts(g).all_mincuts)
            if not ok:
                last_err = PackingFailed(f"mincut {sorted(bad)} not 2-respected")
                if strategy == "exhaustive":
                    raise last_err
                continue
        try:
            return _run_on_packing(g, packing, cur_seed, reverse_ties)
        except AlgorithmInvariantViolation as err:
            # a bad greedy packing shows up here as a violated invariant
            last_err = err
            if strategy == "exhaustive":
                raise
    raise PackingFailed(f"packing retries exhausted: {last_err}")


def _run_on_packing(g: WeightedGraph, packing: TreePacking, seed_used: int,
                    reverse_ties: bool = False) -> PipelineResult:
    trees = [t for t in packing.trees]
    ctxs = [TreeContext(g, t) for t in trees]
    lam = min(tree_min_2respecting(ctx) for ctx in ctxs)
    if lam <= 0:
        raise AlgorithmInvariantViolation(f"non-positive mincut value {lam}")
    per_tree = [label_tree(ctx, tid, lam) for tid, ctx in enumerate(ctxs)]
    vertex_labels, edge_labels = combine_labels(g, per_tree, lam, trees)
    cactus, hier = build_cactus(g, trees, vertex_labels, edge_labels, lam,
                                reverse_ties=reverse_ties)
    return PipelineResult(g, lam, packing, trees, vertex_labels, edge_labels,
                          cactus, hier, per_tree, seed_used)
