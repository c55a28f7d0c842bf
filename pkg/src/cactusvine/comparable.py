"""Minimal comparable 2-respecting mincut candidates (upper, lower) per item.

A comparable cut is w_down minus v_down for an ancestor pair.  While a
sweep climbs a decomposition path with current lower vertex v, the forest
value of each ancestor w holds the comparable precut C(w_down) +
2*C(v_down, w_down), so the cut weight is val[w] - K(v) and mincut
acceptance is an O(1) check.

Three passes per tree:

  1. highest_partners: H(v), the highest ancestor w (excluding the root)
     with w_down minus v_down a mincut; min_path from v's parent with ties
     to the highest vertex.
  2. lower_vertices: one post-order traversal over a depth-valued forest of
     currently valid lower vertices.  An edge's lower vertex is found at
     its LCA by a min-non-path query inside the detached subtree; edges
     that fail travel upward bundled in packages, one min-tree query per
     package per vertex, every edge of a resolving package sharing the
     answer.
  3. upper_vertices: per path, for each edge whose lower vertex sits here,
     the lowest acceptable partner above lca(lower, lca_e).

The root is kept saturated (INF) for the whole tree so it can never be
selected as a partner; a cut with the root as upper vertex equals the
1-respecting cut v_down and is owned by the 1-respecting pass.
"""

from __future__ import annotations

import numpy as np

from . import sweeps
from .dynforest import DynForest, INF
from .treectx import TreeContext


def _fire_new_edges(ctx: TreeContext, forest: DynForest, v: int, vprev: int | None,
                    sign: int, journal: list) -> None:
    """Add sign*2*w(e) along other->root for every item gaining a covered
    endpoint as the sweep's subtree grows from vprev_down to v_down."""
    for pos in ctx.new_positions(v, vprev):
        u = int(ctx.pre_to_vertex[pos])
        for _item, other, w in ctx.incident(u):
            if w:
                d = sign * 2 * w
                forest.add_path(other, d)
                journal.append((other, 0, -d))


def _undo(forest: DynForest, journal: list) -> None:
    for vtx, dc, df in reversed(journal):
        forest.add_path(vtx, (dc, df))


def _kernel_args(ctx: TreeContext, forest: DynForest):
    return (forest._a, forest._stk, ctx.paths_flat, ctx.paths_off, ctx.pre,
            ctx.pre_to_vertex, ctx.sz, ctx.parent,
            ctx.adj_indptr, ctx.adj_items, ctx.adj_other, ctx.item_w)


def highest_partners(ctx: TreeContext, forest: DynForest, lam: int) -> np.ndarray:
    """H(v) per vertex, or -1.  ``forest`` must hold val[w] = C(w_down)
    with the root saturated; it is restored before returning."""
    H = np.full(ctx.n, -1, dtype=np.int64)
    sweeps.k_comparable(*_kernel_args(ctx, forest), ctx.K, lam, H)
    return H


def min_comparable_value(ctx: TreeContext, forest: DynForest) -> int | None:
    """Smallest weight of any strictly-2-respecting comparable cut of the
    tree (partner below the root), or None if no ancestor pair exists."""
    none_h = np.full(ctx.n, -1, dtype=np.int64)
    best = int(sweeps.k_comparable(*_kernel_args(ctx, forest), ctx.K, -1, none_h))
    return None if best >= (1 << 62) else best


class _Package:
    """Singly-linked bag of item ids with O(1) concatenation."""

    __slots__ = ("head", "tail")

    def __init__(self):
        self.head = None
        self.tail = None

    def add(self, item: int) -> None:
        cell = [item, None]
        if self.tail is None:
            self.head = self.tail = cell
        else:
            self.tail[1] = cell
            self.tail = cell

    def concat(self, other: "_Package") -> None:
        if other.head is None:
            return
        if self.tail is None:
            self.head, self.tail = other.head, other.tail
        else:
            self.tail[1] = other.head
            self.tail = other.tail

    def __iter__(self):
        cell = self.head
        while cell is not None:
            yield cell[0]
            cell = cell[1]

    def empty(self) -> bool:
        return self.head is None


def lower_vertices(ctx: TreeContext, H: np.ndarray) -> np.ndarray:
    """Lower vertex per item (or -1) via the post-order package traversal."""
    n = ctx.n
    t = ctx.tree
    low = np.full(ctx.n_items, -1, dtype=np.int64)
    forest = ctx.make_forest("all_inf")

    items_at: list[list[int]] = [[] for _ in range(n)]
    for i in range(ctx.n_items):
        items_at[int(ctx.item_lca[i])].append(i)
    # v must be retired once the traversal passes parent(H(v))
    retire_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        h = int(H[v])
        if h >= 0 and int(ctx.parent[h]) >= 0:
            retire_at[int(ctx.parent[h])].append(v)

    def point_set(v: int, pair: tuple[int, int]) -> None:
        forest.point_set(v, int(ctx.parent[v]), pair)

    order = sorted(range(n), key=lambda v: t.post_order[v])
    packages: list[list[tuple[int, _Package]]] = [[] for _ in range(n)]
    for u in order:
        for v in t.children[u]:
            if H[v] >= 0:
                point_set(v, (0, t.depth[v]))
        for v in retire_at[u]:
            point_set(v, (1, 0))

        pending = _Package()
        p = int(ctx.parent[u])
        if p >= 0:
            forest.cut(u, p)
        for i in items_at[u]:
            q, val = forest.min_non_path_value(int(ctx.item_u[i]), int(ctx.item_v[i]))
            if q is not None and val[0] == 0:
                low[i] = q
            else:
                pending.add(i)
        for child, pkg in packages[u]:
            forest.cut(child, u)
            q, (qc, _qf) = forest.min_tree_value(u, "largest_subtree")
            if qc == 0:
                for i in pkg:
                    low[i] = q
            else:
                pending.concat(pkg)
            forest.link(child, u)
        packages[u] = []
        if p >= 0:
            forest.link(u, p)
            if not pending.empty():
                packages[p].append((u, pending))
    return low


def upper_vertices(ctx: TreeContext, forest: DynForest, lam: int, low: np.ndarray) -> np.ndarray:
    """Upper vertex per item given lower vertices; -1 where unresolved."""
    upp = np.full(ctx.n_items, -1, dtype=np.int64)
    labeled = np.nonzero(low >= 0)[0]
    if len(labeled) == 0:
        return upp
    # bucket items by their lower vertex; precompute each item's query
    # start: lca(lower, lca_e), bumped to its parent when that equals the
    # lower vertex itself (the upper vertex must lie strictly above)
    order = np.argsort(low[labeled], kind="stable")
    q_items = labeled[order]
    q_ip = np.zeros(ctx.n + 1, dtype=np.int64)
    np.cumsum(np.bincount(low[labeled], minlength=ctx.n), out=q_ip[1:])
    q_start = np.full(ctx.n_items, -1, dtype=np.int64)
    xs = ctx.tree.lca_many(low[labeled], ctx.item_lca[labeled])
    bump = xs == low[labeled]
    xs = np.where(bump, ctx.parent[xs], xs)
    q_start[labeled] = xs
    sweeps.k_upper(*_kernel_args(ctx, forest)[:7], ctx.adj_indptr, ctx.adj_items,
                   ctx.adj_other, ctx.item_w, ctx.K, lam, q_ip, q_items, q_start, upp)
    return upp


def comparable_candidates(ctx: TreeContext, forest: DynForest, lam: int):
    """(upper, lower) arrays per item; both >= 0 where a candidate exists.

    ``forest`` is the tree's main forest (val = C(w_down), root saturated).
    """
    H = highest_partners(ctx, forest, lam)
    low = lower_vertices(ctx, H)
    upp = upper_vertices(ctx, forest, lam, low)
    low = np.where(upp >= 0, low, -1)
    return upp, low
