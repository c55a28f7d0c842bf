"""Minimal incomparable 2-respecting mincut candidates (v_down U w_down).

During a deepest-first sweep of a decomposition path, the forest value of
an incomparable vertex w holds the precut C(w_down) - 2*C(v_down, w_down),
so C(v_down U w_down) = C(v_down) + val[w].  Saturating the current
vertex's root path masks ancestors (they are never valid partners) and
stays correct for the rest of the path because ancestor sets only shrink
while climbing.

Vertices: the partner r_v minimizing |w_down| is read off a min-tree query
over the forest with v's subtree detached; a preorder DFS then folds the
pairs into f(u), the minimal incomparable candidate containing u.

Edges with endpoints under different paths: the witness-set algorithm.
While climbing path P, pending edges whose outer endpoint leaves P_down
wait in a search structure keyed by the outer endpoint's preorder index;
whenever the path-outer minprecut value completes a mincut with the
current vertex, every witness's subtree interval is extracted and each
extracted edge is answered by the lowest minimum on its outer endpoint's
root path.  Edges with both endpoints under one path part inherit f(lca).
"""

from __future__ import annotations

import numpy as np

from . import sweeps
from .comparable import _kernel_args
from .dynforest import DynForest
from .treectx import TreeContext


def vertex_partners(ctx: TreeContext, forest: DynForest, lam: int) -> np.ndarray:
    """r_v per vertex: the incomparable mincut partner of smallest subtree
    size, or -1.  Forest must hold val[w] = C(w_down); restored on exit."""
    r = np.full(ctx.n, -1, dtype=np.int64)
    sweeps.k_incomparable_vertices(*_kernel_args(ctx, forest), ctx.c1, lam, r)
    return r


def min_incomparable_value(ctx: TreeContext, forest: DynForest) -> int | None:
    """Smallest weight of any strictly-2-respecting incomparable cut."""
    none_r = np.full(ctx.n, -1, dtype=np.int64)
    best = int(sweeps.k_incomparable_vertices(*_kernel_args(ctx, forest),
                                              ctx.c1, -1, none_r))
    return None if best >= (1 << 62) else best


def vertex_table(ctx: TreeContext, r: np.ndarray):
    """f(u) per vertex: (v, w, size) of the minimal incomparable candidate
    containing u, folded down the tree in preorder; None where absent."""
    n = ctx.n
    f: list[tuple[int, int, int] | None] = [None] * n
    for pos in range(n):
        u = int(ctx.pre_to_vertex[pos])
        p = int(ctx.parent[u])
        best = f[p] if p >= 0 else None
        ru = int(r[u])
        if ru >= 0:
            size = int(ctx.sz[u]) + int(ctx.sz[ru])
            if best is None or size < best[2]:
                best = (u, ru, size)
        f[u] = best
    return f


def process_paths(ctx: TreeContext, forest: DynForest, lam: int):
    """Witness-set sweep over every path; returns per-item best candidate
    arrays (gv, gw) with -1 where no candidate was assigned."""
    gv = np.full(ctx.n_items, -1, dtype=np.int64)
    gw = np.full(ctx.n_items, -1, dtype=np.int64)
    gsize = np.full(ctx.n_items, np.iinfo(np.int64).max, dtype=np.int64)
    sweeps.k_process_paths(*_kernel_args(ctx, forest), ctx.c1, lam, gv, gw, gsize)
    return gv, gw


def incomparable_candidates(ctx: TreeContext, forest: DynForest, lam: int):
    """Per-item minimal incomparable candidate (v, w) arrays, plus the
    per-vertex partner table (r, f) for reuse by callers."""
    r = vertex_partners(ctx, forest, lam)
    f = vertex_table(ctx, r)
    gv, gw = process_paths(ctx, forest, lam)
    # same-subtree case: both endpoints under one part; f(lca) wins if smaller
    for i in range(ctx.n_items):
        fl = f[int(ctx.item_lca[i])]
        if fl is None:
            continue
        v, w, size = fl
        if gv[i] < 0 or size < int(ctx.sz[gv[i]]) + int(ctx.sz[gw[i]]):
            gv[i] = v
            gw[i] = w
    return gv, gw, r, f
