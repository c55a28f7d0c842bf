"""Cuts crossing exactly one tree edge: values and minimal candidates.

The cut induced by v_down has weight C(v_down), computed for all v in one
subtree-sum pass (see TreeContext.c1).  The minimal 1-respecting mincut
containing a vertex u is the deepest ancestor v of u with C(v_down) equal
to the global mincut value; for an edge it is the candidate of the edge's
LCA, since a subtree contains both endpoints iff it contains their LCA.
"""

from __future__ import annotations

import numpy as np

from .treectx import TreeContext


def one_respecting_values(ctx: TreeContext) -> np.ndarray:
    """C(v_down) for every vertex (0 at the root: the empty cut)."""
    return ctx.c1


def minimal_1respecting_labels(ctx: TreeContext, lam: int) -> np.ndarray:
    """Per item, the deepest vertex v with item inside v_down and
    C(v_down) == lam, or -1 when no 1-respecting mincut contains it."""
    t = ctx.tree
    n = ctx.n
    is_mincut = (ctx.c1 == lam)
    is_mincut[ctx.root] = False
    # carry the deepest mincut ancestor down the tree in preorder
    carry = np.full(n, -1, dtype=np.int64)
    for pos in range(n):
        v = int(ctx.pre_to_vertex[pos])
        p = int(ctx.parent[v])
        inherited = carry[p] if p >= 0 else -1
        carry[v] = v if is_mincut[v] else inherited
    return carry[ctx.item_lca]
