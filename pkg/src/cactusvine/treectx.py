"""Per-tree precomputation shared by the labeling sweeps.

For one spanning tree this bundles the heavy-path decomposition, per-item
LCAs, subtree boundary weights C(v_down) and the constant
K(v) = C(v_down) + 2*C(v_down, v_down) used for O(1) mincut acceptance
checks during the sweeps.

"Items" are the real edges plus, optionally, one zero-weight virtual
self-loop per vertex: running the edge pipeline over the loop items yields
the per-vertex labels (a loop's minimal mincut is its vertex's).
"""

from __future__ import annotations

import numpy as np

from .dynforest import DynForest
from .graph import WeightedGraph
from .tree import PathDecomposition, RootedSpanningTree, heavy_path_decomposition


class TreeContext:
    def __init__(self, g: WeightedGraph, tree: RootedSpanningTree, with_vertex_items: bool = True):
        self.graph = g
        self.tree = tree
        self.pd: PathDecomposition = heavy_path_decomposition(tree)
        n, m = g.n, g.m

        eu = np.fromiter((e[0] for e in g.edges), dtype=np.int64, count=m)
        ev = np.fromiter((e[1] for e in g.edges), dtype=np.int64, count=m)
        ew = np.fromiter((e[2] for e in g.edges), dtype=np.int64, count=m)
        if with_vertex_items:
            # item ids m..m+n-1 are the virtual loops (vertex v -> item m+v)
            eu = np.concatenate([eu, np.arange(n, dtype=np.int64)])
            ev = np.concatenate([ev, np.arange(n, dtype=np.int64)])
            ew = np.concatenate([ew, np.zeros(n, dtype=np.int64)])
        self.item_u = eu
        self.item_v = ev
        self.item_w = ew
        self.n_items = len(eu)
        self.with_vertex_items = with_vertex_items

        self.item_lca = tree.lca_many(eu, ev)

        pre = np.array(tree.pre_order, dtype=np.int64)
        self.pre = pre
        self.sz = np.array(tree.subtree_size, dtype=np.int64)
        self.parent = np.array(tree.parent, dtype=np.int64)
        self.pre_to_vertex = np.array(tree.pre_to_vertex, dtype=np.int64)

        # subtree sums over preorder ranges
        wdeg = np.zeros(n, dtype=np.int64)
        np.add.at(wdeg, eu[:m], ew[:m])
        np.add.at(wdeg, ev[:m], ew[:m])
        lcaw = np.zeros(n, dtype=np.int64)
        np.add.at(lcaw, self.item_lca[:m], ew[:m])

        def subtree_sum(point: np.ndarray) -> np.ndarray:
            by_pre = np.zeros(n + 1, dtype=np.int64)
            by_pre[1:] = np.cumsum(point[self.pre_to_vertex])
            lo = pre
            hi = pre + self.sz
            return by_pre[hi] - by_pre[lo]

        # C(v_down) = sum of weighted degrees inside minus twice the weight
        # of edges fully inside (an edge is inside v_down iff its lca is)
        self.c1 = subtree_sum(wdeg - 2 * lcaw)
        self.inner = subtree_sum(lcaw)  # sum of w(e) over edges inside v_down
        # K(v) = C(v_down) + 2*C(v_down, v_down); C(X, X) counts inner edges twice
        self.K = self.c1 + 4 * self.inner

        # CSR adjacency over items: for vertex u, (item ids, other endpoints)
        ids = np.arange(self.n_items, dtype=np.int64)
        loops = eu == ev
        heads = np.concatenate([eu, ev[~loops]])
        tails = np.concatenate([ev, eu[~loops]])
        both = np.concatenate([ids, ids[~loops]])
        order = np.argsort(heads, kind="stable")
        self.adj_items = both[order]
        self.adj_other = tails[order]
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(heads, minlength=n), out=indptr[1:])
        self.adj_indptr = indptr

        # decomposition paths flattened for the sweep kernels
        self.paths_flat = np.fromiter((v for pth in self.pd.paths for v in pth),
                                      dtype=np.int64, count=n)
        offs = np.zeros(len(self.pd.paths) + 1, dtype=np.int64)
        np.cumsum(np.fromiter((len(p) for p in self.pd.paths), dtype=np.int64,
                              count=len(self.pd.paths)), out=offs[1:])
        self.paths_off = offs

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def root(self) -> int:
        return self.tree.root

    def make_forest(self, initial: str = "subtree_cut") -> DynForest:
        """Fresh dynamic forest over the tree.

        ``subtree_cut``: val[w] = C(w_down); ``all_inf``: every value starts
        saturated (the lower-vertex traversal overwrites points with depths).
        """
        n = self.n
        if initial == "subtree_cut":
            values = (np.zeros(n, dtype=np.int64), self.c1.astype(np.int64))
        elif initial == "all_inf":
            values = (np.ones(n, dtype=np.int64), np.zeros(n, dtype=np.int64))
        else:
            raise ValueError(initial)
        return DynForest(values, self.sz, parents=self.parent,
                         order=self.pre_to_vertex[::-1].copy())

    def new_positions(self, v: int, vprev: int | None):
        """Preorder positions of v_down minus vprev_down along a heavy path.

        vprev, when given, is v's heavy child, occupying the preorder range
        immediately after v.
        """
        lo = int(self.pre[v])
        hi = lo + int(self.sz[v])
        if vprev is None:
            return range(lo, hi)
        skip_hi = int(self.pre[vprev]) + int(self.sz[vprev])
        return [lo, *range(skip_hi, hi)] if skip_hi < hi else [lo]

    def incident(self, u: int):
        lo, hi = int(self.adj_indptr[u]), int(self.adj_indptr[u + 1])
        for k in range(lo, hi):
            yield int(self.adj_items[k]), int(self.adj_other[k]), int(self.item_w[self.adj_items[k]])
