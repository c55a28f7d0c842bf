"""Rooted spanning tree scaffolding: ancestry tables, LCA, heavy paths.

Everything here is static and immutable after construction; the labeling
sweeps only read these tables.
"""

from __future__ import annotations

import numpy as np

from .graph import WeightedGraph


class NotATree(Exception):
    pass


class RootedSpanningTree:
    """Parent/depth/preorder/subtree-size tables for a spanning tree.

    ``pre_order`` is a DFS numbering in which every subtree is the
    contiguous range [pre_order[v], pre_order[v] + subtree_size[v]).
    Children are visited heavy-first so each heavy path occupies a
    contiguous preorder run.
    """

    def __init__(self, g: WeightedGraph, tree_edges: list[int], root: int):
        self.graph = g
        self.root = root
        self.tree_edges = list(tree_edges)
        n = g.n
        if len(self.tree_edges) != n - 1:
            raise NotATree(f"expected {n - 1} tree edges, got {len(self.tree_edges)}")

        adj: list[list[int]] = [[] for _ in range(n)]
        for eid in self.tree_edges:
            u, v, _ = g.edges[eid]
            if u == v:
                raise NotATree("self-loop cannot be a tree edge")
            adj[u].append(v)
            adj[v].append(u)

        parent = [-1] * n
        order = [root]
        parent[root] = root
        head = 0
        while head < len(order):
            u = order[head]
            head += 1
            for v in adj[u]:
                if parent[v] == -1:
                    parent[v] = u
                    order.append(v)
        if len(order) != n:
            raise NotATree("tree edges do not span the graph")
        parent[root] = -1

        self.parent = parent
        self.depth = [0] * n
        self.subtree_size = [1] * n
        for u in order[1:]:
            self.depth[u] = self.depth[parent[u]] + 1
        for u in reversed(order[1:]):
            self.subtree_size[parent[u]] += self.subtree_size[u]

        # children sorted heavy-first, ties by smaller vertex id
        children: list[list[int]] = [[] for _ in range(n)]
        for u in order[1:]:
            children[parent[u]].append(u)
        for u in range(n):
            children[u].sort(key=lambda c: (-self.subtree_size[c], c))
        self.children = children

        pre = [0] * n
        post = [0] * n
        pre_to_vertex = [0] * n
        timer = 0
        stack = [(root, 0)]
        post_timer = 0
        # iterative DFS tracking child cursor
        while stack:
            u, ci = stack[-1]
            if ci == 0:
                pre[u] = timer
                pre_to_vertex[timer] = u
                timer += 1
            if ci < len(children[u]):
                stack[-1] = (u, ci + 1)
                stack.append((children[u][ci], 0))
            else:
                post[u] = post_timer
                post_timer += 1
                stack.pop()
        self.pre_order = pre
        self.post_order = post
        self.pre_to_vertex = pre_to_vertex

        self._lca_tables = None

    @property
    def n(self) -> int:
        return self.graph.n

    def is_ancestor(self, a: int, d: int) -> bool:
        """True iff d lies in a's subtree (reflexive)."""
        pa = self.pre_order
        return pa[a] <= pa[d] < pa[a] + self.subtree_size[a]

    def comparable(self, u: int, v: int) -> bool:
        return self.is_ancestor(u, v) or self.is_ancestor(v, u)

    def _build_lca(self):
        # Euler tour + sparse table over depths; O(1) per query.
        n = self.n
        depth_arr = np.array(self.depth, dtype=np.int64)
        euler_list: list[int] = []
        first_list = [-1] * n
        stack = [(self.root, 0)]
        while stack:
            u, ci = stack[-1]
            if ci == 0:
                first_list[u] = len(euler_list)
                euler_list.append(u)
            if ci < len(self.children[u]):
                stack[-1] = (u, ci + 1)
                stack.append((self.children[u][ci], 0))
            else:
                stack.pop()
                if stack:
                    euler_list.append(stack[-1][0])
        euler = np.array(euler_list, dtype=np.int64)
        first = np.array(first_list, dtype=np.int64)
        L = len(euler)
        stride = L + 1
        # combined key (depth, position) so argmin decodes from the min
        key = depth_arr[euler] * stride + np.arange(L, dtype=np.int64)
        table = [key]
        j = 1
        while (1 << j) <= L:
            prev = table[-1]
            half = 1 << (j - 1)
            table.append(np.minimum(prev[: L - (1 << j) + 1], prev[half: half + L - (1 << j) + 1]))
            j += 1
        self._lca_tables = (euler, first, table, L, stride)

    def lca(self, u: int, v: int) -> int:
        if u == v:
            return u
        if self._lca_tables is None:
            self._build_lca()
        euler, first, table, L, stride = self._lca_tables
        a, b = int(first[u]), int(first[v])
        if a > b:
            a, b = b, a
        span = b - a + 1
        k = span.bit_length() - 1
        best = min(int(table[k][a]), int(table[k][b - (1 << k) + 1]))
        return int(euler[best % stride])

    def lca_many(self, us, vs) -> np.ndarray:
        """Vectorized LCA for parallel arrays of endpoints."""
        if self._lca_tables is None:
            self._build_lca()
        euler, first, table, L, stride = self._lca_tables
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        a = first[us].astype(np.int64)
        b = first[vs].astype(np.int64)
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        span = hi - lo + 1
        k = np.int64(np.floor(np.log2(span)))
        # np.log2 can round badly on exact powers; correct downward/upward
        k = np.where((np.int64(1) << k) > span, k - 1, k)
        k = np.where((np.int64(1) << (k + 1)) <= span, k + 1, k)
        res = np.empty(len(us), dtype=np.int64)
        ks = k.astype(np.int64)
        for kk in np.unique(ks):
            mask = ks == kk
            t = table[kk]
            left = t[lo[mask]]
            right = t[hi[mask] - (1 << int(kk)) + 1]
            res[mask] = np.minimum(left, right) % stride
        return euler[res].astype(np.int64)


class PathDecomposition:
    """Heavy-path decomposition; every path is stored deepest vertex first.

    ``paths[i]`` ends at the path's highest vertex (the one closest to the
    root).  Any root-to-leaf walk meets at most floor(log2 n) + 1 paths.
    """

    def __init__(self, tree: RootedSpanningTree):
        self.tree = tree
        n = tree.n
        heavy = [-1] * n
        for u in range(n):
            if tree.children[u]:
                heavy[u] = tree.children[u][0]  # children pre-sorted heavy-first
        self.heavy_child = heavy

        path_of = [-1] * n
        paths: list[list[int]] = []
        # path heads are vertices that are not the heavy child of their parent
        for u in range(n):
            p = tree.parent[u]
            if p == -1 or heavy[p] != u:
                chain = []
                v = u
                while v != -1:
                    chain.append(v)
                    v = heavy[v]
                pid = len(paths)
                chain.reverse()  # deepest first
                for v in chain:
                    path_of[v] = pid
                paths.append(chain)
        self.paths = paths
        self.path_of = path_of

    def path_top(self, pid: int) -> int:
        return self.paths[pid][-1]

    def path_volume(self, pid: int) -> int:
        """d(P↓): total graph degree of the vertices under the path top."""
        g = self.tree.graph
        top = self.path_top(pid)
        pre = self.tree.pre_order
        lo = pre[top]
        hi = lo + self.tree.subtree_size[top]
        return sum(
            len(g.adjacency[self.tree.pre_to_vertex[i]]) for i in range(lo, hi)
        )


def build_rooted_tree(g: WeightedGraph, tree_edges: list[int], root: int | None = None) -> RootedSpanningTree:
    return RootedSpanningTree(g, tree_edges, g.root if root is None else root)


def heavy_path_decomposition(tree: RootedSpanningTree) -> PathDecomposition:
    return PathDecomposition(tree)
