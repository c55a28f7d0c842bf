"""From minimal-mincut labels to the laminar hierarchy and the cactus.

Stages:

  1. preprocess_merge    vertices with identical minimal mincuts collapse
                         into classes (unlabeled vertices join the root);
                         labels are bucketed by (size, two 64-bit range
                         hashes) and buckets are refined by exact set
                         comparison, so hashing only accelerates equality.
  2. build_nesting_tree  parent p(c) = owner of the second-smallest
                         minimal mincut containing class c, found per tree
                         by a preorder stack sweep over that tree's cuts.
  3. build_hierarchy     one pass over all vertex/edge minimal mincuts in
                         increasing size; each cut either is already
                         covered, adds a nesting superset, or starts /
                         extends / concatenates a chain.  Every mincut of
                         the graph ends up represented by a node or a
                         subchain.
  4. hierarchy_to_cactus chain-certificated nodes become cycles, the
                         remaining parent links become bridges.

Cross-checks that are cheap stay on: consecutive chain parts must carry
exactly half the mincut weight between them (checked in doubled integers),
non-adjacent parts must carry none, and any dispatch that the chain theory
forbids raises AlgorithmInvariantViolation instead of patching over.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .graph import WeightedGraph, merge_vertices
from .labels import CutLabel, label_contains, label_size, materialize
from .tree import RootedSpanningTree


class AlgorithmInvariantViolation(Exception):
    pass


class InconsistentLabels(Exception):
    pass


_HASH_SEED = 0xC0FFEE


def _vertex_keys(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.integers(0, 1 << 63, size=n, dtype=np.int64).astype(np.uint64)


class LabelHasher:
    """Order-independent 64-bit set hashes of label cuts, O(1) per label."""

    def __init__(self, trees: list[RootedSpanningTree], n: int):
        self.trees = trees
        self.k1 = _vertex_keys(n, _HASH_SEED)
        self.k2 = _vertex_keys(n, _HASH_SEED + 1)
        self.pref1 = []
        self.pref2 = []
        for t in trees:
            order = np.array(t.pre_to_vertex, dtype=np.int64)
            p1 = np.zeros(n + 1, dtype=np.uint64)
            p2 = np.zeros(n + 1, dtype=np.uint64)
            np.cumsum(self.k1[order], out=p1[1:])
            np.cumsum(self.k2[order], out=p2[1:])
            self.pref1.append(p1)
            self.pref2.append(p2)

    _MASK = (1 << 64) - 1

    def _range(self, pref, tid: int, v: int) -> int:
        t = self.trees[tid]
        lo = t.pre_order[v]
        return (int(pref[tid][lo + t.subtree_size[v]]) - int(pref[tid][lo])) & self._MASK

    def cut_key(self, label: CutLabel) -> tuple[int, int, int]:
        tid = label.tree_id
        h1 = self._range(self.pref1, tid, label.v)
        h2 = self._range(self.pref2, tid, label.v)
        if label.kind == "comp2":
            h1 = (h1 - self._range(self.pref1, tid, label.w)) & self._MASK
            h2 = (h2 - self._range(self.pref2, tid, label.w)) & self._MASK
        elif label.kind == "incomp2":
            h1 = (h1 + self._range(self.pref1, tid, label.w)) & self._MASK
            h2 = (h2 + self._range(self.pref2, tid, label.w)) & self._MASK
        return (label_size(label, self.trees), h1, h2)


@dataclass
class MergeResult:
    merged: WeightedGraph
    class_of: list[int]              # original vertex -> class
    members: list[list[int]]         # class -> original vertices
    class_label: list[CutLabel | None]
    class_rep: list[int]             # class -> an original vertex
    root_class: int


def preprocess_merge(g: WeightedGraph, vertex_labels: list[CutLabel | None],
                     trees: list[RootedSpanningTree],
                     hasher: LabelHasher | None = None) -> MergeResult:
    if hasher is None:
        hasher = LabelHasher(trees, g.n)
    buckets: dict[tuple[int, int, int], list[int]] = {}
    root_members = [g.root]
    for v in range(g.n):
        if v == g.root:
            continue
        lbl = vertex_labels[v]
        if lbl is None:
            root_members.append(v)
        else:
            buckets.setdefault(hasher.cut_key(lbl), []).append(v)

    classes: list[list[int]] = []
    class_label: list[CutLabel | None] = []
    for key in sorted(buckets):
        group = buckets[key]
        if len(group) == 1:
            classes.append(group)
            class_label.append(vertex_labels[group[0]])
            continue
        # exact refinement: the hash only proposes equality
        refined: dict[frozenset[int], list[int]] = {}
        for v in group:
            refined.setdefault(materialize(vertex_labels[v], trees), []).append(v)
        for cut in sorted(refined, key=sorted):
            vs = refined[cut]
            classes.append(vs)
            class_label.append(vertex_labels[vs[0]])
    classes.append(root_members)
    class_label.append(None)
    root_class = len(classes) - 1

    merged, class_of = merge_vertices(g, classes)
    return MergeResult(merged, class_of, classes, class_label,
                       [c[0] for c in classes], root_class)


def build_nesting_tree(mr: MergeResult, trees: list[RootedSpanningTree]) -> list[int]:
    """Parent class per class (root's parent is itself)."""
    ncls = len(mr.members)
    rep_class_at: dict[int, int] = {mr.class_rep[c]: c for c in range(ncls)}
    # per class: (size, owner) of the two smallest containing cuts seen
    found: list[list[tuple[int, int]]] = [[] for _ in range(ncls)]

    for tid, t in enumerate(trees):
        starts: list[list[tuple[int, int, CutLabel]]] = [[] for _ in range(t.n)]
        for c in range(ncls):
            lbl = mr.class_label[c]
            if lbl is None or lbl.tree_id != tid:
                continue
            size = label_size(lbl, trees)
            pre = t.pre_order
            sz = t.subtree_size
            starts[pre[lbl.v]].append((size, c, lbl))
            if lbl.kind == "comp2":
                resume = pre[lbl.w] + sz[lbl.w]
                if resume < pre[lbl.v] + sz[lbl.v]:
                    starts[resume].append((size, c, lbl))
            elif lbl.kind == "incomp2":
                starts[pre[lbl.w]].append((size, c, lbl))
        stack: list[tuple[int, int, CutLabel]] = []
        for pos in range(t.n):
            cur = t.pre_to_vertex[pos]
            while stack and not label_contains(stack[-1][2], cur, trees):
                stack.pop()
            for entry in sorted(starts[pos], key=lambda e: -e[0]):
                stack.append(entry)
            c = rep_class_at.get(cur)
            if c is not None and c != mr.root_class:
                for entry in stack[-2:]:
                    found[c].append((entry[0], entry[1]))

    parent = [mr.root_class] * ncls
    for c in range(ncls):
        if c == mr.root_class:
            continue
        chain: list[tuple[int, int]] = []
        seen = set()
        for size, owner in sorted(found[c]):
            if owner not in seen:
                seen.add(owner)
                chain.append((size, owner))
        if not chain or chain[0][1] != c:
            raise InconsistentLabels(
                f"class {c}: own minimal mincut not the smallest container")
        if len(chain) > 1:
            parent[c] = chain[1][1]
    return parent


@dataclass
class HNode:
    size: int                      # original-vertex count of the set
    rep: int                       # an original vertex inside the set
    children: list[int] = field(default_factory=list)
    parent: int = -1
    cert_vertex: int = -1          # class id, when vertex-certificated
    cert_edge: int = -1            # item id, when edge-certificated
    cert_u: int = -1               # original endpoints of the certificate edge
    cert_v: int = -1
    chain: tuple[int, int] | None = None   # (end node, end node)
    nbr: list[int] = field(default_factory=list)  # chain neighbors, as a part
    own_classes: list[int] = field(default_factory=list)  # classes held here
    alive: bool = True


@dataclass
class Hierarchy:
    nodes: list[HNode]
    roots: list[int]
    root_node: int                 # super node holding the root class
    mr: MergeResult
    lam: int


def _chain_parts(h: list[HNode], node: HNode) -> list[int]:
    e1, _e2 = node.chain
    parts = [e1]
    prev = -1
    while True:
        cur = parts[-1]
        nxt = [x for x in h[cur].nbr if x != prev]
        if not nxt:
            break
        prev = cur
        parts.append(nxt[0])
    return parts


class _ClassDSU:
    def __init__(self, n: int):
        self.p = list(range(n))
        self.node: list[int] = [-1] * n  # valid at roots only

    def find(self, x: int) -> int:
        root = x
        while self.p[root] != root:
            root = self.p[root]
        while self.p[x] != root:
            self.p[x], x = root, self.p[x]
        return root

    def union_into(self, xs: list[int], node_id: int) -> None:
        base = self.find(xs[0])
        for x in xs[1:]:
            self.p[self.find(x)] = base
        self.node[base] = node_id


def build_hierarchy(g: WeightedGraph, mr: MergeResult, nest_parent: list[int],
                    edge_labels: list[CutLabel | None], lam: int,
                    trees: list[RootedSpanningTree],
                    hasher: LabelHasher | None = None,
                    reverse_ties: bool = False) -> Hierarchy:
    if hasher is None:
        hasher = LabelHasher(trees, g.n)
    ncls = len(mr.members)
    csize = [len(m) for m in mr.members]

    def contains(lbl: CutLabel, node: HNode) -> bool:
        return label_contains(lbl, node.rep, trees)

    # the sorted work list: vertex entries then edge entries at equal cuts
    entries = []
    for c in range(ncls):
        lbl = mr.class_label[c]
        if lbl is None:
            continue
        size, h1, h2 = hasher.cut_key(lbl)
        tie = (-h1, -h2) if reverse_ties else (h1, h2)
        entries.append((size, *tie, 0, c, lbl))
    for eid, lbl in enumerate(edge_labels):
        if lbl is None:
            continue
        u, v, _ = g.edges[eid]
        if mr.class_of[u] == mr.class_of[v]:
            continue  # internal to a class; its cut is covered regardless
        size, h1, h2 = hasher.cut_key(lbl)
        tie = (-h1, -h2) if reverse_ties else (h1, h2)
        entries.append((size, *tie, 1, eid, lbl))
    entries.sort(key=lambda e: e[:5])

    nodes: list[HNode] = []
    dsu = _ClassDSU(ncls)
    nest_children: list[list[int]] = [[] for _ in range(ncls)]
    for x, px in enumerate(nest_parent):
        if x != px:
            nest_children[px].append(x)

    def new_node(size, rep) -> int:
        nodes.append(HNode(size=size, rep=rep))
        return len(nodes) - 1

    def node_of_class(c: int) -> int:
        return dsu.node[dsu.find(c)]

    def adopt(parent_id: int, child_id: int) -> None:
        nodes[parent_id].children.append(child_id)
        nodes[child_id].parent = parent_id

    idx = 0
    while idx < len(entries):
        size, _t1, _t2, is_edge, owner, lbl = entries[idx]
        if not is_edge:
            idx += 1
            c = owner
            if dsu.find(c) != c or dsu.node[c] != -1:
                raise AlgorithmInvariantViolation(
                    f"vertex class {c} already covered before its own cut")
            nid = new_node(size, mr.class_rep[c])
            nodes[nid].cert_vertex = c
            nodes[nid].own_classes.append(c)
            absorbed = [c]
            total = csize[c]
            seen_children: set[int] = set()
            for child in nest_children[c]:
                root = dsu.find(child)
                if root in seen_children:
                    continue  # several nesting children already share a chain
                seen_children.add(root)
                if dsu.node[root] == -1:
                    raise AlgorithmInvariantViolation(
                        f"nesting child {child} of class {c} has no node yet")
                child_nid = dsu.node[root]
                adopt(nid, child_nid)
                absorbed.append(root)
                total += nodes[child_nid].size
            if total != size:
                raise AlgorithmInvariantViolation(
                    f"vertex cut of class {c}: size {size} != assembled {total}")
            dsu.union_into(absorbed, nid)
            continue

        # collect the bucket of edges with the same cut
        bucket = [entries[idx]]
        j = idx + 1
        while j < len(entries) and entries[j][:3] == entries[idx][:3] and entries[j][3] == 1:
            bucket.append(entries[j])
            j += 1
        idx_next = j

        eid = owner
        u, v, _ = g.edges[eid]
        a = node_of_class(mr.class_of[u])
        b = node_of_class(mr.class_of[v])
        if a == -1 or b == -1:
            raise AlgorithmInvariantViolation(f"edge {eid}: endpoint not covered yet")
        if a == b:
            idx += 1  # cut already inside one set; re-examine rest of bucket
            continue
        A, B = nodes[a], nodes[b]
        if size == A.size + B.size:
            nid = new_node(size, A.rep)
            nodes[nid].cert_edge = eid
            nodes[nid].cert_u, nodes[nid].cert_v = u, v
            adopt(nid, a)
            adopt(nid, b)
            A.nbr = [b]
            B.nbr = [a]
            nodes[nid].chain = (a, b)
            dsu.union_into([dsu.find(mr.class_of[u]), dsu.find(mr.class_of[v])], nid)
            idx += 1
            continue
        if size < A.size + B.size:
            a_in = _subset_of_cut(nodes, A, lbl, trees)
            b_in = _subset_of_cut(nodes, B, lbl, trees)
            if a_in and b_in:
                raise AlgorithmInvariantViolation(
                    f"edge {eid}: both sides inside a smaller cut")
            if a_in and not b_in:
                a, b = b, a
                A, B = B, A
                a_in, b_in = b_in, a_in
            # A crosses the cut now
            if b_in:
                _extend_chain(nodes, a, b, lbl, trees, eid)
            else:
                _concat_chains(nodes, a, b, lbl, trees, eid)
            dsu.union_into([dsu.find(mr.class_of[u]), dsu.find(mr.class_of[v])], a)
            idx += 1
            continue
        # size > |A| + |B|: nesting superset; the whole bucket resolves here
        nid = new_node(size, A.rep)
        nodes[nid].cert_edge = eid
        nodes[nid].cert_u, nodes[nid].cert_v = u, v
        absorbed: list[int] = []
        total = 0
        seen_roots: set[int] = set()
        for entry in bucket:
            eu, ev, _ = g.edges[entry[4]]
            for endpoint in (eu, ev):
                root = dsu.find(mr.class_of[endpoint])
                if root in seen_roots:
                    continue
                seen_roots.add(root)
                child = dsu.node[root]
                if child == -1:
                    raise AlgorithmInvariantViolation(
                        f"edge bucket of {eid}: endpoint class not covered")
                adopt(nid, child)
                absorbed.append(root)
                total += nodes[child].size
        if total != size:
            raise AlgorithmInvariantViolation(
                f"edge cut {eid}: size {size} != assembled {total} (hash clash?)")
        dsu.union_into(absorbed, nid)
        idx = idx_next

    roots = [i for i, nd in enumerate(nodes) if nd.alive and nd.parent == -1]
    super_id = len(nodes)
    nodes.append(HNode(size=g.n, rep=g.root))
    nodes[super_id].own_classes.append(mr.root_class)
    for rt in roots:
        adopt(super_id, rt)

    h = Hierarchy(nodes, roots, super_id, mr, lam)
    _check_chain_weights(h, g, mr)
    return h


def _subset_of_cut(nodes: list[HNode], node: HNode, lbl: CutLabel, trees) -> bool:
    """Is the node's set contained in the cut?  Exact, O(1) per certificate."""
    if node.cert_vertex >= 0 and node.chain is None:
        # a vertex-minimal mincut never crosses another mincut
        return True
    if node.chain is not None:
        e1, e2 = node.chain
        in1 = label_contains(lbl, nodes[e1].rep, trees)
        in2 = label_contains(lbl, nodes[e2].rep, trees)
        if in1 and in2:
            return True
        if in1 or in2:
            return False
        raise AlgorithmInvariantViolation("chain node neither inside nor crossing")
    if node.cert_edge >= 0:
        return (label_contains(lbl, node.cert_u, trees)
                and label_contains(lbl, node.cert_v, trees))
    raise AlgorithmInvariantViolation("node without certificate")


def _crossing_end(nodes: list[HNode], node: HNode, lbl: CutLabel, trees) -> int:
    e1, e2 = node.chain
    in1 = label_contains(lbl, nodes[e1].rep, trees)
    in2 = label_contains(lbl, nodes[e2].rep, trees)
    if in1 == in2:
        raise AlgorithmInvariantViolation("crossing cut does not isolate one chain end")
    return e1 if in1 else e2


def _extend_chain(nodes: list[HNode], a: int, b: int, lbl: CutLabel, trees,
                  eid: int) -> None:
    A, B = nodes[a], nodes[b]
    if A.chain is None:
        raise AlgorithmInvariantViolation(
            f"extend: crossing node lacks a chain certificate (edge {eid})")
    end = _crossing_end(nodes, A, lbl, trees)
    size = label_size(lbl, trees)
    if size != nodes[end].size + B.size:
        raise AlgorithmInvariantViolation(
            f"extend: cut is not end-part plus other side (edge {eid})")
    nodes[end].nbr.append(b)
    B.nbr = [end]
    e1, e2 = A.chain
    A.chain = (b, e2) if end == e1 else (e1, b)
    A.size += B.size
    A.cert_vertex = -1
    A.cert_edge = -1
    nodes[a].children.append(b)
    B.parent = a


def _concat_chains(nodes: list[HNode], a: int, b: int, lbl: CutLabel, trees,
                   eid: int) -> None:
    A, B = nodes[a], nodes[b]
    if A.chain is None or B.chain is None:
        raise AlgorithmInvariantViolation(
            f"concat: a crossing node lacks a chain certificate (edge {eid})")
    end_a = _crossing_end(nodes, A, lbl, trees)
    end_b = _crossing_end(nodes, B, lbl, trees)
    size = label_size(lbl, trees)
    if size != nodes[end_a].size + nodes[end_b].size:
        raise AlgorithmInvariantViolation(
            f"concat: cut is not the two joining end parts (edge {eid})")
    nodes[end_a].nbr.append(end_b)
    nodes[end_b].nbr.append(end_a)
    other_a = A.chain[0] if end_a == A.chain[1] else A.chain[1]
    other_b = B.chain[0] if end_b == B.chain[1] else B.chain[1]
    A.chain = (other_a, other_b)
    A.size += B.size
    A.cert_vertex = -1
    A.cert_edge = -1
    for c in B.children:
        nodes[c].parent = a
        A.children.append(c)
    A.own_classes.extend(B.own_classes)
    B.alive = False
    B.children = []


def _check_chain_weights(h: Hierarchy, g: WeightedGraph, mr: MergeResult) -> None:
    """Consecutive chain parts carry weight lam/2 across, non-adjacent none
    (verified as 2*weight == lam in exact integers)."""
    nodes = h.nodes
    depth = {}

    def node_depth(i: int) -> int:
        d = depth.get(i)
        if d is None:
            d = 0 if nodes[i].parent == -1 else node_depth(nodes[i].parent) + 1
            depth[i] = d
        return d

    leaf_of_class = {}
    for i, nd in enumerate(nodes):
        if nd.alive:
            for c in nd.own_classes:
                leaf_of_class[c] = i
    pair_weight: dict[tuple[int, int], int] = {}
    for u, v, w in g.edges:
        cu, cv = mr.class_of[u], mr.class_of[v]
        if cu == cv:
            continue
        x, y = leaf_of_class[cu], leaf_of_class[cv]
        dx, dy = node_depth(x), node_depth(y)
        while dx > dy:
            x = nodes[x].parent
            dx -= 1
        while dy > dx:
            y = nodes[y].parent
            dy -= 1
        while nodes[x].parent != nodes[y].parent:
            x, y = nodes[x].parent, nodes[y].parent
        if x != y and nodes[x].parent != -1 and nodes[nodes[x].parent].chain is not None:
            key = (min(x, y), max(x, y))
            pair_weight[key] = pair_weight.get(key, 0) + w

    for i, nd in enumerate(nodes):
        if not nd.alive or nd.chain is None:
            continue
        parts = _chain_parts(nodes, nd)
        adjacent = set()
        for p, q in zip(parts, parts[1:]):
            adjacent.add((min(p, q), max(p, q)))
            got = pair_weight.get((min(p, q), max(p, q)), 0)
            if 2 * got != h.lam:
                raise AlgorithmInvariantViolation(
                    f"chain of node {i}: boundary weight 2*{got} != lambda {h.lam}")
        for (p, q), wsum in pair_weight.items():
            if nodes[p].parent == i and nodes[q].parent == i and (p, q) not in adjacent and wsum:
                raise AlgorithmInvariantViolation(
                    f"chain of node {i}: non-adjacent parts share weight {wsum}")


@dataclass
class Cactus:
    lam: int
    node_vertices: list[list[int]]      # cactus node -> original vertices
    bridges: list[tuple[int, int]]
    cycles: list[list[int]]             # each cycle as a closed node sequence
    vertex_node: list[int]              # original vertex -> cactus node
    root_node: int

    def stats(self) -> dict:
        return {
            "lambda": self.lam,
            "nodes": len(self.node_vertices),
            "bridges": len(self.bridges),
            "cycles": len(self.cycles),
            "cycle_lengths": sorted(len(c) for c in self.cycles),
        }


def hierarchy_to_cactus(h: Hierarchy) -> Cactus:
    nodes = h.nodes
    alive = [i for i, nd in enumerate(nodes) if nd.alive]
    cid = {i: k for k, i in enumerate(alive)}
    node_vertices: list[list[int]] = [[] for _ in alive]
    for i in alive:
        for c in nodes[i].own_classes:
            node_vertices[cid[i]].extend(h.mr.members[c])
    vertex_node = [-1] * len(h.mr.class_of)
    for i in alive:
        for c in nodes[i].own_classes:
            for v in h.mr.members[c]:
                vertex_node[v] = cid[i]

    bridges: list[tuple[int, int]] = []
    cycles: list[list[int]] = []
    for i in alive:
        nd = nodes[i]
        if nd.parent != -1 and nodes[nd.parent].chain is None:
            # chain parts hang on their parent's cycle, everything else on a bridge
            bridges.append((cid[nd.parent], cid[i]))
        if nd.chain is not None:
            parts = _chain_parts(nodes, nd)
            if set(parts) != set(nd.children):
                raise AlgorithmInvariantViolation(
                    f"node {i}: chain parts differ from children")
            cycles.append([cid[i]] + [cid[p] for p in parts])
    return Cactus(h.lam, node_vertices, bridges, cycles,
                  vertex_node, cid[h.root_node])


def enumerate_cactus_cuts(c: Cactus) -> list[frozenset[int]]:
    """All cuts induced by one bridge or a same-cycle edge pair, as
    canonical non-root vertex sets, deduplicated."""
    edges: list[tuple[int, int, int]] = []  # (a, b, cycle_id or -1)
    for a, b in c.bridges:
        edges.append((a, b, -1))
    for k, cyc in enumerate(c.cycles):
        ring = cyc + [cyc[0]]
        for a, b in zip(ring, ring[1:]):
            edges.append((a, b, k))
    adj: dict[int, list[int]] = {}
    for i, (a, b, _k) in enumerate(edges):
        adj.setdefault(a, []).append(i)
        adj.setdefault(b, []).append(i)

    nn = len(c.node_vertices)

    def side_without_root(removed: set[int]) -> frozenset[int] | None:
        seen = [False] * nn
        seen[c.root_node] = True
        stack = [c.root_node]
        while stack:
            x = stack.pop()
            for i in adj.get(x, ()):
                if i in removed:
                    continue
                a, b, _ = edges[i]
                y = b if a == x else a
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out: set[int] = set()
        for node in range(nn):
            if not seen[node]:
                out.update(c.node_vertices[node])
        return frozenset(out) if out else None

    cuts: set[frozenset[int]] = set()
    for i, (_a, _b, k) in enumerate(edges):
        if k == -1:
            s = side_without_root({i})
            if s:
                cuts.add(s)
    by_cycle: dict[int, list[int]] = {}
    for i, (_a, _b, k) in enumerate(edges):
        if k >= 0:
            by_cycle.setdefault(k, []).append(i)
    for k, eids in by_cycle.items():
        for x in range(len(eids)):
            for y in range(x + 1, len(eids)):
                s = side_without_root({eids[x], eids[y]})
                if s:
                    cuts.add(s)
    return sorted(cuts, key=lambda s: (len(s), sorted(s)))


def build_cactus(g: WeightedGraph, trees: list[RootedSpanningTree],
                 vertex_labels: list[CutLabel | None],
                 edge_labels: list[CutLabel | None], lam: int,
                 reverse_ties: bool = False) -> tuple[Cactus, Hierarchy]:
    hasher = LabelHasher(trees, g.n)
    mr = preprocess_merge(g, vertex_labels, trees, hasher)
    nest = build_nesting_tree(mr, trees)
    h = build_hierarchy(g, mr, nest, edge_labels, lam, trees, hasher,
                        reverse_ties=reverse_ties)
    return hierarchy_to_cactus(h), h


def cactus_to_json(c: Cactus) -> str:
    payload = {
        "lambda": c.lam,
        "nodes": [{"id": i, "vertices": sorted(v + 1 for v in vs)}
                  for i, vs in enumerate(c.node_vertices)],
        "root_node": c.root_node,
        "bridges": [list(b) for b in sorted(c.bridges)],
        "cycles": [list(cy) for cy in c.cycles],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def cactus_to_dot(c: Cactus) -> str:
    lines = ["graph cactus {"]
    for i, vs in enumerate(c.node_vertices):
        label = ",".join(str(v + 1) for v in sorted(vs)) or "·"
        shape = "doublecircle" if i == c.root_node else "circle"
        lines.append(f'  n{i} [label="{label}" shape={shape}];')
    for a, b in sorted(c.bridges):
        lines.append(f"  n{a} -- n{b};")
    for k, cyc in enumerate(c.cycles):
        ring = cyc + [cyc[0]]
        for a, b in zip(ring, ring[1:]):
            lines.append(f'  n{a} -- n{b} [color="crimson" label="c{k}"];')
    lines.append("}")
    return "\n".join(lines)
