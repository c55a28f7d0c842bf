"""Weighted multigraph core: parsing, cut weights, vertex merging.

All weights are positive integers and all cut arithmetic is exact (Python
ints never overflow), so equality tests against the global minimum cut
value are reliable.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class GraphError(Exception):
    pass


class MalformedInput(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NonPositiveWeight(GraphError):
    pass


class InvalidCutSet(GraphError):
    pass


class InvalidPartition(GraphError):
    pass


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected multigraph with positive integer weights and a root vertex.

    Vertices are dense ints 0..n-1.  Parallel edges are kept as separate
    entries of ``edges``.  Self-loops are rejected by the parser but may be
    injected internally (with weight 0) by the vertex-labeling reduction;
    they contribute nothing to any cut.
    """

    n: int
    edges: list[tuple[int, int, int]]  # (u, v, w)
    root: int = 0
    # adjacency[v] = list of (edge_id, other_endpoint); self-loops appear twice
    adjacency: list[list[tuple[int, int]]] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.adjacency is None:
            object.__setattr__(self, "adjacency", build_adjacency(self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def weighted_degree(self, v: int) -> int:
        return sum(self.edges[e][2] for e, _ in self.adjacency[v])

    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)


def build_adjacency(n: int, edges: list[tuple[int, int, int]]) -> list[list[tuple[int, int]]]:
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v, _) in enumerate(edges):
        adj[u].append((eid, v))
        adj[v].append((eid, u))
    return adj


def make_graph(n: int, edges, root: int = 0, allow_self_loops: bool = False) -> WeightedGraph:
    """Validated constructor.  Requires connectivity and positive weights.

    ``allow_self_loops`` is the internal escape hatch for the zero-weight
    loops used when vertices are labeled through the edge pipeline.
    """
    norm = []
    for u, v, w in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedInput(f"edge endpoint out of range: ({u}, {v})")
        if u == v:
            if not allow_self_loops:
                raise MalformedInput(f"self-loop on vertex {u}")
            if w != 0:
                raise NonPositiveWeight("internal self-loops must carry weight 0")
        elif w < 1:
            raise NonPositiveWeight(f"edge ({u}, {v}) has non-positive weight {w}")
        norm.append((u, v, w))
    if not (0 <= root < n):
        raise MalformedInput(f"root {root} out of range")
    g = WeightedGraph(n=n, edges=norm, root=root)
    if not _connected(g):
        raise Disconnected("input graph is not connected")
    return g


def _connected(g: WeightedGraph) -> bool:
    if g.n == 0:
        return False
    seen = bytearray(g.n)
    stack = [0]
    seen[0] = 1
    count = 1
    while stack:
        u = stack.pop()
        for _, v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == g.n


def parse_graph(text: str | bytes, root_override: int | None = None) -> WeightedGraph:
    """Parse the DIMACS-like format.

    Lines: ``p <n> <m>`` header, then ``e <u> <v> <w>`` per edge with
    1-indexed endpoints and positive integer weight, optional ``r <u>``
    selecting the root.  ``#`` starts a comment.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = None
    m = None
    root = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise MalformedInput(f"line {lineno}: duplicate header")
            if len(parts) != 3:
                raise MalformedInput(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise MalformedInput(f"line {lineno}: bad header numbers") from None
            if n < 1 or m < 0:
                raise MalformedInput(f"line {lineno}: bad sizes n={n} m={m}")
        elif kind == "e":
            if n is None:
                raise MalformedInput(f"line {lineno}: edge before header")
            if len(parts) != 4:
                raise MalformedInput(f"line {lineno}: expected 'e <u> <v> <w>'")
            try:
                u, v, w = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedInput(f"line {lineno}: bad edge numbers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedInput(f"line {lineno}: endpoint out of range")
            if u == v:
                raise MalformedInput(f"line {lineno}: self-loop on vertex {u}")
            if w < 1:
                raise NonPositiveWeight(f"line {lineno}: weight {w} < 1")
            edges.append((u - 1, v - 1, w))
        elif kind == "r":
            if len(parts) != 2:
                raise MalformedInput(f"line {lineno}: expected 'r <u>'")
            root = int(parts[1]) - 1
        else:
            raise MalformedInput(f"line {lineno}: unknown record '{kind}'")
    if n is None:
        raise MalformedInput("missing 'p <n> <m>' header")
    if m != len(edges):
        raise MalformedInput(f"header announced {m} edges, found {len(edges)}")
    if root_override is not None:
        root = root_override
    if root is None:
        root = 0
    if not (0 <= root < n):
        raise MalformedInput(f"root {root + 1} out of range")
    return make_graph(n, edges, root=root)


def canonical_cutset(g: WeightedGraph, members) -> frozenset[int]:
    """Validate and canonicalize a cut side to the non-root side."""
    s = frozenset(members)
    if g.root in s:
        s = frozenset(range(g.n)) - s
    if not s or len(s) >= g.n:
        raise InvalidCutSet("cut side must be a proper nonempty vertex subset")
    return s


def cut_weight(g: WeightedGraph, members) -> int:
    """Total weight of edges with exactly one endpoint in ``members``.

    Self-loops never cross a cut.  The side may be given as either half of
    the partition; it is canonicalized to the non-root side first.
    """
    s = canonical_cutset(g, members)
    total = 0
    for u, v, w in g.edges:
        if (u in s) != (v in s):
            total += w
    return total


def two_set_weight(g: WeightedGraph, xs, ys) -> int:
    """C(X, Y): weight of edges with one endpoint in X and one in Y.

    An edge with both endpoints in X ∩ Y is counted twice.
    """
    x = set(xs)
    y = set(ys)
    total = 0
    for u, v, w in g.edges:
        cnt = (1 if (u in x and v in y) else 0) + (1 if (v in x and u in y) else 0)
        total += w * cnt
    return total


def merge_vertices(g: WeightedGraph, classes: list[list[int]]):
    """Quotient the graph by a partition of the vertices.

    The root's class maps to the new root.  Parallel edges between classes
    are kept; edges internal to a class disappear.  Returns the merged
    graph and the old->new vertex map.
    """
    mapping = [-1] * g.n
    for cid, cls in enumerate(classes):
        for v in cls:
            if not (0 <= v < g.n):
                raise InvalidPartition(f"vertex {v} out of range")
            if mapping[v] != -1:
                raise InvalidPartition(f"vertex {v} in two classes")
            mapping[v] = cid
    if any(c == -1 for c in mapping):
        raise InvalidPartition("partition does not cover all vertices")
    new_n = len(classes)
    new_edges = []
    for u, v, w in g.edges:
        cu, cv = mapping[u], mapping[v]
        if cu != cv:
            new_edges.append((cu, cv, w))
    merged = make_graph(new_n, new_edges, root=mapping[g.root])
    return merged, mapping
