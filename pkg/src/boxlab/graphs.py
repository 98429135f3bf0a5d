"""Dense bitset graphs and rooted trees.

Vertices are the integers 0..n-1. Adjacency is kept as one Python int per
vertex (bit v of row u set iff uv is an edge), so edge-set operations cost
O(n/word) and the solver's inner loops stay cheap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import inf

DEFAULT_VERTEX_CAP = 4096


class GraphError(ValueError):
    pass


class NotBipartiteError(GraphError):
    """Raised when a bipartition is requested of a non-bipartite graph.

    Carries an odd cycle as the refutation witness.
    """

    def __init__(self, odd_cycle):
        super().__init__(f"graph is not bipartite: odd cycle {odd_cycle}")
        self.odd_cycle = list(odd_cycle)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows):
        rows = tuple(rows)
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise GraphError(f"row {u} references vertices >= {n}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
        for u, row in enumerate(rows):
            r = row
            while r:
                v = (r & -r).bit_length() - 1
                if not rows[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u},{v})")
                r &= r - 1
        self.n = n
        self._rows = rows

    def row(self, u: int) -> int:
        """Neighbourhood of u as a bitmask."""
        return self._rows[u]

    def closed_row(self, u: int) -> int:
        """Closed neighbourhood N[u] as a bitmask."""
        return self._rows[u] | (1 << u)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return _bits(self._rows[u])

    def degree(self, u: int) -> int:
        return self._rows[u].bit_count()

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self._rows[u] >> (u + 1)
            while r:
                v = (r & -r).bit_length() - 1
                out.append((u, u + 1 + v))
                r &= r - 1
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                if not self._rows[u] >> v & 1]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self.n == other.n and self._rows == other._rows)

    def __hash__(self):
        return hash((self.n, self._rows))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def from_edges(n: int, edges, cap: int | None = DEFAULT_VERTEX_CAP) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse.

    Rejects self-loops and endpoints outside 0..n-1. `cap` guards against
    graphs too large for dense bitset rows.
    """
    if cap is not None and n > cap:
        raise GraphError(f"vertex count {n} exceeds cap {cap}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << u) for u in range(n)])


def bfs_distances(g: Graph, s: int) -> list:
    """Shortest-path edge counts from s; math.inf marks unreachable vertices."""
    if not 0 <= s < g.n:
        raise GraphError(f"source {s} out of range")
    dist = [inf] * g.n
    dist[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if dist[v] == inf:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@dataclass(frozen=True)
class Bipartition:
    """Partition of the vertex set into two independent sides."""

    a: frozenset
    b: frozenset

    def side_of(self, v: int) -> str:
        if v in self.a:
            return "A"
        if v in self.b:
            return "B"
        raise GraphError(f"vertex {v} not in bipartition")

    def mask(self, side: str) -> int:
        vs = self.a if side == "A" else self.b
        return sum(1 << v for v in vs)

    def validate(self, g: Graph) -> None:
        if self.a & self.b or (self.a | self.b) != set(range(g.n)):
            raise GraphError("sides do not partition the vertex set")
        for side in (self.a, self.b):
            m = sum(1 << v for v in side)
            for v in side:
                if g.row(v) & m:
                    raise GraphError(f"side containing {v} is not independent")


def bipartition(g: Graph) -> Bipartition:
    """2-colour g; in each component the side of its lowest vertex is A.

    Raises NotBipartiteError carrying an odd closed walk through the
    offending edge when no 2-colouring exists.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    raise NotBipartiteError(_odd_cycle(u, v, parent))
    a = frozenset(v for v in range(g.n) if color[v] == 0)
    b = frozenset(v for v in range(g.n) if color[v] == 1)
    return Bipartition(a, b)


def _odd_cycle(u: int, v: int, parent: list[int]) -> list[int]:
    # walk both BFS-tree branches up to their meeting point
    pu, pv = [u], [v]
    seen = {u: 0}
    x = u
    while parent[x] != -1:
        x = parent[x]
        seen[x] = len(pu)
        pu.append(x)
    x = v
    while x not in seen:
        x = parent[x]
        pv.append(x)
    pu = pu[:seen[pv[-1]] + 1]
    return pu[::-1] + pv[:-1][::-1]


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
        return True
    except NotBipartiteError:
        return False


def induced_subgraph(g: Graph, s) -> tuple[Graph, list[int]]:
    """Subgraph induced by vertex set s, relabelled densely.

    Returns (subgraph, old_of_new) where old_of_new[i] is the original
    label of new vertex i (sorted order).
    """
    order = sorted(set(s))
    if order and not (0 <= order[0] and order[-1] < g.n):
        raise GraphError(f"vertex set not within 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(order)}
    rows = [0] * len(order)
    for i, v in enumerate(order):
        r = g.row(v)
        while r:
            w = (r & -r).bit_length() - 1
            j = pos.get(w)
            if j is not None:
                rows[i] |= 1 << j
            r &= r - 1
    return Graph(len(order), rows), order


class RootedTree:
    """Tree with a designated root, parent links, and depth queries."""

    __slots__ = ("graph", "root", "parent", "depth")

    def __init__(self, graph: Graph, root: int):
        n = graph.n
        if not 0 <= root < n:
            raise GraphError(f"root {root} out of range")
        if graph.edge_count != n - 1:
            raise GraphError("not a tree: wrong edge count")
        parent = [-1] * n
        depth = [-1] * n
        depth[root] = 0
        queue = deque([root])
        seen = 1
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                if depth[v] == -1:
                    depth[v] = depth[u] + 1
                    parent[v] = u
                    queue.append(v)
                    seen += 1
        if seen != n:
            raise GraphError("not a tree: disconnected")
        self.graph = graph
        self.root = root
        self.parent = tuple(parent)
        self.depth = tuple(depth)

    @property
    def n(self) -> int:
        return self.graph.n

    def is_leaf(self, v: int) -> bool:
        return self.graph.degree(v) <= 1

    def distance(self, u: int, v: int) -> int:
        return self.depth[u] + self.depth[v] - 2 * self.depth[lca(self, u, v)]


def tree_from_parents(parent, root: int) -> RootedTree:
    n = len(parent)
    edges = [(v, p) for v, p in enumerate(parent) if v != root]
    return RootedTree(from_edges(n, edges), root)


def lca(t: RootedTree, u: int, v: int) -> int:
    """Least common ancestor of u and v."""
    du, dv = t.depth[u], t.depth[v]
    while du > dv:
        u = t.parent[u]
        du -= 1
    while dv > du:
        v = t.parent[v]
        dv -= 1
    while u != v:
        u = t.parent[u]
        v = t.parent[v]
    return u


def farthest_from(t: RootedTree, v: int) -> int:
    """Vertex maximising tree distance from v; ties break to the lowest index.

    For n >= 2 the result is always a leaf.
    """
    dist = bfs_distances(t.graph, v)
    best = max(range(t.n), key=lambda u: (dist[u], -u))
    return best
