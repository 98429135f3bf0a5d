"""Chordal, strongly chordal, and chordal bipartite recognition.

Every positive answer comes with an elimination certificate that is
re-verified step by step before it is returned; every negative answer comes
with a concrete witness (a chordless cycle, an odd cycle, or a residual
graph in which no vertex is simple).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graphs import (Bipartition, Graph, GraphError, NotBipartiteError,
                     bipartition)

DEFAULT_CROSS_CHECK_CAP = 64
DEFAULT_CYCLE_LENGTH_CAP = 12


@dataclass(frozen=True)
class EliminationCertificate:
    """A vertex ordering meant to be eliminated front to back.

    kind "perfect": each vertex's later neighbours form a clique.
    kind "simple": each vertex is simple in the graph induced by the rest.
    """

    ordering: tuple
    kind: str


@dataclass(frozen=True)
class CbgCertificate:
    """Positive chordal-bipartite verdict: a bipartition plus a simple
    elimination ordering of the split completion of side A."""

    sides: Bipartition
    elimination: EliminationCertificate


@dataclass(frozen=True)
class CbgRefutation:
    """Negative chordal-bipartite verdict.

    kind "odd-cycle": input is not bipartite. kind "long-cycle": a chordless
    cycle of length > 4. kind "stuck": greedy simple elimination of the split
    completion stalled on the recorded residual vertices.
    """

    kind: str
    cycle: tuple = ()
    residual: tuple = ()


def verify_perfect_elimination(g: Graph, ordering) -> bool:
    """Check that eliminating vertices in the given order always removes a
    vertex whose remaining neighbourhood is a clique."""
    if sorted(ordering) != list(range(g.n)):
        return False
    alive = (1 << g.n) - 1
    for v in ordering:
        later = g.row(v) & alive & ~(1 << v)
        m = later
        while m:
            u = (m & -m).bit_length() - 1
            if later & ~(g.closed_row(u)):
                return False
            m &= m - 1
        alive &= ~(1 << v)
    return True


def _mcs_ordering(g: Graph) -> list[int]:
    """Maximum cardinality search; returns a candidate elimination ordering
    (reverse of the visit order)."""
    weight = [0] * g.n
    visited = [False] * g.n
    visit = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not visited[u]),
                key=lambda u: (weight[u], -u))
        visited[v] = True
        visit.append(v)
        for u in g.neighbors(v):
            if not visited[u]:
                weight[u] += 1
    return visit[::-1]


def _peo_violation(g: Graph, ordering):
    """First triple (v, u, w) breaking the perfect elimination property, or
    None. u is v's earliest later neighbour and (u, w) is a missing edge."""
    pos = [0] * g.n
    for i, v in enumerate(ordering):
        pos[v] = i
    for i, v in enumerate(ordering):
        later = [u for u in g.neighbors(v) if pos[u] > i]
        if not later:
            continue
        u = min(later, key=lambda x: pos[x])
        for w in later:
            if w != u and not g.has_edge(u, w):
                return v, u, w
    return None


def _chordless_cycle_through(g: Graph, v: int, u: int, w: int):
    """Chordless cycle from a violated triple: v adjacent to both u and w,
    (u, w) not an edge. Join u and w by a shortest path avoiding N[v]."""
    blocked = (g.closed_row(v) | 1 << v) & ~(1 << u) & ~(1 << w)
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == w:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            cycle = [v] + path[::-1]
            return cycle if _is_chordless_cycle(g, cycle) else None
        for y in g.neighbors(x):
            if y not in prev and not blocked >> y & 1:
                prev[y] = x
                queue.append(y)
    return None


def _is_chordless_cycle(g: Graph, cycle) -> bool:
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent_on_cycle = j - i == 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != adjacent_on_cycle:
                return False
    return True


def is_chordal(g: Graph):
    """(True, perfect EliminationCertificate) or (False, chordless cycle)."""
    ordering = _mcs_ordering(g)
    bad = _peo_violation(g, ordering)
    if bad is None:
        cert = EliminationCertificate(tuple(ordering), "perfect")
        if not verify_perfect_elimination(g, cert.ordering):
            raise AssertionError("internal error: unverifiable elimination order")
        return True, cert
    cycle = _chordless_cycle_through(g, *bad)
    if cycle is None:
        cycle = induced_cycle_exceeding(g, 3)
    if cycle is None:
        raise AssertionError("internal error: no witness for non-chordal graph")
    return False, list(cycle)


def incompatible_pair(g: Graph, v: int, alive: int | None = None):
    """A pair x, y in N[v] with neither N[x] contained in N[y] nor the
    reverse, or None if v is simple. `alive` restricts to an induced
    subgraph given as a bitmask.

    Pairwise nesting is equivalent to nesting along the size-sorted chain,
    so only consecutive members need checking.
    """
    if alive is None:
        alive = (1 << g.n) - 1
    closed = g.closed_row(v) & alive
    members = []
    m = closed
    while m:
        x = (m & -m).bit_length() - 1
        members.append((g.closed_row(x) & alive, x))
        m &= m - 1
    members.sort(key=lambda t: (t[0].bit_count(), t[0], t[1]))
    for (ni, xi), (nj, xj) in zip(members, members[1:]):
        if ni & ~nj:
            return min(xi, xj), max(xi, xj)
    return None


def is_simple_vertex(g: Graph, v: int, alive: int | None = None) -> bool:
    """True iff the closed neighbourhoods of N[v] are pairwise nested."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return incompatible_pair(g, v, alive) is None


def verify_simple_elimination(g: Graph, ordering) -> bool:
    if sorted(ordering) != list(range(g.n)):
        return False
    alive = (1 << g.n) - 1
    for v in ordering:
        if not is_simple_vertex(g, v, alive):
            return False
        alive &= ~(1 << v)
    return True


def is_strongly_chordal(g: Graph, pick=None):
    """Greedy simple-vertex elimination.

    Repeatedly removes a simple vertex of the remaining graph (lowest index
    unless `pick` chooses among the candidates). Returns
    (True, simple EliminationCertificate) when all vertices go, otherwise
    (False, residual vertex list) with no simple vertex left.
    """
    alive = (1 << g.n) - 1
    order = []
    while alive:
        candidates = [v for v in range(g.n)
                      if alive >> v & 1 and is_simple_vertex(g, v, alive)]
        if not candidates:
            residual = [v for v in range(g.n) if alive >> v & 1]
            return False, residual
        v = candidates[0] if pick is None else pick(candidates)
        order.append(v)
        alive &= ~(1 << v)
    cert = EliminationCertificate(tuple(order), "simple")
    if not verify_simple_elimination(g, cert.ordering):
        raise AssertionError("internal error: unverifiable elimination order")
    return True, cert


def split_completion(g: Graph, sides: Bipartition, side: str) -> Graph:
    """Add every edge inside the chosen side of a bipartition."""
    sides.validate(g)
    if side not in ("A", "B"):
        raise GraphError(f"side must be 'A' or 'B', got {side!r}")
    mask = sides.mask(side)
    rows = []
    for u in range(g.n):
        r = g.row(u)
        if mask >> u & 1:
            r |= mask & ~(1 << u)
        rows.append(r)
    return Graph(g.n, rows)


def induced_cycle_exceeding(g: Graph, bound: int, max_len: int | None = None):
    """A chordless cycle of length > bound, or None.

    DFS over chordless paths rooted at each cycle's minimum vertex; the
    search is exhaustive for cycle lengths up to `max_len` (defaults to n,
    i.e. fully exhaustive). Deterministic: vertices are tried in increasing
    order, so the same witness is returned every run.
    """
    if bound < 3:
        raise GraphError(f"length bound must be at least 3, got {bound}")
    if max_len is None:
        max_len = g.n
    if max_len <= bound:
        return None

    for s in range(g.n):
        found = _cycle_dfs(g, s, bound, max_len)
        if found is not None:
            return found
    return None


def _cycle_dfs(g: Graph, s: int, bound: int, max_len: int):
    """Chordless cycles whose minimum vertex is s, longer than `bound`."""
    low = (1 << (s + 1)) - 1  # s and everything below: excluded as interior
    s_row = g.row(s)
    path = [s]

    def extend(last, banned):
        # banned: path vertices plus all neighbours of interior path vertices
        cand = g.row(last) & ~banned & ~low
        while cand:
            x = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if s_row >> x & 1:
                # x touches s, so it can only close a cycle, never extend
                if bound < len(path) + 1 <= max_len:
                    return path + [x]
                continue
            if len(path) + 2 > max_len:
                continue
            path.append(x)
            got = extend(x, banned | g.row(last))
            if got is not None:
                return got
            path.pop()
        return None

    for a in g.neighbors(s):
        if a <= s:
            continue
        path.append(a)
        got = extend(a, (1 << s) | (1 << a))
        if got is not None:
            return got
        path.pop()
    return None


def is_chordal_bipartite(g: Graph, cross_check_cap: int = DEFAULT_CROSS_CHECK_CAP,
                         cycle_cap: int = DEFAULT_CYCLE_LENGTH_CAP):
    """(True, CbgCertificate) or (False, CbgRefutation).

    The authoritative route completes side A of a bipartition and asks for a
    simple elimination ordering of the split graph. When n is within
    `cross_check_cap`, a direct search for a chordless cycle of length > 4
    (lengths up to `cycle_cap`) runs as well; the two answers are compared
    wherever the capped search is conclusive and disagreement raises, since
    it can only mean a bug.
    """
    try:
        sides = bipartition(g)
    except NotBipartiteError as e:
        return False, CbgRefutation(kind="odd-cycle", cycle=tuple(e.odd_cycle))

    split = split_completion(g, sides, "A")
    ok, payload = is_strongly_chordal(split)

    if g.n <= cross_check_cap:
        cap = min(cycle_cap, g.n)
        cycle = induced_cycle_exceeding(g, 4, max_len=cap)
        if cycle is not None and ok:
            raise AssertionError(
                "internal error: split-completion route accepted a graph "
                f"with the chordless cycle {cycle}")
        if cycle is None and not ok and cap >= g.n:
            raise AssertionError(
                "internal error: split-completion route rejected a graph "
                "with no long chordless cycle")
        if cycle is not None:
            return False, CbgRefutation(kind="long-cycle", cycle=tuple(cycle))

    if ok:
        return True, CbgCertificate(sides=sides, elimination=payload)
    return False, CbgRefutation(kind="stuck", residual=tuple(payload))
