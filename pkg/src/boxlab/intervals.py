"""Interval representations, graph intersections, and interval recognition.

An IntervalRep assigns each vertex a closed integer interval; the graph it
realizes joins two vertices iff their intervals overlap (touching endpoints
count). A BoxRep is a list of IntervalReps over one vertex set and realizes
the intersection of the realized graphs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError
from .recognition import is_chordal


@dataclass(frozen=True)
class IntervalRep:
    """Map vertex -> closed interval (l, r) with integer endpoints."""

    intervals: dict

    def __post_init__(self):
        for v, (l, r) in self.intervals.items():
            if l > r:
                raise GraphError(f"vertex {v}: interval [{l},{r}] has l > r")

    def vertices(self) -> frozenset:
        return frozenset(self.intervals)

    def left(self, v: int) -> int:
        return self.intervals[v][0]

    def right(self, v: int) -> int:
        return self.intervals[v][1]

    def restrict(self, s) -> "IntervalRep":
        return IntervalRep({v: self.intervals[v] for v in s})

    def relabel(self, mapping: dict) -> "IntervalRep":
        return IntervalRep({mapping[v]: iv for v, iv in self.intervals.items()
                            if v in mapping})


@dataclass(frozen=True)
class BoxRep:
    """Nonempty list of IntervalReps over a common vertex set."""

    reps: tuple

    def __post_init__(self):
        if not self.reps:
            raise GraphError("box representation needs at least one rep")
        vs = self.reps[0].vertices()
        for rep in self.reps[1:]:
            if rep.vertices() != vs:
                raise GraphError("reps do not share one vertex set")

    @property
    def b(self) -> int:
        return len(self.reps)

    def vertices(self) -> frozenset:
        return self.reps[0].vertices()


def _overlap(a, b) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def realize(rep: IntervalRep) -> Graph:
    """Graph realized by an interval representation.

    The rep must cover vertices 0..n-1 exactly.
    """
    n = len(rep.intervals)
    if rep.vertices() != frozenset(range(n)):
        raise GraphError("rep vertices must be exactly 0..n-1")
    rows = [0] * n
    ivs = [rep.intervals[v] for v in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if _overlap(ivs[u], ivs[v]):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def intersect(graphs) -> Graph:
    """Edge-set intersection of graphs over a common vertex set."""
    graphs = list(graphs)
    if not graphs:
        raise GraphError("nothing to intersect")
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise GraphError("vertex counts differ")
    rows = [graphs[0].row(u) for u in range(n)]
    for g in graphs[1:]:
        rows = [r & g.row(u) for u, r in enumerate(rows)]
    return Graph(n, rows)


def realize_box(box: BoxRep) -> Graph:
    return intersect([realize(rep) for rep in box.reps])


def verify_box_representation(g: Graph, box: BoxRep):
    """Check that box realizes g edge-for-edge.

    Returns (True, None) or (False, (u, v, side)) where side is "missing"
    when g has the edge but the realization does not, "extra" otherwise.
    """
    if box.vertices() != frozenset(range(g.n)):
        raise GraphError("rep vertex set does not match graph")
    realized = realize_box(box)
    for u in range(g.n):
        diff = realized.row(u) ^ g.row(u)
        if diff:
            v = (diff & -diff).bit_length() - 1
            side = "missing" if g.has_edge(u, v) else "extra"
            return False, (min(u, v), max(u, v), side)
    return True, None


def helly_region(rep: IntervalRep, s):
    """Common region of the intervals of s: [max l, min r], or None if empty.

    Whenever s induces a clique in realize(rep) the result is nonempty, by
    the Helly property of intervals on a line.
    """
    s = list(s)
    if not s:
        raise GraphError("helly_region needs a nonempty vertex set")
    lo = max(rep.left(v) for v in s)
    hi = min(rep.right(v) for v in s)
    if lo > hi:
        return None
    return (lo, hi)


@dataclass(frozen=True)
class IntervalRefutation:
    """Why a graph is not an interval graph.

    kind "chordless-cycle" carries the cycle; kind "no-arrangement" records
    that every ordering of the maximal cliques leaves some vertex's cliques
    non-consecutive.
    """

    kind: str
    cycle: tuple = ()
    cliques: tuple = ()


def is_interval_graph(g: Graph):
    """Recognize interval graphs; (True, IntervalRep) or (False, refutation).

    Chordality is checked first (cheap refutation with a chordless cycle).
    For chordal inputs the maximal cliques are arranged consecutively by
    backtracking; the rep assigns each vertex the span of clique slots
    containing it and is re-verified against g before being returned.
    """
    ok, cert = is_chordal(g)
    if not ok:
        return False, IntervalRefutation(kind="chordless-cycle", cycle=tuple(cert))
    cliques = _maximal_cliques_from_peo(g, cert.ordering)
    order = _consecutive_arrangement(g.n, cliques)
    if order is None:
        return False, IntervalRefutation(
            kind="no-arrangement",
            cliques=tuple(tuple(sorted(_bit_list(c))) for c in cliques))
    intervals = {}
    for v in range(g.n):
        slots = [i for i, c in enumerate(order) if c >> v & 1]
        intervals[v] = (min(slots), max(slots)) if slots else (0, 0)
    rep = IntervalRep(intervals)
    if realize(rep) != g:
        raise AssertionError("internal error: arrangement produced a bad rep")
    return True, rep


def _bit_list(mask: int) -> list[int]:
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def _maximal_cliques_from_peo(g: Graph, ordering) -> list[int]:
    """Maximal cliques of a chordal graph, as bitmasks, from an elimination
    ordering: candidate cliques are v plus its later neighbours."""
    pos = {v: i for i, v in enumerate(ordering)}
    later = [0] * g.n
    for i, v in enumerate(ordering):
        m = 0
        for u in g.neighbors(v):
            if pos[u] > i:
                m |= 1 << u
        later[v] = m | 1 << v
    cands = sorted(set(later), key=lambda m: -m.bit_count())
    out = []
    for c in cands:
        if not any(c & k == c for k in out):
            out.append(c)
    return out


def _consecutive_arrangement(n: int, cliques) -> list[int] | None:
    """Order cliques so every vertex's cliques are consecutive; None if
    impossible. Backtracking: once a vertex leaves the running clique it may
    never reappear."""
    t = len(cliques)
    if t <= 1:
        return list(cliques)
    best = None

    def extend(order, used_mask, closed, prev):
        nonlocal best
        if best is not None:
            return
        if len(order) == t:
            best = list(order)
            return
        for i in range(t):
            if used_mask >> i & 1:
                continue
            c = cliques[i]
            if c & closed:
                continue
            newly_closed = (closed | (prev & ~c)) if order else closed
            order.append(c)
            extend(order, used_mask | 1 << i, newly_closed, c)
            order.pop()
            if best is not None:
                return

    extend([], 0, 0, 0)
    return best
