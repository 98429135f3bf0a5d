"""Exact boxicity on small graphs.

Two layers:

* interval sandwich: given required and forbidden vertex pairs, find an
  interval representation whose graph contains every required pair and no
  forbidden pair. The search walks canonical endpoint orderings: vertices
  open left endpoints one at a time, and a vertex closes as soon as all its
  required neighbours have opened (keeping it open longer can only add
  non-required overlaps, so this loses nothing). The still-open set is then
  a function of the opened set, which makes failed opened-sets memoizable
  and bounds the search by 2^n states.

* kill-set search: box(G) <= b iff the non-edges can be split among b
  coordinates so that each coordinate admits an interval supergraph of G
  omitting its share. Assignments are explored most-constrained-first with
  per-mask feasibility memoized; every infeasible mask is shrunk to a
  minimal core, and cores prune all their supersets without another solve.

Verdicts are budgeted by a deterministic node counter; running out yields
the distinct outcome "exceeded", never a wrong answer.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .graphs import Graph, GraphError
from .intervals import (BoxRep, IntervalRep, is_interval_graph, realize,
                        verify_box_representation)

DEFAULT_BUDGET = 20_000_000
DEFAULT_EXACT_CAP = 16

REFUTED = "refuted"
FOUND = "representation found"
EXCEEDED = "exceeded"


class BudgetExceeded(Exception):
    def __init__(self, nodes):
        super().__init__(f"node budget exhausted after {nodes} nodes")
        self.nodes = nodes


class _Budget:
    __slots__ = ("limit", "nodes")

    def __init__(self, limit):
        self.limit = limit
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded(self.nodes)


def graph_hash(g: Graph) -> str:
    """Hash binding certificates to a labelled graph (no canonization)."""
    payload = f"{g.n};" + ",".join(f"{u}-{v}" for u, v in g.edges())
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


@dataclass(frozen=True)
class SandwichInstance:
    """Vertex pairs that must be edges, pairs that must not be; the rest are
    free."""

    n: int
    required: frozenset
    forbidden: frozenset

    def __post_init__(self):
        req = frozenset((min(u, v), max(u, v)) for u, v in self.required)
        forb = frozenset((min(u, v), max(u, v)) for u, v in self.forbidden)
        object.__setattr__(self, "required", req)
        object.__setattr__(self, "forbidden", forb)
        for u, v in req | forb:
            if u == v:
                raise GraphError(f"pair ({u},{u}) is a self-loop")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"pair ({u},{v}) out of range")
        if req & forb:
            raise GraphError("required and forbidden pairs overlap")

    def free(self) -> frozenset:
        all_pairs = {(u, v) for u in range(self.n) for v in range(u + 1, self.n)}
        return frozenset(all_pairs - self.required - self.forbidden)


def _pairs_to_rows(n: int, pairs) -> list[int]:
    rows = [0] * n
    for u, v in pairs:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _sandwich_open_order(n, req_rows, forb_rows, counter):
    """Order in which vertices open, or None if no valid ordering exists."""
    if n == 0:
        return []
    full = (1 << n) - 1
    failed = set()
    seq = []

    def dfs(opened, open_m):
        if opened == full:
            return True
        w = 0
        todo = full & ~opened
        while todo:
            w = (todo & -todo).bit_length() - 1
            todo &= todo - 1
            counter.tick()
            if forb_rows[w] & open_m:
                continue
            new_opened = opened | 1 << w
            if new_opened in failed:
                continue
            new_open = open_m | 1 << w
            cand = (open_m & req_rows[w]) | 1 << w
            while cand:
                v = (cand & -cand).bit_length() - 1
                cand &= cand - 1
                if not req_rows[v] & ~new_opened:
                    new_open &= ~(1 << v)
            seq.append(w)
            if dfs(new_opened, new_open):
                return True
            seq.pop()
        failed.add(opened)
        return False

    return seq if dfs(0, 0) else None


def _rep_from_open_order(n, req_rows, seq) -> IntervalRep:
    """Replay an open order into rank-valued endpoints: a vertex closes right
    after its last required neighbour opens."""
    left = [0] * n
    right = [0] * n
    rank = 0
    opened = 0
    open_m = 0
    for w in seq:
        left[w] = rank
        rank += 1
        opened |= 1 << w
        open_m |= 1 << w
        cand = (open_m & req_rows[w]) | 1 << w
        closing = []
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            if not req_rows[v] & ~opened:
                closing.append(v)
        for v in sorted(closing):
            right[v] = rank
            rank += 1
            open_m &= ~(1 << v)
    if open_m:
        raise AssertionError("internal error: vertices left open after replay")
    return IntervalRep({v: (left[v], right[v]) for v in range(n)})


def interval_sandwich(inst: SandwichInstance, budget: int | None = None):
    """Solve an interval sandwich instance.

    Returns an IntervalRep realizing a graph with every required pair and no
    forbidden pair (free pairs fall where they may), or None when the
    exhaustive search proves there is none. The returned rep is re-verified
    against the instance before being handed back.
    """
    req_rows = _pairs_to_rows(inst.n, inst.required)
    forb_rows = _pairs_to_rows(inst.n, inst.forbidden)
    counter = _Budget(budget)
    seq = _sandwich_open_order(inst.n, req_rows, forb_rows, counter)
    if seq is None:
        return None
    rep = _rep_from_open_order(inst.n, req_rows, seq)
    realized = realize(rep)
    for u, v in inst.required:
        if not realized.has_edge(u, v):
            raise AssertionError("internal error: required pair missing")
    for u, v in inst.forbidden:
        if realized.has_edge(u, v):
            raise AssertionError("internal error: forbidden pair realized")
    return rep


class _KillSearch:
    """Shared state for the kill-set assignment search on one graph.

    Feasibility of "interval supergraph of g omitting this non-edge set" is
    memoized by non-edge bitmask. Infeasible masks are shrunk to minimal
    cores; any superset of a core is infeasible without solving, and any
    subset of a known feasible mask is feasible without solving.
    """

    def __init__(self, g: Graph, counter: _Budget):
        self.g = g
        self.n = g.n
        self.counter = counter
        self.req_rows = [g.row(u) for u in range(g.n)]
        nonedges = g.non_edges()
        nonedges.sort(key=lambda e: (-(g.row(e[0]) & g.row(e[1])).bit_count(), e))
        self.nonedges = nonedges
        self.exact = {}
        self.feasible_seqs = {}
        self.feasible_masks = []
        self.cores = []
        self.solves = 0

    def _forb_rows(self, mask: int) -> list[int]:
        rows = [0] * self.n
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            u, v = self.nonedges[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return rows

    def _solve(self, mask: int) -> bool:
        """Uncached sandwich solve; records the result."""
        self.solves += 1
        seq = _sandwich_open_order(self.n, self.req_rows,
                                   self._forb_rows(mask), self.counter)
        if seq is None:
            self.exact[mask] = False
            return False
        self.exact[mask] = True
        self.feasible_seqs[mask] = list(seq)
        self.feasible_masks.append(mask)
        return True

    def feasible(self, mask: int) -> bool:
        hit = self.exact.get(mask)
        if hit is not None:
            return hit
        for core in self.cores:
            if mask & core == core:
                self.exact[mask] = False
                return False
        for f in self.feasible_masks:
            if mask & ~f == 0:
                self.exact[mask] = True
                return True
        ok = self._solve(mask)
        if not ok:
            core = self._shrink(mask)
            if core not in self.cores:
                self.cores.append(core)
        return ok

    def _shrink(self, mask: int) -> int:
        """Greedy minimal infeasible core of an infeasible mask."""
        core = mask
        probe = mask
        while probe:
            bit = probe & -probe
            probe &= probe - 1
            test = core & ~bit
            if test == 0:
                continue
            known = self.exact.get(test)
            if known is None:
                known = self._solve(test)
            if not known:
                core = test
        return core

    def rep_for(self, mask: int) -> IntervalRep:
        """Interval rep for a mask already known feasible."""
        seq = self.feasible_seqs.get(mask)
        if seq is None:
            for f, fseq in self.feasible_seqs.items():
                if mask & ~f == 0:
                    seq = fseq
                    break
        if seq is None:
            if not self._solve(mask):
                raise AssertionError("internal error: feasible mask failed to solve")
            seq = self.feasible_seqs[mask]
        return _rep_from_open_order(self.n, self.req_rows, seq)


def _assign_kill_sets(ks: _KillSearch, b: int):
    """Split the non-edges among b coordinates so every coordinate stays
    interval-feasible; returns per-coordinate masks or None.

    Most-constrained non-edge first; empty coordinates are interchangeable,
    so only the first empty one is ever tried.
    """
    m = len(ks.nonedges)
    if m == 0:
        return [0] * b
    masks = [0] * b
    full = (1 << m) - 1

    def dfs(rem, used):
        ks.counter.tick()
        if not rem:
            return list(masks)
        best_e = -1
        best_opts = None
        scan = rem
        while scan:
            e = (scan & -scan).bit_length() - 1
            scan &= scan - 1
            limit = min(used + 1, b)
            opts = [c for c in range(limit) if ks.feasible(masks[c] | 1 << e)]
            if not opts:
                return None
            if best_opts is None or len(opts) < len(best_opts):
                best_e, best_opts = e, opts
                if len(opts) == 1:
                    break
        for c in best_opts:
            masks[c] |= 1 << best_e
            res = dfs(rem & ~(1 << best_e), max(used, c + 1))
            masks[c] &= ~(1 << best_e)
            if res is not None:
                return res
        return None

    return dfs(full, 0)


@dataclass(frozen=True)
class BoxicityCertificate:
    """Either an upper-bound witness (a verified BoxRep) or a record of a
    completed exhaustive refutation at the stated b."""

    kind: str
    b: int
    graph_hash: str
    nodes_explored: int
    rep: BoxRep | None = None
    stats: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BoxicityResult:
    boxicity: int | None
    certificate: BoxicityCertificate | None
    refutations: tuple
    status: str
    nodes: int


@dataclass(frozen=True)
class RefutationOutcome:
    verdict: str
    rep: BoxRep | None
    nodes: int
    stats: dict = field(default_factory=dict)


def _upper_certificate(g: Graph, reps, nodes: int) -> BoxicityCertificate:
    box = BoxRep(tuple(reps)) if reps else None
    if box is not None:
        ok, witness = verify_box_representation(g, box)
        if not ok:
            raise AssertionError(f"internal error: bad upper certificate {witness}")
    elif not g.is_complete():
        raise AssertionError("internal error: empty rep list for incomplete graph")
    return BoxicityCertificate(kind="upper", b=len(reps), graph_hash=graph_hash(g),
                               nodes_explored=nodes, rep=box)


def exact_boxicity(g: Graph, max_b: int | None = None,
                   budget: int | None = None,
                   exact_cap: int = DEFAULT_EXACT_CAP) -> BoxicityResult:
    """Least b such that g is an intersection of b interval graphs.

    Complete graphs get b = 0 by convention. b = 1 is interval recognition;
    beyond that, each candidate b runs the kill-set search, so n must stay
    within `exact_cap` for the exhaustive refutation of smaller b to be
    affordable. Status "exceeded" reports an exhausted node budget and never
    masquerades as an answer.
    """
    if g.is_complete():
        return BoxicityResult(0, _upper_certificate(g, (), 0), (), "exact", 0)
    if max_b is None:
        max_b = max(1, g.n // 2)
    if max_b < 1:
        raise GraphError(f"max_b must be at least 1, got {max_b}")
    refutations = []
    ok, payload = is_interval_graph(g)
    if ok:
        cert = _upper_certificate(g, (payload,), 0)
        return BoxicityResult(1, cert, (), "exact", 0)
    refutations.append(BoxicityCertificate(
        kind="refutation", b=1, graph_hash=graph_hash(g), nodes_explored=0,
        stats={"method": "interval-recognition", "witness_kind": payload.kind}))
    if max_b < 2:
        return BoxicityResult(None, None, tuple(refutations), "refuted-only", 0)
    if g.n > exact_cap:
        raise GraphError(
            f"n={g.n} exceeds the exhaustive-refutation cap {exact_cap}")

    counter = _Budget(budget)
    ks = _KillSearch(g, counter)
    try:
        for b in range(2, max_b + 1):
            start = counter.nodes
            masks = _assign_kill_sets(ks, b)
            if masks is not None:
                reps = [ks.rep_for(m) for m in masks]
                cert = _upper_certificate(g, reps, counter.nodes)
                return BoxicityResult(b, cert, tuple(refutations), "exact",
                                      counter.nodes)
            refutations.append(BoxicityCertificate(
                kind="refutation", b=b, graph_hash=graph_hash(g),
                nodes_explored=counter.nodes - start,
                stats={"method": "kill-set-exhaustion", "cores": len(ks.cores),
                       "sandwich_solves": ks.solves}))
    except BudgetExceeded:
        return BoxicityResult(None, None, tuple(refutations), "exceeded",
                              counter.nodes)
    return BoxicityResult(None, None, tuple(refutations), "refuted-only",
                          counter.nodes)


def refute_boxicity_at_most(g: Graph, b: int,
                            budget: int | None = None) -> RefutationOutcome:
    """Exhaustively decide whether g has a b-coordinate box representation.

    "refuted" is only reported after the kill-set search completes; an
    exhausted budget yields "exceeded".
    """
    if b < 1:
        raise GraphError(f"b must be at least 1, got {b}")
    if g.is_complete():
        full_rep = IntervalRep({v: (0, 1) for v in range(g.n)})
        return RefutationOutcome(FOUND, BoxRep((full_rep,)) if g.n else None, 0)
    counter = _Budget(budget)
    ks = _KillSearch(g, counter)
    try:
        masks = _assign_kill_sets(ks, b)
    except BudgetExceeded:
        return RefutationOutcome(EXCEEDED, None, counter.nodes,
                                 stats={"cores": len(ks.cores),
                                        "sandwich_solves": ks.solves})
    stats = {"cores": len(ks.cores), "sandwich_solves": ks.solves,
             "cached_masks": len(ks.exact)}
    if masks is None:
        return RefutationOutcome(REFUTED, None, counter.nodes, stats=stats)
    reps = [ks.rep_for(m) for m in masks]
    box = BoxRep(tuple(reps))
    ok, witness = verify_box_representation(g, box)
    if not ok:
        raise AssertionError(f"internal error: found rep fails verification {witness}")
    return RefutationOutcome(FOUND, box, counter.nodes, stats=stats)


def boxicity_upper_from_parts(g: Graph, reps):
    """Wrap loose interval reps into a certified upper bound.

    Returns (True, BoxicityCertificate) on an exact edge match, else
    (False, mismatch witness).
    """
    box = BoxRep(tuple(reps))
    ok, witness = verify_box_representation(g, box)
    if not ok:
        return False, witness
    cert = BoxicityCertificate(kind="upper", b=box.b, graph_hash=graph_hash(g),
                               nodes_explored=0, rep=box)
    return True, cert
