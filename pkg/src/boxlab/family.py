"""Builders for the tree-power family and its completions.

The family tree for odd k is a root joined to g(k) disjoint paths ("columns")
of k+1 vertices each; layer i collects the i-th vertex of every column. Its
k-th bipartite power, the co-bipartite completion of that power, and the
completion minus the root are the graphs whose boxicity this project pins
down at small k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (Bipartition, Graph, GraphError, RootedTree,
                     bfs_distances, bipartition, from_edges, induced_subgraph)
from .intervals import BoxRep, IntervalRep, realize_box, verify_box_representation

DEFAULT_K_CAP = 7


@dataclass(frozen=True)
class FamilyGraph:
    """A family member with its (layer, column) labels.

    labels[v] = (i, j) with the root at (0, 0); columns are 1-based. Side A
    holds the odd layers, side B the even ones (the root included).
    """

    graph: Graph
    labels: dict
    k: int
    sides: Bipartition

    def vertex_at(self, layer: int, column: int) -> int:
        for v, lab in self.labels.items():
            if lab == (layer, column):
                return v
        raise KeyError((layer, column))


def _check_k(k: int) -> None:
    if k < 1 or k % 2 == 0:
        raise GraphError(f"family parameter must be a positive odd integer, got {k}")


def g_value(k: int) -> int:
    """Column count of the family tree: g(1)=2 and
    g(k) = ((k+1)/2) * (g(k-2) - 1) + 1."""
    _check_k(k)
    val = 2
    for kk in range(3, k + 1, 2):
        val = (kk + 1) // 2 * (val - 1) + 1
    return val


def _family_sides(labels: dict) -> Bipartition:
    a = frozenset(v for v, (i, _) in labels.items() if i % 2 == 1)
    b = frozenset(v for v, (i, _) in labels.items() if i % 2 == 0)
    return Bipartition(a, b)


def build_T(k: int) -> tuple[RootedTree, FamilyGraph]:
    """Family tree for odd k: vertex 0 is the root, adjacent to the first
    vertex of each of g(k) columns of k+1 vertices.

    The construction self-checks the distance facts everything downstream
    leans on: d(root, layer i) = i, same-column distance |i - i'|, and
    cross-column distance i + i'.
    """
    _check_k(k)
    cols = g_value(k)
    layers = k + 1
    n = 1 + layers * cols

    def vid(i: int, j: int) -> int:
        return 1 + (i - 1) * cols + (j - 1)

    edges = [(0, vid(1, j)) for j in range(1, cols + 1)]
    for i in range(1, layers):
        for j in range(1, cols + 1):
            edges.append((vid(i, j), vid(i + 1, j)))
    graph = from_edges(n, edges)
    labels = {0: (0, 0)}
    for i in range(1, layers + 1):
        for j in range(1, cols + 1):
            labels[vid(i, j)] = (i, j)

    dist0 = bfs_distances(graph, 0)
    for v, (i, j) in labels.items():
        if dist0[v] != i:
            raise AssertionError(f"self-check failed: d(root, v_{i},{j}) = {dist0[v]}")
    d11 = bfs_distances(graph, vid(1, 1))
    for i in range(1, layers + 1):
        if d11[vid(i, 1)] != i - 1:
            raise AssertionError("self-check failed: same-column distance")
        if cols > 1 and d11[vid(i, 2)] != i + 1:
            raise AssertionError("self-check failed: cross-column distance")

    tree = RootedTree(graph, 0)
    fam = FamilyGraph(graph=graph, labels=labels, k=k, sides=_family_sides(labels))
    return tree, fam


def bipartite_power(g: Graph, k: int, sides: Bipartition | None = None) -> Graph:
    """Graph on the same vertices joining pairs at odd distance at most k.

    Requires bipartite input and odd k; the input's bipartition also
    bipartitions the result, since odd-distance pairs straddle the sides.
    """
    _check_k(k)
    if sides is None:
        sides = bipartition(g)
    else:
        sides.validate(g)
    rows = [0] * g.n
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(g.n):
            d = dist[v]
            if v != u and d != float("inf") and d % 2 == 1 and d <= k:
                rows[u] |= 1 << v
    return Graph(g.n, rows)


def build_G(k: int, force: bool = False) -> FamilyGraph:
    """k-th bipartite power of the family tree, labels carried over.

    Refuses k above the desk-scale cap unless forced.
    """
    guarded_k(k, force=force)
    _, fam = build_T(k)
    power = bipartite_power(fam.graph, k, fam.sides)
    return FamilyGraph(graph=power, labels=fam.labels, k=k, sides=fam.sides)


def cobip_completion(g: Graph, sides: Bipartition) -> Graph:
    """Turn both sides of a bipartition into cliques; cross edges unchanged."""
    sides.validate(g)
    ma, mb = sides.mask("A"), sides.mask("B")
    rows = []
    for u in range(g.n):
        r = g.row(u)
        if ma >> u & 1:
            r |= ma & ~(1 << u)
        else:
            r |= mb & ~(1 << u)
        rows.append(r)
    return Graph(g.n, rows)


def build_Gprime(k: int, force: bool = False) -> tuple[Graph, dict]:
    """Co-bipartite completion of the k-th family power, with labels."""
    fam = build_G(k, force=force)
    return cobip_completion(fam.graph, fam.sides), dict(fam.labels)


def build_X(k: int, force: bool = False) -> tuple[Graph, dict]:
    """Completion minus the root, with labels relabelled densely."""
    gp, labels = build_Gprime(k, force=force)
    sub, old_of_new = induced_subgraph(gp, [v for v in range(gp.n) if v != 0])
    new_labels = {i: labels[old] for i, old in enumerate(old_of_new)}
    return sub, new_labels


def guarded_k(k: int, cap: int = DEFAULT_K_CAP, force: bool = False) -> int:
    """Desk-scale guardrail: the family explodes fast, so k above the cap is
    rejected unless forced."""
    _check_k(k)
    if k > cap and not force:
        raise GraphError(
            f"k={k} builds {1 + (k + 1) * g_value(k)} vertices; pass force to override")
    return k


def lift_box_representation(g: Graph, box: BoxRep, sides: Bipartition) -> BoxRep:
    """Stretch a b-rep of a bipartite graph into a 2b-rep of its co-bipartite
    completion.

    For each rep with global extremes s = min l and t = max r, one stretched
    copy pins side A down to s and side B up to t, and a mirrored copy does
    the reverse. The result is verified to realize the completion exactly.
    """
    ok, witness = verify_box_representation(g, box)
    if not ok:
        raise GraphError(f"rep does not represent the graph: mismatch {witness}")
    sides.validate(g)
    primed = []
    mirrored = []
    for rep in box.reps:
        s = min(l for l, _ in rep.intervals.values())
        t = max(r for _, r in rep.intervals.values())
        fp = {}
        fm = {}
        for v, (l, r) in rep.intervals.items():
            if v in sides.a:
                fp[v] = (s, r)
                fm[v] = (l, t)
            else:
                fp[v] = (l, t)
                fm[v] = (s, r)
        primed.append(IntervalRep(fp))
        mirrored.append(IntervalRep(fm))
    lifted = BoxRep(tuple(primed + mirrored))
    target = cobip_completion(g, sides)
    if realize_box(lifted) != target:
        raise AssertionError("internal error: lifted rep does not realize the completion")
    return lifted
