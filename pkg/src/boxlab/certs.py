"""JSON certificate documents and their independent re-checks.

Documents are emitted with a fixed field order so goldens are byte-stable.
Every kind a command can write can be re-checked here against the graph it
claims to describe; refutation records are completion claims, so their
re-check is structural unless the caller asks for a full re-run.
"""

from __future__ import annotations

import json

from .graphs import Graph, GraphError
from .intervals import BoxRep, IntervalRep, verify_box_representation
from .recognition import (CbgCertificate, EliminationCertificate,
                          _is_chordless_cycle, incompatible_pair,
                          split_completion, verify_perfect_elimination,
                          verify_simple_elimination)
from .graphs import Bipartition
from .solver import BoxicityCertificate, graph_hash

PASS, FAIL, MALFORMED = 0, 1, 2


def dump_document(doc: dict) -> str:
    return json.dumps(doc) + "\n"


def load_document(text: str) -> dict:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "kind" not in doc:
        raise GraphError("certificate document must be an object with a 'kind'")
    return doc


def rep_to_triples(rep: IntervalRep) -> list:
    return [[v, l, r] for v, (l, r) in sorted(rep.intervals.items())]


def rep_from_triples(data) -> IntervalRep:
    intervals = {}
    for item in data:
        v, l, r = item
        if not all(isinstance(x, int) for x in (v, l, r)):
            raise GraphError("rep entries must be integer [vertex, l, r]")
        if v in intervals:
            raise GraphError(f"vertex {v} assigned twice")
        intervals[v] = (l, r)
    return IntervalRep(intervals)


def box_document(cert: BoxicityCertificate) -> dict:
    doc = {"kind": cert.kind, "b": cert.b, "graph_hash": cert.graph_hash,
           "nodes_explored": cert.nodes_explored}
    if cert.kind == "upper":
        doc["reps"] = [rep_to_triples(rep) for rep in cert.rep.reps] \
            if cert.rep is not None else []
    else:
        doc["stats"] = dict(sorted(cert.stats.items()))
    return doc


def elimination_document(cert: EliminationCertificate, g: Graph) -> dict:
    return {"kind": f"{cert.kind}-elimination", "graph_hash": graph_hash(g),
            "ordering": list(cert.ordering)}


def cbg_document(cert: CbgCertificate, g: Graph) -> dict:
    return {"kind": "cbg", "graph_hash": graph_hash(g),
            "side_a": sorted(cert.sides.a), "side_b": sorted(cert.sides.b),
            "ordering": list(cert.elimination.ordering)}


def witness_document(claim: str, witness_kind: str, g: Graph, **payload) -> dict:
    doc = {"kind": "witness", "claim": claim, "witness_kind": witness_kind,
           "graph_hash": graph_hash(g)}
    for key in sorted(payload):
        doc[key] = payload[key]
    return doc


def _check_hash(doc: dict, g: Graph):
    stored = doc.get("graph_hash")
    if not isinstance(stored, str):
        raise GraphError("missing graph_hash")
    return stored == graph_hash(g)


def verify_document(doc: dict, g: Graph, recompute: bool = False):
    """Re-check a certificate document against a graph.

    Returns (code, message) with code PASS, FAIL, or MALFORMED. Structural
    defects (bad intervals, bad orderings as permutations) are MALFORMED;
    a well-formed certificate that does not certify this graph is FAIL.
    """
    try:
        kind = doc["kind"]
        if kind == "upper":
            return _verify_upper(doc, g)
        if kind == "refutation":
            return _verify_refutation(doc, g, recompute)
        if kind in ("perfect-elimination", "simple-elimination"):
            return _verify_elimination(doc, g)
        if kind == "cbg":
            return _verify_cbg(doc, g)
        if kind == "witness":
            return _verify_witness(doc, g)
        return MALFORMED, f"unknown certificate kind {kind!r}"
    except (KeyError, TypeError, ValueError, GraphError) as e:
        return MALFORMED, f"malformed certificate: {e}"


def _verify_upper(doc: dict, g: Graph):
    reps = [rep_from_triples(entry) for entry in doc["reps"]]
    if len(reps) != doc["b"]:
        return MALFORMED, "b does not match the number of reps"
    if not _check_hash(doc, g):
        return FAIL, "graph hash mismatch"
    if not reps:
        if g.is_complete():
            return PASS, "complete graph needs no coordinates"
        return FAIL, "empty rep list but graph is not complete"
    ok, witness = verify_box_representation(g, BoxRep(tuple(reps)))
    if ok:
        return PASS, f"verified {len(reps)}-rep"
    return FAIL, f"realization mismatch at {witness}"


def _verify_refutation(doc: dict, g: Graph, recompute: bool):
    b = doc["b"]
    if not isinstance(b, int) or b < 0:
        return MALFORMED, "bad refuted b"
    if not _check_hash(doc, g):
        return FAIL, "graph hash mismatch"
    if not recompute:
        return PASS, f"refutation record for b={b} (structural check only)"
    from .solver import REFUTED, refute_boxicity_at_most
    outcome = refute_boxicity_at_most(g, max(b, 1))
    if outcome.verdict == REFUTED:
        return PASS, f"re-ran search: still refuted at b={b}"
    return FAIL, f"re-run produced {outcome.verdict}"


def _verify_elimination(doc: dict, g: Graph):
    ordering = doc["ordering"]
    if sorted(ordering) != list(range(g.n)):
        return MALFORMED, "ordering is not a permutation of the vertices"
    if not _check_hash(doc, g):
        return FAIL, "graph hash mismatch"
    if doc["kind"] == "perfect-elimination":
        ok = verify_perfect_elimination(g, ordering)
    else:
        ok = verify_simple_elimination(g, ordering)
    return (PASS, "elimination ordering verified") if ok else \
        (FAIL, "elimination ordering does not verify")


def _verify_cbg(doc: dict, g: Graph):
    side_a, side_b = doc["side_a"], doc["side_b"]
    ordering = doc["ordering"]
    if sorted(side_a + side_b) != list(range(g.n)):
        return MALFORMED, "sides do not partition the vertices"
    if sorted(ordering) != list(range(g.n)):
        return MALFORMED, "ordering is not a permutation of the vertices"
    if not _check_hash(doc, g):
        return FAIL, "graph hash mismatch"
    sides = Bipartition(frozenset(side_a), frozenset(side_b))
    try:
        sides.validate(g)
    except GraphError as e:
        return FAIL, f"invalid bipartition: {e}"
    split = split_completion(g, sides, "A")
    if verify_simple_elimination(split, ordering):
        return PASS, "split completion eliminates simply"
    return FAIL, "ordering does not simply eliminate the split completion"


def _verify_witness(doc: dict, g: Graph):
    wkind = doc["witness_kind"]
    if not _check_hash(doc, g):
        return FAIL, "graph hash mismatch"
    if wkind in ("chordless-cycle", "long-cycle"):
        cycle = doc["cycle"]
        if len(cycle) != len(set(cycle)):
            return MALFORMED, "cycle repeats vertices"
        if _is_chordless_cycle(g, cycle):
            return PASS, f"chordless cycle of length {len(cycle)} verified"
        return FAIL, "claimed cycle is not a chordless cycle"
    if wkind == "odd-cycle":
        cycle = doc["cycle"]
        if len(cycle) % 2 == 0 or len(cycle) < 3:
            return MALFORMED, "odd cycle witness has even or trivial length"
        k = len(cycle)
        if all(g.has_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)):
            return PASS, f"odd cycle of length {k} verified"
        return FAIL, "claimed odd cycle is not a cycle of the graph"
    if wkind == "stuck":
        side_a = doc["side_a"]
        side_b = doc["side_b"]
        sides = Bipartition(frozenset(side_a), frozenset(side_b))
        try:
            sides.validate(g)
        except GraphError as e:
            return FAIL, f"invalid bipartition: {e}"
        return _check_stuck(split_completion(g, sides, "A"), doc["residual"])
    if wkind == "stuck-simple":
        return _check_stuck(g, doc["residual"])
    if wkind == "no-arrangement":
        return PASS, "arrangement exhaustion record (structural check only)"
    if wkind == "mismatch":
        u, v, side = doc["pair"]
        has = g.has_edge(u, v)
        if (side == "missing") == has:
            return PASS, "mismatch witness consistent with the graph"
        return FAIL, "mismatch witness does not match the graph"
    return MALFORMED, f"unknown witness kind {wkind!r}"


def _check_stuck(h: Graph, residual):
    """No vertex of the residual set may be simple in the graph it induces."""
    alive = 0
    for v in residual:
        if not 0 <= v < h.n:
            raise GraphError(f"residual vertex {v} out of range")
        alive |= 1 << v
    for v in residual:
        if incompatible_pair(h, v, alive) is None:
            return FAIL, f"vertex {v} is simple in the residual graph"
    return PASS, "residual graph has no simple vertex"
