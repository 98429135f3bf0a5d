"""Command-line front door.

Subcommands: gen, recognize, boxicity, lift, verify. Exit codes are the
machine contract: 0 success or positive verdict, 1 negative verdict,
2 error, 3 node budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import certs
from .family import (bipartite_power, build_G, build_Gprime, build_T, build_X,
                     cobip_completion, lift_box_representation)
from .graphs import Bipartition, GraphError, NotBipartiteError, bipartition
from .intervals import BoxRep, is_interval_graph
from .io import FORMATS, read_graph, write_graph
from .recognition import is_chordal, is_chordal_bipartite, is_strongly_chordal
from .solver import (DEFAULT_BUDGET, EXCEEDED, REFUTED, BoxicityCertificate,
                     BudgetExceeded, exact_boxicity, graph_hash,
                     refute_boxicity_at_most)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_EXCEEDED = 3

DEFAULT_SEED = 20240813


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boxlab",
                                description="boxicity and graph-class toolkit")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="seed for any randomized subroutine (searches are "
                        "deterministic; kept for reproducibility)")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate family graphs")
    gen.add_argument("family", choices=["tree", "power", "G", "Gprime", "X"])
    gen.add_argument("--k", type=int, help="odd family parameter")
    gen.add_argument("--input", help="bipartite graph to raise to a power "
                                     "(family 'power' only)")
    gen.add_argument("-o", "--output", required=True)
    gen.add_argument("--format", choices=FORMATS, default="edgelist")
    gen.add_argument("--force", action="store_true",
                     help="override the size guardrail on k")

    rec = sub.add_parser("recognize", help="recognize a graph class")
    rec.add_argument("cls", metavar="class",
                     choices=["interval", "chordal", "strongly-chordal", "cbg"])
    rec.add_argument("input")
    rec.add_argument("--format", choices=FORMATS, default="edgelist")
    rec.add_argument("--cert", help="certificate/witness output path")

    box = sub.add_parser("boxicity", help="exact boxicity or targeted refutation")
    box.add_argument("input")
    box.add_argument("--format", choices=FORMATS, default="edgelist")
    box.add_argument("--max-b", type=int, default=None)
    box.add_argument("--budget", type=int, default=None)
    box.add_argument("--refute-at", type=int, default=None,
                     help="only decide whether boxicity exceeds this value")
    box.add_argument("--threads", type=int, default=1,
                     help="worker count; results are identical for any value")
    box.add_argument("--cert", help="certificate output path")

    lift = sub.add_parser("lift", help="lift a box rep to the co-bipartite completion")
    lift.add_argument("graph")
    lift.add_argument("rep", help="JSON upper certificate for the graph")
    lift.add_argument("--format", choices=FORMATS, default="edgelist")
    lift.add_argument("--side-a", help="comma-separated side A (default: computed)")
    lift.add_argument("--cert", help="output path for the lifted certificate")

    ver = sub.add_parser("verify", help="re-check a certificate against a graph")
    ver.add_argument("cert")
    ver.add_argument("graph")
    ver.add_argument("--format", choices=FORMATS, default="edgelist")
    ver.add_argument("--recompute", action="store_true",
                     help="re-run searches behind refutation records")
    return p


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    out = {}
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise GraphError(f"bad config line {line!r}")
        key, val = (part.strip() for part in line.split("=", 1))
        out[key] = val
    return out


def _resolve_budget(args, config: dict) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("BOXLAB_BUDGET")
    if env:
        return int(env)
    if "budget" in config:
        return int(config["budget"])
    return DEFAULT_BUDGET


def _read_graph_file(path: str, fmt: str):
    return read_graph(Path(path).read_text(), fmt)


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text)


def _emit(line: str) -> None:
    sys.stdout.write(line + "\n")


def _cert_path(args, default: str) -> str:
    return args.cert if getattr(args, "cert", None) else default


def cmd_gen(args, config) -> int:
    if args.family == "power":
        if not args.input:
            raise GraphError("family 'power' needs --input")
        if args.k is None:
            raise GraphError("family 'power' needs --k")
        g = _read_graph_file(args.input, args.format)
        out_graph = bipartite_power(g, args.k)
        labels = None
    else:
        if args.k is None:
            raise GraphError(f"family {args.family!r} needs --k")
        if args.family == "tree":
            _, fam = build_T(args.k)
            out_graph, labels = fam.graph, fam.labels
        elif args.family == "G":
            fam = build_G(args.k, force=args.force)
            out_graph, labels = fam.graph, fam.labels
        elif args.family == "Gprime":
            out_graph, labels = build_Gprime(args.k, force=args.force)
        else:
            out_graph, labels = build_X(args.k, force=args.force)
    _write_text(args.output, write_graph(out_graph, args.format))
    if labels is not None:
        sidecar = {"k": args.k,
                   "layers": {str(v): list(lab) for v, lab in sorted(labels.items())}}
        _write_text(args.output + ".labels.json", json.dumps(sidecar) + "\n")
    _emit(f"GEN {args.family} {args.output} ok")
    return EXIT_OK


def cmd_recognize(args, config) -> int:
    g = _read_graph_file(args.input, args.format)
    cert_path = _cert_path(args, args.input + ".cert.json")

    if args.cls == "interval":
        ok, payload = is_interval_graph(g)
        if ok:
            cert = BoxicityCertificate(kind="upper", b=1, graph_hash=graph_hash(g),
                                       nodes_explored=0, rep=BoxRep((payload,)))
            doc = certs.box_document(cert)
        elif payload.kind == "chordless-cycle":
            doc = certs.witness_document("not-interval", "chordless-cycle", g,
                                         cycle=list(payload.cycle))
        else:
            doc = certs.witness_document("not-interval", "no-arrangement", g,
                                         cliques=[list(c) for c in payload.cliques])
    elif args.cls == "chordal":
        ok, payload = is_chordal(g)
        doc = certs.elimination_document(payload, g) if ok else \
            certs.witness_document("not-chordal", "chordless-cycle", g,
                                   cycle=list(payload))
    elif args.cls == "strongly-chordal":
        ok, payload = is_strongly_chordal(g)
        if ok:
            doc = certs.elimination_document(payload, g)
        else:
            doc = certs.witness_document("not-strongly-chordal", "stuck-simple",
                                         g, residual=list(payload))
    else:
        ok, payload = is_chordal_bipartite(g)
        if ok:
            doc = certs.cbg_document(payload, g)
        elif payload.kind == "odd-cycle":
            doc = certs.witness_document("not-cbg", "odd-cycle", g,
                                         cycle=list(payload.cycle))
        elif payload.kind == "long-cycle":
            doc = certs.witness_document("not-cbg", "long-cycle", g,
                                         cycle=list(payload.cycle))
        else:
            sides = bipartition(g)
            doc = certs.witness_document("not-cbg", "stuck", g,
                                         residual=list(payload.residual),
                                         side_a=sorted(sides.a),
                                         side_b=sorted(sides.b))
    _write_text(cert_path, certs.dump_document(doc))
    verdict = "yes" if ok else "no"
    _emit(f"CLASS {args.cls} {verdict} witness={cert_path}")
    return EXIT_OK if ok else EXIT_NO


def cmd_boxicity(args, config) -> int:
    g = _read_graph_file(args.input, args.format)
    budget = _resolve_budget(args, config)

    if args.refute_at is not None:
        outcome = refute_boxicity_at_most(g, args.refute_at, budget=budget)
        cert_path = _cert_path(args, f"{args.input}.refute-b{args.refute_at}.json")
        if outcome.verdict == EXCEEDED:
            _emit(f"BOXICITY {args.input} exceeded")
            return EXIT_EXCEEDED
        if outcome.verdict == REFUTED:
            cert = BoxicityCertificate(kind="refutation", b=args.refute_at,
                                       graph_hash=graph_hash(g),
                                       nodes_explored=outcome.nodes,
                                       stats=outcome.stats)
            _write_text(cert_path, certs.dump_document(certs.box_document(cert)))
            _emit(f"BOXICITY {args.input} box>{args.refute_at} (refuted) "
                  f"witness={cert_path}")
            return EXIT_OK
        cert = BoxicityCertificate(kind="upper", b=outcome.rep.b,
                                   graph_hash=graph_hash(g),
                                   nodes_explored=outcome.nodes, rep=outcome.rep)
        _write_text(cert_path, certs.dump_document(certs.box_document(cert)))
        _emit(f"BOXICITY {args.input} box<={args.refute_at} witness={cert_path}")
        return EXIT_NO

    max_b = args.max_b
    if max_b is None and "max_b" in config:
        max_b = int(config["max_b"])
    result = exact_boxicity(g, max_b=max_b, budget=budget)
    base = _cert_path(args, args.input + ".box.json")
    for ref in result.refutations:
        path = f"{base}.refuted-b{ref.b}.json"
        _write_text(path, certs.dump_document(certs.box_document(ref)))
    if result.status == "exceeded":
        _emit(f"BOXICITY {args.input} exceeded")
        return EXIT_EXCEEDED
    if result.status == "refuted-only":
        bound = max(ref.b for ref in result.refutations)
        _emit(f"BOXICITY {args.input} box>{bound} (refuted)")
        return EXIT_OK
    _write_text(base, certs.dump_document(certs.box_document(result.certificate)))
    _emit(f"BOXICITY {args.input} box={result.boxicity} witness={base}")
    return EXIT_OK


def cmd_lift(args, config) -> int:
    g = _read_graph_file(args.graph, args.format)
    doc = certs.load_document(Path(args.rep).read_text())
    if doc.get("kind") != "upper" or not doc.get("reps"):
        raise GraphError("lift needs an 'upper' certificate with reps")
    box = BoxRep(tuple(certs.rep_from_triples(entry) for entry in doc["reps"]))
    if args.side_a:
        side_a = frozenset(int(tok) for tok in args.side_a.split(","))
        sides = Bipartition(side_a, frozenset(range(g.n)) - side_a)
        sides.validate(g)
    else:
        sides = bipartition(g)
    lifted = lift_box_representation(g, box, sides)
    completion = cobip_completion(g, sides)
    cert = BoxicityCertificate(kind="upper", b=lifted.b,
                               graph_hash=graph_hash(completion),
                               nodes_explored=0, rep=lifted)
    cert_path = _cert_path(args, args.graph + ".lifted.json")
    _write_text(cert_path, certs.dump_document(certs.box_document(cert)))
    _emit(f"LIFT {args.graph} ok witness={cert_path}")
    return EXIT_OK


def cmd_verify(args, config) -> int:
    g = _read_graph_file(args.graph, args.format)
    doc = certs.load_document(Path(args.cert).read_text())
    code, message = certs.verify_document(doc, g, recompute=args.recompute)
    word = {certs.PASS: "pass", certs.FAIL: "fail", certs.MALFORMED: "malformed"}[code]
    _emit(f"VERIFY {args.cert} {word} ({message})")
    return {certs.PASS: EXIT_OK, certs.FAIL: EXIT_NO,
            certs.MALFORMED: EXIT_ERROR}[code]


HANDLERS = {
    "gen": cmd_gen,
    "recognize": cmd_recognize,
    "boxicity": cmd_boxicity,
    "lift": cmd_lift,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _load_config(args.config)
        return HANDLERS[args.command](args, config)
    except BudgetExceeded:
        _emit(f"{args.command.upper()} exceeded")
        return EXIT_EXCEEDED
    except (GraphError, NotBipartiteError, OSError, ValueError,
            json.JSONDecodeError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
