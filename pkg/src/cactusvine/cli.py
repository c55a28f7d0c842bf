"""Command-line frontend: compute the cactus, dump labels, verify.

Exit codes: 0 ok, 1 input/parse problems, 2 verification failure,
3 packing retries exhausted.  Identical (input, seed, flags) produce
byte-identical output files.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .cactus import cactus_to_dot, cactus_to_json
from .graph import GraphError, parse_graph
from .labels import label_size, materialize
from .oracle import ORACLE_LIMIT, TooLarge, verify_cactus, verify_labels
from .pipeline import PackingFailed, run_pipeline

log = logging.getLogger("cactusvine")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-i", "--input", required=True, help="input graph file (DIMACS-like)")
    p.add_argument("-r", "--root", type=int, default=None,
                   help="1-indexed root vertex (default: the file's, else 1)")
    p.add_argument("--packing", choices=["auto", "greedy", "exhaustive"], default="auto")
    p.add_argument("--rounds", type=int, default=None, help="greedy packing rounds")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=3)
    p.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("--verify", action="store_true",
                   help=f"compare against the brute-force oracle (n <= {ORACLE_LIMIT})")
    p.add_argument("--threads", type=int, default=1,
                   help="reserved; labeling currently runs single-threaded")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cactusvine",
        description="global minimum cuts and their cactus representation")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, hlp in (("cactus", "compute the cactus representation"),
                      ("labels", "emit per-vertex/per-edge minimal mincut labels"),
                      ("verify", "run the full pipeline and check it against the oracle")):
        _add_common(sub.add_parser(name, help=hlp))
    return ap


def _load(args):
    root = None if args.root is None else args.root - 1
    with open(args.input, "rb") as fh:
        return parse_graph(fh.read(), root_override=root)


def _run(args, g):
    return run_pipeline(g, strategy=args.packing, rounds=args.rounds,
                        seed=args.seed, retries=args.retries)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _verify_result(g, res) -> int:
    if g.n > ORACLE_LIMIT:
        raise TooLarge(f"--verify needs n <= {ORACLE_LIMIT}, got {g.n}")
    rep = verify_cactus(g, res.cactus)
    vc = {v: (materialize(l, res.trees) if l else None)
          for v, l in enumerate(res.vertex_labels)}
    ec = {e: (materialize(l, res.trees) if l else None)
          for e, l in enumerate(res.edge_labels)}
    rep2 = verify_labels(g, vc, ec)
    print(f"oracle cactus check: {rep}")
    print(f"oracle label check: {'PASS' if rep2.ok else rep2}")
    return 0 if rep.ok and rep2.ok else 2


def _labels_json(res) -> str:
    def row(item, label):
        if label is None:
            return {"item": item, "label": None}
        return {"item": item, "kind": label.kind, "v": label.v + 1,
                "w": None if label.w is None else label.w + 1,
                "tree": label.tree_id, "size": label_size(label, res.trees)}

    payload = {
        "lambda": res.lam,
        "vertices": [row(f"v{v + 1}", l) for v, l in enumerate(res.vertex_labels)],
        "edges": [row(f"e{e + 1}", l) for e, l in enumerate(res.edge_labels)],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("CACTUSVINE_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        g = _load(args)
    except (OSError, GraphError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    try:
        res = _run(args, g)
    except PackingFailed as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except GraphError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    stats = res.cactus.stats()
    print(f"lambda = {res.lam}", file=sys.stderr)
    print(f"cactus: {stats['nodes']} nodes, {stats['bridges']} bridges, "
          f"{stats['cycles']} cycles {stats['cycle_lengths']}", file=sys.stderr)

    if args.command == "cactus":
        _emit(args, cactus_to_dot(res.cactus) if args.format == "dot"
              else cactus_to_json(res.cactus))
        if args.verify:
            try:
                return _verify_result(g, res)
            except TooLarge as err:
                print(f"error: {err}", file=sys.stderr)
                return 2
        return 0
    if args.command == "labels":
        _emit(args, _labels_json(res))
        if args.verify:
            try:
                return _verify_result(g, res)
            except TooLarge as err:
                print(f"error: {err}", file=sys.stderr)
                return 2
        return 0
    # verify subcommand
    try:
        return _verify_result(g, res)
    except TooLarge as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
