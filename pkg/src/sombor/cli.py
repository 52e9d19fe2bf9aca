"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 input parse error,
3 infeasible or invalid sequence, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from typing import List, Optional

from . import __version__
from .degseq import (
    COROLLARY_KINDS,
    NonRealizable,
    ReducedDegreeSequence,
    SequenceSyntaxError,
    corollary_sequence,
    expand,
    parse_sequence,
    validate,
)
from .extremal import (
    InconsistentLevels,
    alt_greedy_tree,
    alternating_level_greedy_tree,
    greedy_tree,
    level_greedy_tree,
)
from .graph import (
    Graph,
    GraphFormatError,
    LeveledDegreeSequence,
    edge_type_multiset,
    export_dot,
    parse_edge_list,
    serialize_edge_list,
    sombor_index,
)
from .oracle import THEOREMS, CapExceeded, extremal_scan, round_sig, verify

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_INFEASIBLE, EXIT_CAP = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(payload: dict, args) -> None:
    if not args.no_meta:
        payload["meta"] = {
            "version": __version__,
            "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        }
    if args.pretty:
        for key, value in payload.items():
            if isinstance(value, (list, dict)):
                value = json.dumps(value, sort_keys=True)
            print(f"{key:>16}: {value}")
    else:
        print(json.dumps(payload, sort_keys=True))


def _sequence(text: str) -> List[int]:
    try:
        return parse_sequence(text)
    except SequenceSyntaxError as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None


def _tree_sequence(text: str):
    """Full degree sequence; input without 1s is read as a reduced sequence."""
    raw = _sequence(text)
    if raw != [0] and 1 not in raw and all(d >= 2 for d in raw):
        return expand(ReducedDegreeSequence(tuple(raw)))
    return validate(raw)


def _levels(text: str) -> LeveledDegreeSequence:
    return LeveledDegreeSequence(tuple(tuple(_sequence(part)) for part in text.split("/")))


def _graph_payload(g: Graph, alpha: float = 0.5) -> dict:
    value = sombor_index(g, alpha)
    return {
        "n": g.n,
        "m": g.m,
        "alpha": alpha,
        "sombor": round_sig(value.value),
        "edge_types": value.edge_types.to_json(),
        "degree_sequence": list(g.degree_sequence()),
    }


def cmd_compute(args) -> int:
    try:
        with open(args.graph, encoding="utf-8") as fh:
            g = parse_edge_list(fh.read())
    except (OSError, GraphFormatError) as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    payload = _graph_payload(g, args.alpha)
    payload.pop("degree_sequence")
    _emit(payload, args)
    return EXIT_OK


def cmd_build(args) -> int:
    root = None
    if args.kind in ("greedy", "altgreedy"):
        if not args.seq:
            raise CliError(EXIT_PARSE, "--seq is required for this kind")
        seq = _tree_sequence(args.seq)
        g = greedy_tree(seq) if args.kind == "greedy" else alt_greedy_tree(seq)
    else:
        if not args.levels:
            raise CliError(EXIT_PARSE, "--levels is required for this kind")
        ld = _levels(args.levels)
        build = level_greedy_tree if args.kind == "level-greedy" else alternating_level_greedy_tree
        rt = build(ld)
        g, root = rt.tree, rt.root
    payload = {"kind": args.kind, **_graph_payload(g), "edges": [list(e) for e in g.edges()]}
    if root is not None:
        payload["root"] = list(root) if isinstance(root, tuple) else root
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(serialize_edge_list(g))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(export_dot(g))
    _emit(payload, args)
    return EXIT_OK


def cmd_scan(args) -> int:
    seq = _tree_sequence(args.seq)
    scan = extremal_scan(seq)
    g, m = greedy_tree(seq), alt_greedy_tree(seq)
    min_ok = edge_type_multiset(g) == scan.min_value.edge_types
    max_ok = edge_type_multiset(m) == scan.max_value.edge_types
    payload = scan.to_json()
    payload["greedy_matches_min"] = min_ok
    payload["altgreedy_matches_max"] = max_ok
    _emit(payload, args)
    return EXIT_OK if min_ok and max_ok else EXIT_FAIL


def cmd_verify(args) -> int:
    seq = _tree_sequence(args.seq) if args.seq else None
    seq2 = _tree_sequence(args.seq2) if args.seq2 else None
    if args.max_n is not None:
        orders = range(1 if args.theorem != "unicyclic" else 3, args.max_n + 1)
        reports = [verify(args.theorem, n=k, jobs=args.jobs) for k in orders]
        payload = {
            "theorem": args.theorem,
            "scope": {"max_n": args.max_n},
            "instances": sum(r.instances for r in reports),
            "verdict": "pass" if all(r.passed for r in reports) else "fail",
            "failures": [f for r in reports for f in r.failures],
        }
        if not args.no_meta:
            payload["elapsed_ms"] = round(sum(r.elapsed_ms for r in reports), 3)
        passed = payload["verdict"] == "pass"
    else:
        if args.n is None and seq is None:
            raise CliError(EXIT_PARSE, "give --n, --max-n or --seq")
        try:
            report = verify(args.theorem, n=args.n, seq=seq, seq2=seq2, jobs=args.jobs)
        except ValueError as exc:
            if isinstance(exc, NonRealizable):
                raise
            raise CliError(EXIT_PARSE, str(exc)) from None
        payload = report.to_json(meta=not args.no_meta)
        passed = report.passed
    _emit(payload, args)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_corollary(args) -> int:
    kind = args.kind.replace("-", "_")
    seq = corollary_sequence(kind, args.n, args.param)
    minimizer = kind == "branching"
    g = greedy_tree(seq) if minimizer else alt_greedy_tree(seq)
    payload = {
        "kind": kind,
        "n": args.n,
        "param": args.param,
        "sequence": list(seq),
        "extremal_tree": "greedy" if minimizer else "altgreedy",
        "bound": "lower" if minimizer else "upper",
        "sombor": round_sig(sombor_index(g).value),
        "edges": [list(e) for e in g.edges()],
    }
    _emit(payload, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--no-meta", action="store_true", help="omit timestamp and timing fields")

    p = argparse.ArgumentParser(prog="sombor", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="Sombor index of an edge-list file")
    c.add_argument("graph")
    c.add_argument("--alpha", type=float, default=0.5)
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("build", parents=[common], help="construct an extremal tree")
    b.add_argument("--kind", required=True,
                   choices=["greedy", "altgreedy", "level-greedy", "alt-level-greedy"])
    b.add_argument("--seq", help="degree sequence, e.g. 3,2^2,1^3")
    b.add_argument("--levels", help="leveled degree sequence, levels split by '/', e.g. 3/2,2,1/1,1")
    b.add_argument("--out", help="write the edge list here")
    b.add_argument("--dot", help="write a DOT rendering here")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("scan", parents=[common], help="exhaustive min/max over all trees with a degree sequence")
    s.add_argument("--seq", required=True)
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", parents=[common], help="check a theorem exhaustively")
    v.add_argument("--theorem", required=True, choices=list(THEOREMS))
    v.add_argument("--n", type=int)
    v.add_argument("--max-n", type=int, help="every order from 1 up to this value")
    v.add_argument("--seq")
    v.add_argument("--seq2")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("corollary", parents=[common], help="extremal sequence and tree for a corollary")
    k.add_argument("--kind", required=True,
                   choices=list(COROLLARY_KINDS) + [c.replace("_", "-") for c in COROLLARY_KINDS if "_" in c])
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--param", type=int, default=0)
    k.set_defaults(func=cmd_corollary)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (NonRealizable, InconsistentLevels) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
