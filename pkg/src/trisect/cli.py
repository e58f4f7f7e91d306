"""Command-line front end.

Every subcommand emits exactly one JSON payload on stdout; human
diagnostics go to stderr.  Exit codes: 0 success, 2 a validation
failure, 3 malformed input.  All randomness is seeded explicitly, so
identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import homology_lower_bound
from .diagram import (STANDARD_NAMES, connected_sum, load_diagram,
                      spun_lens, stabilize, standard_diagram, validate)
from .errors import LoopViolation, TrisectError
from .kirby import build_skeleton
from .loops import load_loop, validate_loop
from .walks import run_entry_bound_trials
from .zmatrix import cokernel

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_BAD_INPUT = 3


def _emit(payload, out=None):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)


def cmd_validate(args):
    report = validate(load_diagram(args.diagram))
    _emit(report.to_json())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_homology(args):
    skeleton = build_skeleton(load_diagram(args.diagram))
    free, torsion = cokernel(skeleton.linking)
    _emit({"free_rank": free, "torsion": torsion})
    return EXIT_OK


def cmd_kirby(args):
    skeleton = build_skeleton(load_diagram(args.diagram))
    _emit(skeleton.to_json())
    return EXIT_OK


def cmd_loop(args):
    diagram = load_diagram(args.diagram)
    loop = load_loop(args.loop, diagram.space)
    try:
        report = validate_loop(diagram, loop)
    except LoopViolation as exc:
        payload = {"accepted": False, "violation": type(exc).__name__,
                   "detail": str(exc)}
        for attr in ("step", "which", "subgraph"):
            if hasattr(exc, attr):
                payload[attr] = getattr(exc, attr)
        _emit(payload)
        return EXIT_FAIL
    _emit({"accepted": True, **report.to_json()})
    return EXIT_OK


def cmd_bound(args):
    _emit(homology_lower_bound(args.p).to_json())
    return EXIT_OK


def cmd_walk(args):
    summary = run_entry_bound_trials(args.g, args.m, args.trials, args.seed)
    _emit(summary)
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAIL


def cmd_gen(args):
    chosen = [bool(args.name), bool(args.spun_lens), bool(args.sum),
              bool(args.stabilize)]
    if sum(chosen) != 1:
        raise TrisectError(
            "choose exactly one of --name, --spun-lens, --sum, --stabilize")
    if args.name:
        diagram = standard_diagram(args.name)
    elif args.spun_lens:
        p, q = args.spun_lens
        diagram = spun_lens(p, q)
    elif args.sum:
        diagram = connected_sum(load_diagram(args.sum[0]),
                                load_diagram(args.sum[1]))
    else:
        diagram = stabilize(load_diagram(args.stabilize), args.which)
    _emit(diagram.to_json(), out=args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="trisect",
        description="Homological calculator for trisection diagrams: "
                    "validation, handle-diagram homology, loop checking and "
                    "length lower bounds.  JSON goes to stdout, diagnostics "
                    "to stderr.  All curve and vertex indices are 0-based.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate",
                       help="check a diagram file; exit 0 on pass, 2 on fail")
    p.add_argument("diagram", help="diagram JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("homology",
                       help="free rank and torsion presented by the "
                            "dotted/framed linking matrix")
    p.add_argument("diagram", help="diagram JSON file with an (alpha, beta) "
                                   "annotation")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("kirby",
                       help="dotted indices and linking matrix of a diagram")
    p.add_argument("diagram", help="diagram JSON file with an (alpha, beta) "
                                   "annotation")
    p.set_defaults(func=cmd_kirby)

    p = sub.add_parser("loop",
                       help="validate a loop against a diagram and report "
                            "its lengths")
    p.add_argument("diagram", help="diagram JSON file")
    p.add_argument("loop", help="loop JSON file")
    p.set_defaults(func=cmd_loop)

    p = sub.add_parser("bound",
                       help="length lower bound from a finite homology order")
    p.add_argument("--p", type=int, required=True,
                   help="order of the first homology group, at least 2")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("walk",
                       help="random-walk harness for the entry growth bounds")
    p.add_argument("--g", type=int, default=5, help="maximal genus")
    p.add_argument("--m", type=int, default=8, help="maximal move count")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("gen", help="emit a diagram JSON file")
    p.add_argument("--name", choices=STANDARD_NAMES,
                   help="one of the stock diagrams")
    p.add_argument("--spun-lens", nargs=2, type=int, metavar=("P", "Q"),
                   help="spun lens space diagram for coprime p, q")
    p.add_argument("--sum", nargs=2, metavar=("FILE1", "FILE2"),
                   help="connected sum of two diagram files")
    p.add_argument("--stabilize", metavar="FILE",
                   help="stabilize a diagram file")
    p.add_argument("--which", type=int, choices=(1, 2, 3), default=1,
                   help="which signature slot gains the new handle")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses code 2 for usage errors; map onto bad input
        return EXIT_BAD_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (TrisectError, OSError, json.JSONDecodeError, KeyError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
