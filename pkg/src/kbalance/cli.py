"""Command-line front end.

Exit codes: 0 success, 1 I/O or internal failure, 2 validation or contract
failure (bad flags, malformed files, guard violations).
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .core import GridGraph, InputError
from .cornercut import corner_cut_oracle
from .reductions import FAMILIES, ReductionBundle, reduce
from .render import render_ascii, render_svg
from .tpart import generate, solve_exact
from .verify import PARTITIONERS, assemble_yes_partition, audit, decide_three_partition


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj, out: str | None):
    if out:
        formats.write(out, obj)
    else:
        sys.stdout.write(formats.dumps(obj))


def _load_bundle(path) -> ReductionBundle:
    return formats.bundle_from_json(formats.read(path))


def cmd_gen3p(args) -> int:
    _emit(formats.instance_to_json(generate(args.k, args.s, args.mode, args.seed)), args.out)
    return 0


def cmd_tpsolve(args) -> int:
    instance = formats.instance_from_json(formats.read(args.input))
    _emit(formats.solution_to_json(solve_exact(instance)), args.out)
    return 0


def cmd_reduce(args) -> int:
    instance = formats.instance_from_json(formats.read(args.input))
    bundle = reduce(instance, args.family, args.c, args.d)
    _emit(formats.bundle_to_json(bundle), args.out)
    return 0


def cmd_solve(args) -> int:
    bundle = _load_bundle(args.bundle)
    if args.algo == "assemble" and args.solution:
        solution = formats.solution_from_json(formats.read(args.solution))
        if solution is None:
            raise InputError("solution file holds no triples")
        partition = assemble_yes_partition(bundle, solution)
    elif args.algo == "assemble" and not args.solution_from_exact:
        raise InputError("assemble needs --solution FILE or --solution-from-exact")
    else:
        partition = PARTITIONERS[args.algo](bundle)
    _emit(formats.partition_to_json(partition), args.out)
    return 0


def cmd_verify(args) -> int:
    bundle = _load_bundle(args.bundle)
    partition = formats.partition_from_json(formats.read(args.partition))
    outcome = audit(bundle, partition)
    sys.stdout.write(formats.dumps(formats.report_to_json(outcome)))
    ok = outcome.reduction_condition_ok and all(c.passed for c in outcome.certificates)
    return 0 if ok else 2


def cmd_decide(args) -> int:
    bundle = _load_bundle(args.bundle)
    print(decide_three_partition(bundle, args.algo, args.alpha))
    return 0


def cmd_oracle(args) -> int:
    print(corner_cut_oracle(args.w, args.h, args.b))
    return 0


def _parse_rect(text: str) -> GridGraph:
    try:
        w, h = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise InputError(f"--rect expects WxH, got {text!r}") from None
    return GridGraph.rectangle(w, h)


def cmd_render(args) -> int:
    connectors = ()
    if args.bundle:
        bundle = _load_bundle(args.bundle)
        if not isinstance(bundle.graph, GridGraph):
            raise InputError("render needs a grid bundle")
        grid, connectors = bundle.graph, bundle.connector_edges
    elif args.rect:
        grid = _parse_rect(args.rect)
    else:
        raise InputError("render needs --bundle or --rect")
    partition = formats.partition_from_json(formats.read(args.partition)) if args.partition else None
    if args.format == "svg":
        text = render_svg(grid, partition, connectors)
    else:
        text = render_ascii(grid, partition)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kbalance", description="k-balanced partitioning reductions and oracles")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen3p", help="generate a 3-PARTITION instance")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--mode", choices=("yes", "no", "random"), default="random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen3p)

    p = sub.add_parser("tpsolve", help="solve a 3-PARTITION instance exactly")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_tpsolve)

    p = sub.add_parser("reduce", help="build a reduction graph")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--c", default="0", help="rational exponent, e.g. 1/4")
    p.add_argument("--d", default="0", help="rational exponent")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("solve", help="partition a bundle's graph")
    p.add_argument("--algo", choices=tuple(PARTITIONERS), required=True)
    p.add_argument("--bundle", required=True)
    p.add_argument("--solution", help="triples file for --algo assemble")
    p.add_argument("--solution-from-exact", action="store_true",
                   help="solve the source instance exactly for --algo assemble")
    p.add_argument("--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="audit a partition of a bundle")
    p.add_argument("--bundle", required=True)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decide", help="decide the source instance with a partitioner")
    p.add_argument("--bundle", required=True)
    p.add_argument("--algo", choices=tuple(PARTITIONERS), default="components")
    p.add_argument("--alpha", default=None, help="override alpha (rational)")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="brute-force oracles")
    osub = p.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    q = osub.add_parser("corner-cut", help="max vertices separable from a W x H rectangle by B edges")
    q.add_argument("--w", type=int, required=True)
    q.add_argument("--h", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    q.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", help="draw a grid bundle or rectangle")
    p.add_argument("--bundle")
    p.add_argument("--rect", help="plain WxH rectangle instead of a bundle")
    p.add_argument("--partition")
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"kbalance: usage error: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError, KeyError) as exc:
        print(f"kbalance: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"kbalance: I/O error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001
        print(f"kbalance: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
