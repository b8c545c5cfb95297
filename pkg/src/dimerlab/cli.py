"""Command-line front end.

Exit codes: 0 ok, 2 usage or malformed input, 3 precondition failure,
4 DP capacity exceeded, 5 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import CapacityError, GraphError, PreconditionError
from .graph import Graph
from .lattices import NAMED, LatticeSpec, named_cubic, random_cubic
from .matching import count_pm, weighted_pm_sum
from .transforms import line_graph, middle_graph, reduce_to_base
from .verify import SUITES, verify

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_CAPACITY, EXIT_MISMATCH = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _emit_graph(g: Graph, fmt: str, out):
    if fmt == "dot":
        out.write(g.to_dot())
    else:
        out.write(g.to_json(sort_keys=True) + "\n")


def _read_graph(stdin) -> Graph:
    try:
        return Graph.from_json(stdin.read())
    except GraphError as exc:
        raise UsageError(str(exc)) from exc


def cmd_gen(args, stdin, stdout, stderr) -> int:
    if args.lattice:
        if args.rows is None or args.cols is None:
            raise UsageError("--lattice needs --rows and --cols")
        if args.rows < 2 or args.cols < 2:
            raise UsageError(f"lattice size {args.rows}x{args.cols} below 2x2 minimum")
        g = LatticeSpec(args.lattice, args.rows, args.cols, args.weighted).build()
    elif args.named:
        if args.named.lower() not in {n.lower() for n in NAMED}:
            raise UsageError(f"unknown named graph {args.named!r}; choose from {', '.join(NAMED)}")
        g = named_cubic(args.named)
    elif args.random_cubic is not None:
        n = args.random_cubic
        if n % 2 or n < 4:
            raise UsageError(f"--random-cubic needs an even n >= 4, got {n}")
        g = random_cubic(n, args.seed)
    else:
        raise UsageError("gen needs one of --lattice, --named, --random-cubic")
    _emit_graph(g, args.format, stdout)
    return EXIT_OK


def cmd_transform(args, stdin, stdout, stderr) -> int:
    g = _read_graph(stdin)
    if args.op == "line":
        out = line_graph(g)
    elif args.op == "middle":
        out = middle_graph(g)
    else:
        out, trace = reduce_to_base(g)
        stderr.write(json.dumps(trace.to_dict(), sort_keys=True) + "\n")
    _emit_graph(out, args.format, stdout)
    return EXIT_OK


def cmd_count(args, stdin, stdout, stderr) -> int:
    g = _read_graph(stdin)
    method = "frontier-dp" if args.method == "dp" else "enumerate"
    if args.weighted:
        payload = weighted_pm_sum(g, method).to_json()
    else:
        payload = {"count": str(count_pm(g, method))}
    stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_verify(args, stdin, stdout, stderr) -> int:
    report = verify(args.suite, nmax=args.nmax, trials=args.trials, seed=args.seed,
                    jobs=args.jobs, timings=args.timings)
    stdout.write(json.dumps(report.to_dict(), sort_keys=True, indent=1) + "\n")
    s = report.summary
    stderr.write(f"{s['matched']}/{s['total']} matched, {s['errors']} errors\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dimerlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a graph as JSON")
    gen.add_argument("--lattice", choices=["honeycomb", "kagome", "silicate"])
    gen.add_argument("--rows", type=int)
    gen.add_argument("--cols", type=int)
    gen.add_argument("--weighted", action="store_true")
    gen.add_argument("--named")
    gen.add_argument("--random-cubic", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--format", choices=["json", "dot"], default="json")
    gen.set_defaults(func=cmd_gen)

    tr = sub.add_parser("transform", help="line / middle graph or reduction of stdin graph")
    tr.add_argument("--op", choices=["line", "middle", "reduce"], required=True)
    tr.add_argument("--format", choices=["json", "dot"], default="json")
    tr.set_defaults(func=cmd_transform)

    ct = sub.add_parser("count", help="count perfect matchings of stdin graph")
    ct.add_argument("--weighted", action="store_true")
    ct.add_argument("--method", choices=["enum", "dp"], default="enum")
    ct.set_defaults(func=cmd_count)

    ve = sub.add_parser("verify", help="run formula-vs-oracle suites")
    ve.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    ve.add_argument("--nmax", type=int)
    ve.add_argument("--trials", type=int)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--timings", action="store_true", help="add wall times (output no longer reproducible)")
    ve.set_defaults(func=cmd_verify)
    return p


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"dimerlab: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        stderr.write(f"dimerlab: capacity exceeded: {exc}\n")
        return EXIT_CAPACITY
    except (PreconditionError, GraphError) as exc:
        stderr.write(f"dimerlab: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
