"""Command-line entry point.

Exit codes: 0 success / valid, 1 invalid coloring, 2 usage or parse error,
3 algorithm failure (for example no separator on non-planar input).
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager

from . import colorers
from .bench import SUITES, run_bench, write_csv
from .errors import (
    BudgetExceeded,
    Infeasible,
    NoSeparatorFound,
    NotATree,
    ParseError,
    SearchBudgetExceeded,
    SizeOverflow,
    VrankError,
)
from .exact import exact_rank_number
from .formats import format_coloring, parse_coloring, parse_graph, write_graph
from .generators import apollonian, complete_kary_tree, grid, path, subdivided_replicated_clique
from .selfcheck import format_table, run_selfcheck
from .validators import is_l_vr, is_proper, is_us, is_vr, num_colors

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2, 3

ALGORITHMS = ("layered-us", "sep-lvr", "degen-us", "kary-level", "centroid-vr")


class UsageError(Exception):
    pass


@contextmanager
def _open_out(name):
    if name is None or name == "-":
        yield sys.stdout
    else:
        with open(name, "w") as fh:
            yield fh


def _read_graph(name):
    if name is None or name == "-":
        return parse_graph(sys.stdin.read())
    with open(name) as fh:
        return parse_graph(fh.read())


def _validate(G, colors, kind, l=None):
    if kind == "proper":
        return is_proper(G, colors)
    if kind == "us":
        return is_us(G, colors)
    if kind == "lvr":
        return is_l_vr(G, colors, l)
    if kind == "vr":
        return is_vr(G, colors)
    raise UsageError(f"unknown kind {kind!r}")


def cmd_generate(args):
    fam = args.family
    if fam in ("kary", "subclique") and args.k is None:
        raise UsageError(f"--family {fam} needs --k")
    if fam in ("path", "apollonian") and args.n is None:
        raise UsageError(f"--family {fam} needs --n")
    if fam == "grid" and (args.rows is None or args.cols is None):
        raise UsageError("--family grid needs --rows and --cols")
    if fam == "kary":
        G = complete_kary_tree(args.k)[0]
    elif fam == "subclique":
        G = subdivided_replicated_clique(args.k)
    elif fam == "path":
        G = path(args.n)
    elif fam == "grid":
        G = grid(args.rows, args.cols)
    else:
        G = apollonian(args.n, args.seed)
    with _open_out(args.output) as fh:
        write_graph(G, fh)
    return EXIT_OK


def cmd_color(args):
    algo = args.algo
    if algo == "kary-level":
        if args.k is None:
            raise UsageError("--algo kary-level needs --k")
        G, colors = colorers.kary_level_coloring(args.k)
        if args.graph_out:
            with open(args.graph_out, "w") as fh:
                write_graph(G, fh)
        kind, l = "us", None
    else:
        G = _read_graph(args.input)
        l = None
        if algo == "layered-us":
            colors, _ = colorers.layered_us_coloring(G)
            kind = "us"
        elif algo == "degen-us":
            colors = colorers.degenerate_us_coloring(G)
            kind = "us"
        elif algo == "sep-lvr":
            l = args.l if args.l is not None else 2
            colors = colorers.separator_lvr_coloring(G, l)
            kind = "lvr"
        else:
            colors = colorers.centroid_vr_coloring(G)
            kind = "vr"
    violation = _validate(G, colors, kind, l)
    valid = violation is None
    if valid:
        with _open_out(args.output) as fh:
            fh.write(format_coloring(colors, G))
    else:
        print(f"violation {violation}")
    print(f"colors {num_colors(colors)} valid {'true' if valid else 'false'}")
    return EXIT_OK if valid else EXIT_INVALID


def cmd_validate(args):
    G = _read_graph(args.input)
    with open(args.coloring) as fh:
        colors = parse_coloring(fh.read())
    if args.kind == "lvr" and args.l is None:
        raise UsageError("--kind lvr needs --l")
    violation = _validate(G, colors, args.kind, args.l)
    if violation is None:
        print(f"valid colors {num_colors(colors)}")
        return EXIT_OK
    print(f"violation {violation}")
    return EXIT_INVALID


def cmd_exact(args):
    G = _read_graph(args.input)
    if args.kind == "lvr" and args.l is None:
        raise UsageError("--kind lvr needs --l")
    try:
        k, colors = exact_rank_number(G, args.kind, l=args.l, max_k=args.max_k, budget=args.budget)
    except Infeasible:
        print("INFEASIBLE")
        return EXIT_OK
    print(f"k {k}")
    sys.stdout.write(format_coloring(colors, G))
    return EXIT_OK


def cmd_bench(args):
    records = run_bench(args.suite, args.sizes, l=args.l, seed=args.seed, jobs=args.jobs)
    with _open_out(args.output) as fh:
        write_csv(records, fh)
    return EXIT_OK if all(r.valid for r in records) else EXIT_INVALID


def cmd_selfcheck(args):
    results = run_selfcheck(n_max=args.n_max, k=args.k, fuzz_cases=args.fuzz, seed=args.seed)
    print(format_table(results))
    return EXIT_FAILURE if any(r.failed for r in results) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vrank", description="Bounded vertex rankings of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write an instance graph")
    p.add_argument("--family", required=True, choices=("kary", "subclique", "path", "grid", "apollonian"))
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("color", help="color a graph and self-validate the result")
    p.add_argument("--algo", required=True, choices=ALGORITHMS)
    p.add_argument("--l", type=int)
    p.add_argument("--k", type=int, help="tree parameter for kary-level")
    p.add_argument("-i", "--input")
    p.add_argument("-o", "--output")
    p.add_argument("--graph-out", help="kary-level only: also write T_k here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("validate", help="check a coloring")
    p.add_argument("--kind", default="us", choices=("proper", "us", "lvr", "vr"))
    p.add_argument("--l", type=int)
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-c", "--coloring", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("exact", help="exact rank number by exhaustive search")
    p.add_argument("--kind", default="us", choices=("us", "lvr", "vr"))
    p.add_argument("--l", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--budget", type=int, default=5 * 10**7)
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bench", help="color-budget experiment, CSV output")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--sizes", required=True, type=int, nargs="+")
    p.add_argument("--l", type=int)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selfcheck", help="exercise the exact machinery and print a table")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--fuzz", type=int, default=2000)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoSeparatorFound, NotATree, BudgetExceeded, SearchBudgetExceeded, SizeOverflow) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except VrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
