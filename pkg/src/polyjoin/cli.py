"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
3 precondition failure (size guard, non-cograph, cycle convention),
4 method mismatch.
"""

from __future__ import annotations

import argparse
import os
import random
import sys
import time

from . import counts, multipartite, verify
from .cograph import (
    CographSyntaxError,
    Cotree,
    PolyKind,
    compute_graph_polynomial,
    parse_cograph_expr,
    random_cotree,
    recognize_cograph,
)
from .exactpoly import Poly, render_json, render_pretty, render_text
from .graphs import Graph, GraphParseError, parse_graph
from .oracles import (
    HAMILTONIAN_LIMIT,
    OracleLimitExceeded,
    chromatic_poly_oracle,
    clique_cover_poly_oracle,
    count_directed_ham_cycles,
    count_directed_ham_paths,
    count_perfect_matchings,
    matching_poly_oracle,
    path_cover_poly_oracle,
    signed_matching_poly,
    signed_path_cover_poly,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_MISMATCH = 4

POLY_KINDS = ("path-cover", "signed-path-cover", "matching", "signed-matching",
              "clique-cover", "chromatic")

_BASE_KIND = {
    "path-cover": PolyKind.PATH_COVER,
    "signed-path-cover": PolyKind.PATH_COVER,
    "matching": PolyKind.MATCHING,
    "signed-matching": PolyKind.MATCHING,
    "clique-cover": PolyKind.CLIQUE_COVER,
    "chromatic": PolyKind.CHROMATIC,
}

_ORACLE = {
    PolyKind.PATH_COVER: path_cover_poly_oracle,
    PolyKind.MATCHING: matching_poly_oracle,
    PolyKind.CLIQUE_COVER: clique_cover_poly_oracle,
    PolyKind.CHROMATIC: chromatic_poly_oracle,
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def thread_cap() -> int:
    """Value of POLYJOIN_THREADS (default 1).  The engine itself runs on one
    thread, so this only validates the setting."""
    raw = os.environ.get("POLYJOIN_THREADS")
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise CliError(f"POLYJOIN_THREADS must be a positive integer, got {raw!r}", EXIT_USAGE)
    if value < 1:
        raise CliError(f"POLYJOIN_THREADS must be a positive integer, got {raw!r}", EXIT_USAGE)
    return value


# ---------------------------------------------------------------------------
# input resolution
# ---------------------------------------------------------------------------

class Source:
    """A parsed input: always a vertex count, plus a cotree when the graph is
    a cograph and an explicit graph when one was read from a file."""

    def __init__(self, n: int, cotree: Cotree | None, graph: Graph | None):
        self.n = n
        self.cotree = cotree
        self.graph = graph


def load_source(args) -> Source:
    if args.cograph is not None:
        try:
            ct = parse_cograph_expr(args.cograph)
        except CographSyntaxError as e:
            raise CliError(f"cograph expression: {e}", EXIT_USAGE)
        return Source(ct.leaves, ct, None)
    try:
        with open(args.graph, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise CliError(f"cannot read graph file: {e}", EXIT_USAGE)
    try:
        g = parse_graph(text)
    except GraphParseError as e:
        raise CliError(f"graph file: {e}", EXIT_USAGE)
    if g.n < 1:
        raise CliError("graph must have at least one vertex", EXIT_PRECONDITION)
    return Source(g.n, recognize_cograph(g), g)


def graph_polynomial(src: Source, kind: PolyKind) -> Poly:
    if src.cotree is not None:
        return compute_graph_polynomial(src.cotree, kind)
    try:
        return _ORACLE[kind](src.graph)
    except OracleLimitExceeded as e:
        raise CliError(f"{e}; the graph is not a cograph", EXIT_PRECONDITION)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_poly(args, out) -> int:
    src = load_source(args)
    p = graph_polynomial(src, _BASE_KIND[args.kind])
    if args.kind == "signed-path-cover":
        p = signed_path_cover_poly(p, src.n)
    elif args.kind == "signed-matching":
        p = signed_matching_poly(p, src.n)
    if args.json:
        out.write(render_json(p) + "\n")
    elif args.pretty:
        out.write(render_pretty(p) + "\n")
    else:
        out.write(render_text(p))
    return EXIT_OK


def _ham_cycles(src: Source) -> int:
    if src.graph is not None and src.n <= HAMILTONIAN_LIMIT:
        return count_directed_ham_cycles(src.graph)
    if src.cotree is None:
        raise CliError(
            f"oracle limit exceeded: ham-cycles needs n <= {HAMILTONIAN_LIMIT} "
            f"for a non-cograph, got n = {src.n}", EXIT_PRECONDITION)
    try:
        return counts.ham_cycles_cograph(src.cotree)
    except counts.ConventionError as e:
        raise CliError(str(e), EXIT_PRECONDITION)


def _with_oracle_guard(fn, *a):
    try:
        return fn(*a)
    except OracleLimitExceeded as e:
        raise CliError(f"{e}; the graph is not a cograph", EXIT_PRECONDITION)


def cmd_count(args, out) -> int:
    what = args.what
    colors = None
    if what.startswith("colorings="):
        raw = what.split("=", 1)[1]
        try:
            colors = int(raw)
        except ValueError:
            raise CliError(f"colorings needs an integer number of colours, got {raw!r}", EXIT_USAGE)
        if colors < 0:
            raise CliError("the number of colours must be nonnegative", EXIT_USAGE)
        what = "colorings"
    elif what not in ("perfect-matchings", "ham-paths", "ham-cycles", "acyclic-orientations"):
        raise CliError(f"unknown count {what!r}", EXIT_USAGE)

    src = load_source(args)
    if what == "ham-cycles":
        value = _ham_cycles(src)
    elif what == "perfect-matchings":
        if src.cotree is None:
            value = _with_oracle_guard(count_perfect_matchings, src.graph)
        else:
            value = counts.perfect_matchings(graph_polynomial(src, PolyKind.MATCHING))
    elif what == "ham-paths":
        if src.cotree is None:
            value = _with_oracle_guard(count_directed_ham_paths, src.graph)
        else:
            value = counts.ham_paths(graph_polynomial(src, PolyKind.PATH_COVER))
    elif what == "colorings":
        value = counts.colorings(graph_polynomial(src, PolyKind.CHROMATIC), colors)
    else:
        value = counts.acyclic_orientations(graph_polynomial(src, PolyKind.CHROMATIC))
    out.write(f"{value}\n")
    return EXIT_OK


def _parse_parts(text: str) -> list:
    try:
        parts = [int(s) for s in text.split(",")]
    except ValueError:
        raise CliError(f"--parts must be comma-separated integers, got {text!r}", EXIT_USAGE)
    if not parts or any(a < 1 for a in parts):
        raise CliError("part sizes must be positive", EXIT_USAGE)
    return parts


def cmd_multipartite(args, out) -> int:
    parts = _parse_parts(args.parts)
    cycles = args.what == "ham-cycles"
    if cycles and len(parts) < 2:
        raise CliError("ham-cycles needs at least two parts", EXIT_PRECONDITION)
    if args.method == "operator":
        value = multipartite.hc_multipartite(parts) if cycles else multipartite.hp_multipartite(parts)
    else:
        if not multipartite.is_balanced(parts):
            raise CliError(f"method {args.method!r} needs equal part sizes", EXIT_MISMATCH)
        n = parts[0]
        if cycles:
            fn = multipartite.hc_balanced if args.method == "bell" else multipartite.hc_balanced_fast
            value = fn(n, len(parts) - 1)
        else:
            fn = multipartite.hp_balanced if args.method == "bell" else multipartite.hp_balanced_fast
            value = fn(n, len(parts))
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max_n < 1 or args.samples < 0:
        raise CliError("--max-n must be positive and --samples nonnegative", EXIT_USAGE)
    results = verify.run_all(args.max_n, args.samples, args.seed)
    for r in results:
        out.write(r.line() + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def cmd_bench(args, out) -> int:
    if not args.algorithm1:
        raise CliError("bench currently supports only --algorithm1", EXIT_USAGE)
    if args.leaves < 1:
        raise CliError("--leaves must be positive", EXIT_USAGE)
    kind = PolyKind(args.kind)
    ct = random_cotree(args.leaves, random.Random(args.seed))
    start = time.perf_counter()
    p = compute_graph_polynomial(ct, kind)
    elapsed = time.perf_counter() - start
    bits = max((abs(c).bit_length() for c in p.coeffs), default=0)
    out.write(f"algorithm1 kind={kind.value} leaves={args.leaves} seed={args.seed} "
              f"degree={p.degree} max_coeff_bits={bits} seconds={elapsed:.3f}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cograph", metavar="EXPR", help="cograph expression")
    g.add_argument("--graph", metavar="FILE", help="edge-list file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyjoin",
                                     description="Exact graph polynomials of cographs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="print a graph polynomial")
    p.add_argument("--kind", required=True, choices=POLY_KINDS)
    _add_source(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON array of decimal strings")
    fmt.add_argument("--pretty", action="store_true", help="human-readable polynomial")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("count", help="print one integer count")
    p.add_argument("--what", required=True, metavar="WHAT",
                   help="perfect-matchings | ham-paths | ham-cycles | colorings=<k> | acyclic-orientations")
    _add_source(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("multipartite", help="Hamiltonian counts of complete multipartite graphs")
    p.add_argument("--parts", required=True, help="comma-separated part sizes")
    p.add_argument("--what", required=True, choices=("ham-paths", "ham-cycles"))
    p.add_argument("--method", default="operator", choices=("operator", "bell", "fast"))
    p.set_defaults(func=cmd_multipartite)

    p = sub.add_parser("verify", help="run the seeded verification suites")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the cotree fold on a random cotree")
    p.add_argument("--algorithm1", action="store_true", required=True)
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--kind", required=True, choices=[k.value for k in PolyKind])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        thread_cap()
        return args.func(args, out)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
