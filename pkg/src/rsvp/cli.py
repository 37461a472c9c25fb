"""Command-line interface.

Commands::

    rsvp certify <file> [--format dimacs|edgelist] [--digest]
    rsvp compare <a> <b> [--method rsvp|wl|oracle] [--verify] [--force]
    rsvp gen <family> [params...] [-o OUT] [--format dimacs|edgelist]
    rsvp bench <manifest.csv|tables-builtin> [--csv] [--jobs N]

Exit codes: 0 success (for compare: certificates equal / possibly or exactly
isomorphic), 1 non-isomorphic, 2 error. Graph files may be ``-`` for stdin.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import warnings

from .bench import (
    ORACLE_SIZE_LIMIT,
    builtin_manifest,
    format_csv,
    format_table,
    graph_from_spec_tokens,
    load_manifest,
    run_bench,
    summary_line,
)
from .formats import ParseError, load_graph, to_dimacs, to_edge_list
from .graphs import Graph
from .oracle import find_isomorphism
from .refinement import WLVerdict, wl_compare
from .signature import CertificatesEqual, certificate, rsvp_compare, verify_mapping


def _load(path: str, fmt: str | None) -> Graph:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        graph = load_graph(path, fmt)
    for warning in caught:
        print(f"warning: {path}: {warning.message}", file=sys.stderr)
    return graph


def cmd_certify(args: argparse.Namespace) -> int:
    graph = _load(args.input, args.format)
    text = certificate(graph).serialize()
    sys.stdout.write(text)
    if args.digest:
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        print(f"sha256:{digest}", file=sys.stderr)
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    a = _load(args.a, args.format)
    b = _load(args.b, args.format)

    if args.method == "rsvp":
        verdict = rsvp_compare(a, b)
        if not isinstance(verdict, CertificatesEqual):
            print(f"non-isomorphic ({verdict.reason})")
            return 1
        message = "certificates equal"
        if args.verify:
            if verify_mapping(a, b, verdict.mapping):
                message += "; candidate mapping verified"
            else:
                message += "; candidate mapping unverified"
        print(message)
        return 0

    if args.method == "wl":
        if wl_compare(a, b) is WLVerdict.NON_ISOMORPHIC:
            print("non-isomorphic")
            return 1
        print("possibly isomorphic (WL inconclusive)")
        return 0

    size = max(a.n, b.n)
    if size > ORACLE_SIZE_LIMIT and not args.force:
        print(
            f"error: oracle search refused for n={size} "
            f"(limit {ORACLE_SIZE_LIMIT}); pass --force to override",
            file=sys.stderr,
        )
        return 2
    mapping = find_isomorphism(a, b)
    if mapping is None:
        print("non-isomorphic")
        return 1
    message = "isomorphic"
    if args.verify:
        message += "; mapping verified"
    print(message)
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    graph, leftover = graph_from_spec_tokens([args.family] + args.params)
    if leftover:
        raise ValueError(f"unused generator parameters: {' '.join(leftover)}")
    text = to_edge_list(graph) if args.format == "edgelist" else to_dimacs(graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    if args.manifest == "tables-builtin":
        rows = builtin_manifest()
    else:
        rows = load_manifest(args.manifest)
    reports = run_bench(rows, jobs=args.jobs)
    if args.csv:
        sys.stdout.write(format_csv(reports))
        print(summary_line(reports), file=sys.stderr)
    else:
        sys.stdout.write(format_table(reports))
        print(summary_line(reports))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsvp",
        description="Graph isomorphism testing via prime-encoded reachability "
                    "signatures, with a color-refinement baseline and an exact "
                    "small-graph oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    certify = sub.add_parser("certify", help="print a graph's certificate")
    certify.add_argument("input", help="graph file, or - for stdin")
    certify.add_argument("--format", choices=("dimacs", "edgelist"), default=None)
    certify.add_argument("--digest", action="store_true",
                         help="also print a sha256 of the certificate to stderr")
    certify.set_defaults(func=cmd_certify)

    compare = sub.add_parser("compare", help="compare two graphs")
    compare.add_argument("a")
    compare.add_argument("b")
    compare.add_argument("--method", choices=("rsvp", "wl", "oracle"),
                         default="rsvp")
    compare.add_argument("--verify", action="store_true",
                         help="check the candidate mapping edge by edge")
    compare.add_argument("--force", action="store_true",
                         help="run the oracle past its size limit")
    compare.add_argument("--format", choices=("dimacs", "edgelist"), default=None)
    compare.set_defaults(func=cmd_compare)

    gen = sub.add_parser("gen", help="write a generated graph")
    gen.add_argument("family")
    gen.add_argument("params", nargs="*")
    gen.add_argument("-o", "--output", default=None)
    gen.add_argument("--format", choices=("dimacs", "edgelist"), default="dimacs")
    gen.set_defaults(func=cmd_gen)

    bench = sub.add_parser("bench", help="run a benchmark manifest")
    bench.add_argument("manifest", help="manifest CSV path, or tables-builtin")
    bench.add_argument("--csv", action="store_true",
                       help="emit CSV instead of the plain table")
    bench.add_argument("--jobs", type=int, default=1)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
