"""Command-line front end.

Subcommands: ``betti`` (compute and render a table with its resolution),
``components`` (list the constituents of one graded piece), ``verify``
(run the Koszul oracle against the closed form), ``mult`` (non-zero
products in the syzygy algebra), ``cache`` (inspect or clear the oracle
cache).  ``--show-errata`` prints the shipped errata fixtures and exits.

Exit codes: 0 success (and verification match), 1 verification mismatch,
2 usage or range errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .engine import (
    BettiTable,
    RangeError,
    default_max_t,
    multiplication_table,
    segre_syzygies,
    sheaf_syzygies,
)
from .errata import errata_text
from .oracle import cache_clear, cache_stats, verify
from .render import render, resolution_chain


def _add_geometry(parser: argparse.ArgumentParser, twists: bool = True) -> None:
    parser.add_argument("--m", type=int, required=True, help="dim U (>= 1)")
    parser.add_argument("--n", type=int, required=True, help="dim V (>= 1)")
    if twists:
        parser.add_argument("--a", type=int, default=0, help="U-side twist (>= -m)")
        parser.add_argument("--b", type=int, default=0, help="V-side twist (>= -n)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segre-syzygies",
        description="Equivariant syzygies of Segre embeddings, with an exact "
        "Koszul-complex oracle.",
    )
    parser.add_argument(
        "--show-errata",
        action="store_true",
        help="print the shipped printed-vs-computed errata fixtures and exit",
    )
    sub = parser.add_subparsers(dest="command")

    p_betti = sub.add_parser("betti", help="compute a Betti table and resolution")
    _add_geometry(p_betti)
    p_betti.add_argument("--max-t", type=int, default=None, help="internal degree cap")
    p_betti.add_argument(
        "--format", choices=("text", "json", "latex"), default="text"
    )

    p_comp = sub.add_parser("components", help="list components of one entry")
    _add_geometry(p_comp)
    p_comp.add_argument("--p", type=int, required=True, help="homological degree")
    p_comp.add_argument("--t", type=int, required=True, help="internal degree")

    p_verify = sub.add_parser("verify", help="run the Koszul oracle comparison")
    _add_geometry(p_verify)
    p_verify.add_argument("--max-t", type=int, required=True)
    p_verify.add_argument(
        "--exact", action="store_true", help="integer elimination instead of two primes"
    )
    p_verify.add_argument("--jobs", type=int, default=None, help="parallel block jobs")
    p_verify.add_argument(
        "--no-cache", action="store_true", help="skip cache reads, writes and checks"
    )

    p_mult = sub.add_parser("mult", help="non-zero syzygy-algebra products")
    _add_geometry(p_mult, twists=False)

    p_cache = sub.add_parser("cache", help="oracle cache maintenance")
    p_cache.add_argument("action", choices=("clear", "stats"))

    return parser


def _check_ranges(args, err) -> bool:
    if args.m < 1 or args.n < 1:
        print(f"error: need m, n >= 1, got ({args.m}, {args.n})", file=err)
        return False
    a = getattr(args, "a", 0)
    b = getattr(args, "b", 0)
    if a < -args.m or b < -args.n:
        print(
            f"error: twist ({a}, {b}) outside the range a >= {-args.m}, b >= {-args.n}",
            file=err,
        )
        return False
    if getattr(args, "max_t", None) is not None and args.max_t < 0:
        print("error: --max-t must be non-negative", file=err)
        return False
    return True


def _table_for(args) -> BettiTable:
    if (args.a, args.b) == (0, 0) and args.max_t is None:
        return segre_syzygies(args.m, args.n)
    max_t = args.max_t
    if max_t is None:
        max_t = default_max_t(args.m, args.n, args.a, args.b)
    return sheaf_syzygies(args.m, args.n, args.a, args.b, max_t)


def _run_betti(args, out) -> int:
    out.write(render(_table_for(args), args.format))
    return 0


def _run_components(args, out) -> int:
    max_t = max(args.t, 0)
    if (args.a, args.b) == (0, 0):
        table = segre_syzygies(args.m, args.n)
    else:
        table = sheaf_syzygies(args.m, args.n, args.a, args.b, max_t)
    comps = table.components(args.p, args.t)
    out.write(f"p={args.p} t={args.t} dim={sum(c.dim for c in comps)}\n")
    for c in comps:
        out.write(
            f"lambda={list(c.lam)} mu={list(c.mu)} mult={c.mult} dim={c.dim}\n"
        )
    return 0


def _run_verify(args, out, err) -> int:
    report = verify(
        args.m,
        args.n,
        args.a,
        args.b,
        args.max_t,
        exact=args.exact,
        jobs=args.jobs,
        no_cache=args.no_cache,
    )
    for warning in report.warnings:
        print(f"warning: {warning}", file=err)
    for row in report.rows:
        status = "ok" if row.dims_match and row.components_match is not False else "MISMATCH"
        comp = ""
        if row.components_match is not None:
            comp = " components=ok" if row.components_match else " components=MISMATCH"
        out.write(
            f"p={row.p} t={row.t} oracle={row.oracle_dim} table={row.table_dim}"
            f" {status}{comp}\n"
        )
    for t in sorted(report.strand_status):
        status = report.strand_status[t]
        if status != "empty":
            out.write(f"t={t}: {status}\n")
    out.write("VERIFIED\n" if report.matched else "MISMATCHES FOUND\n")
    return 0 if report.matched else 1


def _run_mult(args, out) -> int:
    maps = multiplication_table(args.m, args.n)
    if not maps:
        out.write("no non-zero products\n")
        return 0
    for gp in maps:
        (p1, t1), (p2, t2), (p3, t3) = gp.source1, gp.source2, gp.target
        cores = "; ".join(
            f"{list(c1)} * {list(c2)} -> {list(c3)}" for c1, c2, c3 in gp.core_triples
        )
        out.write(f"R[{p1},{t1}] x R[{p2},{t2}] -> R[{p3},{t3}]  via {cores}\n")
    return 0


def _run_cache(args, out) -> int:
    if args.action == "stats":
        stats = cache_stats()
        out.write(
            f"cache root: {stats['root']}\nentries: {stats['entries']}\n"
            f"bytes: {stats['bytes']}\n"
        )
    else:
        removed = cache_clear()
        out.write(f"removed {removed} cached strand results\n")
    return 0


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.show_errata:
        out.write(errata_text())
        return 0
    if args.command is None:
        parser.print_usage(err)
        return 2
    if args.command != "cache" and not _check_ranges(args, err):
        return 2
    try:
        if args.command == "betti":
            return _run_betti(args, out)
        if args.command == "components":
            return _run_components(args, out)
        if args.command == "verify":
            return _run_verify(args, out, err)
        if args.command == "mult":
            return _run_mult(args, out)
        if args.command == "cache":
            return _run_cache(args, out)
    except RangeError as exc:
        print(f"error: {exc}", file=err)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
