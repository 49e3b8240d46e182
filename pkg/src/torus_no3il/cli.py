"""Command-line front end: ``no3il <command> ...``.

Exit codes: 0 success (or "collinear" / valid set), 1 negative answer
("not-collinear" / violating triple / failed selftest), 2 usage error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .constructions import construct_max
from .lines import enumerate_lines, torus_collinear
from .selftest import run_checks
from .serialize import configuration_to_json, dumps, load_configuration, render_ascii
from .solver import SearchLimits, max_no3il, verify_no3il
from .torus import TorusDims

EXIT_OK = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


def parse_limits(text: str) -> SearchLimits:
    """Parse ``nodes=N,ms=T,workers=W`` (any subset)."""
    fields = {}
    for part in filter(None, text.split(",")):
        key, sep, value = part.partition("=")
        if not sep or key not in ("nodes", "ms", "workers"):
            raise argparse.ArgumentTypeError(f"bad limit {part!r}; use nodes=…,ms=…,workers=…")
        try:
            fields[key] = int(value)
        except ValueError:
            raise argparse.ArgumentTypeError(f"limit {key} needs an integer, got {value!r}") from None
    defaults = SearchLimits()
    try:
        return SearchLimits(
            max_nodes=fields.get("nodes", defaults.max_nodes),
            time_budget=fields["ms"] / 1000.0 if "ms" in fields else defaults.time_budget,
            parallel_width=fields.get("workers", defaults.parallel_width),
        )
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    dims_args = argparse.ArgumentParser(add_help=False)
    dims_args.add_argument("m", type=int)
    dims_args.add_argument("n", type=int)

    parser = argparse.ArgumentParser(prog="no3il", description="No-three-in-line sets on the discrete torus.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", parents=[common, dims_args], help="tau(T_MxN) with a witness")
    p.add_argument("--limits", type=parse_limits, default=SearchLimits(), help="nodes=…,ms=…,workers=…")
    p.add_argument("--symmetry", action="store_true", help="search only canonical translates")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms in JSON output")
    p.add_argument("--ascii", action="store_true", help="draw the witness")

    p = sub.add_parser("construct", parents=[common, dims_args], help="closed-form witness")
    p.add_argument("--ascii", action="store_true")

    p = sub.add_parser("verify", parents=[common, dims_args], help="check a point set")
    p.add_argument("--points", required=True, metavar="FILE")
    p.add_argument("--csv", action="store_true", help="FILE holds x,y rows")
    p.add_argument("--ascii", action="store_true")

    sub.add_parser("lines", parents=[common, dims_args], help="enumerate every line")

    p = sub.add_parser("collinear", parents=[common, dims_args], help="test three points")
    p.add_argument("coords", type=int, nargs=6, metavar="C")

    sub.add_parser("selftest", parents=[common], help="golden table and oracle checks")
    return parser


def _fmt_points(points) -> str:
    return " ".join(f"({p[0]},{p[1]})" for p in points)


def _cmd_tau(args, dims: TorusDims) -> int:
    result = construct_max(dims)
    if not result.exact:
        result = max_no3il(dims, args.limits, translations=args.symmetry)
    if args.format == "json":
        obj = result.to_json()
        if not args.timing:
            del obj["elapsed_ms"]
        print(dumps(obj))
    else:
        kind = "exact" if result.exact else "lower bound (budget exhausted)"
        print(f"tau(T_{dims.m}x{dims.n}) = {result.tau}  [{kind}; {result.provenance}]")
        print(f"witness: {_fmt_points(result.witness)}")
        if result.provenance == "exact-search":
            print(f"nodes: {result.stats.nodes}  prunes: {result.stats.prunes}  elapsed: {result.stats.elapsed_ms:.1f} ms")
    if args.ascii and args.format == "text":
        print(render_ascii(result.witness))
    return EXIT_OK if result.exact else EXIT_BUDGET


def _cmd_construct(args, dims: TorusDims) -> int:
    result = construct_max(dims)
    if args.format == "json":
        obj = configuration_to_json(result.witness)
        obj.update(tau=result.tau, exact=result.exact, provenance=result.provenance)
        print(dumps(obj))
    else:
        print(f"{result.provenance}: {len(result.witness)} points" + ("" if result.exact else " (lower bound)"))
        print(_fmt_points(result.witness))
        if args.ascii:
            print(render_ascii(result.witness))
    return EXIT_OK


def _cmd_verify(args, dims: TorusDims) -> int:
    try:
        cfg = load_configuration(args.points, dims, as_csv=args.csv)
    except OSError as exc:
        raise UsageError(f"cannot read {args.points}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad point file {args.points}: {exc}") from None
    triple = verify_no3il(dims, cfg)
    if args.format == "json":
        obj = {"m": dims.m, "n": dims.n, "ok": triple is None}
        if triple is not None:
            obj["triple"] = [list(p) for p in triple]
        print(dumps(obj))
    elif triple is None:
        print(f"ok: {len(cfg)} points, no three collinear")
    else:
        print(f"violation: {_fmt_points(triple)} are collinear")
    if args.ascii and args.format == "text":
        print(render_ascii(cfg))
    return EXIT_OK if triple is None else EXIT_NO


def _cmd_lines(args, dims: TorusDims) -> int:
    lines = enumerate_lines(dims)
    if args.format == "json":
        print(dumps([line.to_json() for line in lines]))
    else:
        for line in lines:
            print(f"dir ({line.dir.u},{line.dir.v}) period {line.period}: {_fmt_points(line.points)}")
    return EXIT_OK


def _cmd_collinear(args, dims: TorusDims) -> int:
    c = args.coords
    pts = [(c[0], c[1]), (c[2], c[3]), (c[4], c[5])]
    for p in pts:
        if not dims.contains(p):
            raise UsageError(f"point {p} outside T_{dims.m}x{dims.n}")
    answer = torus_collinear(dims, *pts)
    word = "collinear" if answer else "not-collinear"
    print(dumps({"m": dims.m, "n": dims.n, "collinear": answer}) if args.format == "json" else word)
    return EXIT_OK if answer else EXIT_NO


def _cmd_selftest(args) -> int:
    checks = list(run_checks())
    if args.format == "json":
        print(dumps([{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]))
    else:
        for c in checks:
            print(f"{'PASS' if c.ok else 'FAIL'}  {c.name}: {c.detail}")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_NO


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "selftest":
            return _cmd_selftest(args)
        try:
            dims = TorusDims(args.m, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        handler = {
            "tau": _cmd_tau,
            "construct": _cmd_construct,
            "verify": _cmd_verify,
            "lines": _cmd_lines,
            "collinear": _cmd_collinear,
        }[args.command]
        return handler(args, dims)
    except UsageError as exc:
        print(f"no3il: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # domain preconditions (enumeration cap, repeated points, ...)
        print(f"no3il: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
