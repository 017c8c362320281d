"""Command-line front end.

Usage::

    bernid eval --what bernoulli-poly --n 2 --format json
    bernid verify --identity all --m-max 6 --n-max 6 --format json
    bernid table --what woodcock --m-max 4 --n-max 4 --format csv

Exit status: 0 on success, 1 when any verified identity fails, 2 on usage
or domain errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Sequence, TextIO

from . import identities, sequences
from .identities import CERTIFIED_IDS, DomainError, IdentityId, SuiteReport
from .poly import DegreeBoundError
from .serialize import csv_text, dumps, emit, format_rational, to_jsonable

EVAL_WHAT = (
    "bernoulli-number",
    "euler-number",
    "bernoulli-poly",
    "euler-poly",
    "woodcock-number",
    "woodcock-poly-A",
    "woodcock-poly-C",
)
TABLE_WHAT = (
    "bernoulli-numbers",
    "euler-numbers",
    "woodcock",
    "woodcock-poly-A",
    "woodcock-poly-C",
)
VERIFY_CHOICES = tuple(i.value for i in IdentityId)


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a value >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernid",
        description="Exact Bernoulli/Euler computations and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "csv"), default="text")

    ev = sub.add_parser("eval", parents=[fmt], help="compute one number or polynomial")
    ev.add_argument("--what", choices=EVAL_WHAT, required=True)
    ev.add_argument("--n", type=_nonneg, required=True)
    ev.add_argument("--m", type=_nonneg, default=0, help="first index for woodcock-*")

    ver = sub.add_parser("verify", parents=[fmt], help="verify identities over a grid")
    ver.add_argument(
        "--identity",
        action="append",
        required=True,
        help="identity id, comma-separated list, or 'all' (repeatable)",
    )
    ver.add_argument("--m-max", type=_nonneg, default=4)
    ver.add_argument("--n-max", type=_nonneg, default=4)
    ver.add_argument("--seed", type=int, default=0, help="seed for the lemma2 sequence")
    ver.add_argument("--jobs", type=_nonneg, default=1)

    tab = sub.add_parser("table", parents=[fmt], help="emit a table of values")
    tab.add_argument("--what", choices=TABLE_WHAT, required=True)
    tab.add_argument("--m-max", type=_nonneg, default=5)
    tab.add_argument("--n-max", type=_nonneg, default=10)
    return parser


def _resolve_ids(raw: Sequence[str], parser: argparse.ArgumentParser) -> List[IdentityId]:
    out: List[IdentityId] = []
    for chunk in raw:
        for name in filter(None, (s.strip() for s in chunk.split(","))):
            if name == "all":
                out.extend(CERTIFIED_IDS)
                out.append(IdentityId.LEMMA2)
            elif name in VERIFY_CHOICES:
                out.append(IdentityId(name))
            else:
                parser.error(
                    f"unknown identity {name!r} (choose from all, {', '.join(VERIFY_CHOICES)})"
                )
    return sorted(set(out), key=lambda i: i.value)


def _cmd_eval(args) -> tuple:
    n, m = args.n, args.m
    what = args.what
    if what == "bernoulli-number":
        return sequences.bernoulli_number(n), 0
    if what == "euler-number":
        return sequences.euler_number(n), 0
    if what == "bernoulli-poly":
        return sequences.bernoulli_poly(n), 0
    if what == "euler-poly":
        return sequences.euler_poly(n), 0
    if what == "woodcock-number":
        return identities.woodcock_number(m, n), 0
    if what == "woodcock-poly-A":
        return identities.woodcock_poly_A(m, n), 0
    return identities.woodcock_poly_C(m, n), 0


def _cmd_verify(args, parser) -> tuple:
    ids = _resolve_ids(args.identity, parser)
    catalog_ids = [i for i in ids if i is not IdentityId.LEMMA2]
    reports = []
    if catalog_ids:
        suite = identities.verify_range(catalog_ids, args.m_max, args.n_max, jobs=args.jobs)
        reports.extend(suite.reports)
    if IdentityId.LEMMA2 in ids:
        seq = sequences.RationalSeq.random(args.seed, args.m_max + args.n_max + 2)
        for m in range(args.m_max + 1):
            for n in range(args.n_max + 1):
                reports.append(identities.verify_lemma2(seq, m, n))
    suite = SuiteReport(tuple(reports))
    return suite, 0 if suite.all_hold else 1


def _table(args) -> str:
    what, fmt = args.what, args.format
    if what in ("bernoulli-numbers", "euler-numbers"):
        f = sequences.bernoulli_number if what == "bernoulli-numbers" else sequences.euler_number
        rows = [(n, f(n)) for n in range(args.n_max + 1)]
        if fmt == "json":
            return dumps([{"n": n, "value": format_rational(v)} for n, v in rows]) + "\n"
        if fmt == "csv":
            return csv_text(("n", "value"), [(n, format_rational(v)) for n, v in rows])
        return "".join(f"{n:>4}  {format_rational(v)}\n" for n, v in rows)

    grid = [(m, n) for m in range(args.m_max + 1) for n in range(1, args.n_max + 1)]
    if what == "woodcock":
        rows = [(m, n, identities.woodcock_number(m, n)) for m, n in grid]
        if fmt == "json":
            return dumps(
                [{"m": m, "n": n, "value": format_rational(v)} for m, n, v in rows]
            ) + "\n"
        if fmt == "csv":
            return csv_text(("m", "n", "value"), [(m, n, format_rational(v)) for m, n, v in rows])
        return "".join(f"{m:>4} {n:>4}  {format_rational(v)}\n" for m, n, v in rows)

    build = identities.woodcock_poly_A if what == "woodcock-poly-A" else identities.woodcock_poly_C
    rows = [(m, n, build(m, n)) for m, n in grid]
    if fmt == "json":
        return dumps([{"m": m, "n": n, "poly": to_jsonable(p)} for m, n, p in rows]) + "\n"
    if fmt == "csv":
        return csv_text(
            ("m", "n", "coeffs"),
            [(m, n, " ".join(format_rational(c) for c in p.coeffs)) for m, n, p in rows],
        )
    return "".join(f"{m:>4} {n:>4}  {p}\n" for m, n, p in rows)


def run(
    argv: Optional[Sequence[str]] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    old_err = sys.stderr
    sys.stderr = err
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            payload, code = _cmd_verify(args, parser)
        elif args.command == "eval":
            payload, code = _cmd_eval(args)
        else:
            out.write(_table(args))
            return 0
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (DomainError, DegreeBoundError, ValueError, IndexError) as exc:
        err.write(f"bernid: error: {exc}\n")
        return 2
    finally:
        sys.stderr = old_err
    out.write(emit(payload, args.format))
    if code:
        failing = payload.failures() if isinstance(payload, SuiteReport) else []
        err.write(f"bernid: {len(failing)} identity check(s) failed\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
