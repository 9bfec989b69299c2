"""The ``qdb`` command: eval, repl and check."""
from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from ..core import DEFAULT_MAX_BRANCHES
from ..errors import BranchLimitError, EGDPError, InconsistentError, ParseError
from ..textformat import dumps
from ..verify.checks import PROPERTIES, CheckConfig, check_property
from ..verify.generate import Bounds, InstanceCapError
from ..verify.mutate import MUTATIONS
from .database import Database, load_database
from .evaluate import evaluate
from .query import parse_query

OK, PARSE, SEMANTIC, INCONSISTENT, FAIL = 0, 1, 2, 3, 4


def exit_code(exc: Exception) -> int:
    if isinstance(exc, ParseError):
        return PARSE
    if isinstance(exc, (InconsistentError, BranchLimitError)):
        return INCONSISTENT
    return SEMANTIC


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qdb", description="Query EGDP relational databases.")
    sub = p.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one query")
    ev.add_argument("--db", required=True, help="database file")
    ev.add_argument("--query", required=True, help="query expression")
    ev.add_argument("--format", choices=("text", "json"), default="text")
    ev.add_argument("--explain", action="store_true", help="show branch sets, images and the combined relation")
    ev.add_argument("--max-branches", type=int, default=DEFAULT_MAX_BRANCHES, metavar="N")

    rp = sub.add_parser("repl", help="read queries line by line")
    rp.add_argument("--db", required=True, help="database file")
    rp.add_argument("--format", choices=("text", "json"), default="text")
    rp.add_argument("--max-branches", type=int, default=DEFAULT_MAX_BRANCHES, metavar="N")

    ck = sub.add_parser("check", help="run a property check and print its report")
    ck.add_argument("--property", required=True, choices=PROPERTIES)
    ck.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    ck.add_argument("--domain-size", type=int, default=2, metavar="N")
    ck.add_argument("--samples", type=int, default=1000, metavar="K")
    ck.add_argument("--seed", type=int, default=0, metavar="S")
    ck.add_argument("--bounds", help="e.g. pos=2,neg=2,mixed=1,size=2")
    ck.add_argument("--mutation", choices=sorted(MUTATIONS), help="swap in a deliberately unsound operator")
    ck.add_argument("--fail-fast", action="store_true", help="stop at the first failure")
    ck.add_argument("--format", choices=("text", "json"), default="text")
    ck.add_argument("--max-branches", type=int, default=DEFAULT_MAX_BRANCHES, metavar="N")
    return p


def main(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    args = _parser().parse_args(argv)
    if args.command == "check":
        return _check(args, out, err)
    try:
        db = _load(args.db, err)
    except (EGDPError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return exit_code(exc) if isinstance(exc, EGDPError) else SEMANTIC
    if args.command == "eval":
        return _eval(db, args.query, args, out, err)
    return _repl(db, args, stdin or sys.stdin, out, err)


def run() -> None:
    sys.exit(main())


def _load(path: str, err: TextIO) -> Database:
    db = load_database(path)
    for w in db.warnings:
        print(f"warning: {w}", file=err)
    return db


def _eval(db: Database, text: str, args, out: TextIO, err: TextIO) -> int:
    try:
        expr = parse_query(text, db)
        result = evaluate(expr, db, args.max_branches)
    except EGDPError as exc:
        print(f"error: {exc}", file=err)
        return exit_code(exc)
    print(result.render(args.format, getattr(args, "explain", False)), file=out)
    return OK


def _repl(db: Database, args, inp: TextIO, out: TextIO, err: TextIO) -> int:
    prompt = inp.isatty()
    while True:
        if prompt:
            print("qdb> ", end="", file=out, flush=True)
        line = inp.readline()
        if not line:
            return OK
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line == ":quit":
            return OK
        if line == ":relations":
            for name, r in db.relations.items():
                print(f"{name} on {db.relation_schemes[name]}", file=out)
            continue
        if line.startswith(":load"):
            path = line[len(":load"):].strip()
            try:
                db = _load(path, err)
            except (EGDPError, OSError) as exc:
                print(f"error: {exc}", file=err)
            else:
                print(f"loaded {len(db.relations)} relation(s) from {path}", file=out)
            continue
        if line.startswith(":"):
            print(f"error: unknown command {line.split()[0]} (use :quit, :relations or :load FILE)", file=err)
            continue
        _eval(db, line, args, out, err)


def _check(args, out: TextIO, err: TextIO) -> int:
    try:
        config = CheckConfig(
            mode=args.mode,
            domain_size=args.domain_size,
            samples=args.samples,
            seed=args.seed,
            bounds=Bounds.parse(args.bounds) if args.bounds else None,
            mutation=args.mutation,
            fail_fast=args.fail_fast,
            max_branches=args.max_branches,
        )
        report = check_property(args.property, config)
    except (ValueError, InstanceCapError) as exc:
        print(f"error: {exc}", file=err)
        return SEMANTIC
    print(dumps(report.to_json()) if args.format == "json" else report.text(), file=out)
    return OK if report.passed else FAIL
