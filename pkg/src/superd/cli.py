"""Command-line interface: ``superd {complexity,table,enumerate,max,verify}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or size-limit error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

from superd import general, graph
from superd.counting import check_gap
from superd.errors import CapExceeded
from superd.tables import S_METHODS, build_table, compare_with_golden, dump_json, render
from superd.verify import run_all
from superd.words import parse_word, render_word, sort_words

METHODS = ("recursive", "middle", "binomial", "graph", "oracle")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class OutputRecord:
    method: str
    value: int
    n: int | None = None
    d: int | None = None
    m: int | None = None
    word: str | None = None
    witness: str | None = None
    words: list[str] | None = field(default=None)

    def to_json_obj(self) -> dict:
        obj = {"method": self.method, "n": self.n, "d": self.d, "m": self.m, "value": str(self.value)}
        if self.word is not None:
            obj["word"] = self.word
        if self.witness is not None:
            obj["witness"] = self.witness
        if self.words is not None:
            obj["words"] = self.words
        return obj


def _emit_records(records: list[OutputRecord], fmt: str, out) -> None:
    if fmt == "json":
        payload = records[0].to_json_obj() if len(records) == 1 else [r.to_json_obj() for r in records]
        out.write(dump_json(payload))
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["method", "n", "d", "m", "word", "witness", "value"])
        for r in records:
            w.writerow([r.method, r.n, r.d, r.m, r.word or "", r.witness or "", r.value])
    else:
        for r in records:
            if r.word is not None:
                head = f"S_{r.word}({r.d})"
            elif r.m is not None:
                head = f"f({r.m},{r.n},{r.d})"
            else:
                head = f"S({r.n},{r.d})"
            tail = f"  witness={r.witness}" if r.witness is not None else ""
            out.write(f"{head} = {r.value}  [{r.method}]{tail}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


# --- complexity -----------------------------------------------------------


def cmd_complexity(args, out) -> int:
    d = check_gap(args.d)
    if args.word is not None:
        word = parse_word(args.word)
        methods = ["oracle", "graph"] if args.all else [args.method or "oracle"]
        if any(m not in ("oracle", "graph") for m in methods):
            raise UsageError("a --word can only be counted with --method oracle or graph")
        records = []
        for m in methods:
            value = general.complexity_general(word, d, "oracle" if m == "oracle" else "latin", cap=args.cap)
            records.append(OutputRecord(m, value, n=len(word), d=d, word=args.word))
    else:
        if args.n is None:
            raise UsageError("give either -n or --word")
        methods = list(METHODS) if args.all else [args.method or "middle"]
        records = []
        for m in methods:
            if m == "oracle":
                value = general.complexity_general(range(args.n), d, "oracle", cap=args.cap)
            elif args.n == 0:
                value = 0
            else:
                value = S_METHODS[m](args.n, d)
            records.append(OutputRecord(m, value, n=args.n, d=d))
    _emit_records(records, args.format, out)
    if args.all:
        agree = len({r.value for r in records}) == 1
        if args.format == "plain":
            out.write("verdict: " + ("match" if agree else "MISMATCH") + "\n")
        return EXIT_OK if agree else EXIT_MISMATCH
    return EXIT_OK


# --- table ----------------------------------------------------------------


def cmd_table(args, out) -> int:
    kind = args.kind
    d_max = args.d_max if args.d_max is not None else 11
    kw = {} if args.cap is None else {"cap": args.cap}
    table = build_table(kind, args.n_max, d_max, args.method, **kw)
    out.write(render(table, args.format))
    if not args.check:
        return EXIT_OK
    if kind == "S":
        comparisons = [compare_with_golden(build_table("S", args.n_max, d_max, m)) for m in S_METHODS]
    else:
        comparisons = [compare_with_golden(table)]
    status = EXIT_OK
    for c in comparisons:
        line = f"check {kind} [{c.method}]: {c.matched} cells matched, {len(c.mismatches)} mismatched"
        print(line, file=sys.stderr)
        for n, d, want, got in c.mismatches:
            print(f"  n={n} d={d}: expected {want}, got {got}", file=sys.stderr)
        if not c.ok:
            status = EXIT_MISMATCH
    return status


# --- enumerate ------------------------------------------------------------


def _cell_text(cell, size: int) -> str:
    if not cell:
        return "-"
    ordered = sorted(cell, key=lambda w: (len(w), w))
    return "{" + ",".join(render_word(w, size) for w in ordered) + "}"


def cmd_enumerate(args, out) -> int:
    d = check_gap(args.d)
    if args.word is not None:
        word = parse_word(args.word)
        label = args.word
    elif args.n is not None:
        word = tuple(range(args.n))
        label = None
    else:
        raise UsageError("give either -n or --word")
    size = max(word, default=-1) + 1

    if args.matrix:
        graph.check_enum_cap(len(word), d, args.cap or graph.DEFAULT_ENUM_CAP)
        W = graph.warshall_latin(graph.initial_latin_matrix(word, d))
        if args.format == "json":
            obj = {
                "n": len(word),
                "d": d,
                "cells": [[[render_word(w, size) for w in sorted(cell, key=lambda w: (len(w), w))] for cell in row] for row in W],
            }
            out.write(dump_json(obj))
            return EXIT_OK
        rows = [[_cell_text(cell, size) for cell in row] for row in W]
        if args.format == "csv":
            csv.writer(out, lineterminator="\n").writerows(rows)
        else:
            widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))] if rows else []
            for r in rows:
                out.write(" ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n")
        return EXIT_OK

    if label is None:
        words = graph.enumerate_rainbow(len(word), d, cap=args.cap or graph.DEFAULT_ENUM_CAP)
    else:
        words = general.oracle_enumerate(word, d, cap=args.cap or general.DEFAULT_ORACLE_CAP)
    if args.nontrivial:
        words = {w for w in words if len(w) >= 2}
    rendered = [render_word(w, size) for w in sort_words(words)]
    if args.format == "json":
        out.write(dump_json({"n": len(word), "d": d, "word": label, "count": str(len(rendered)), "words": rendered}))
    elif args.format == "csv":
        out.write("word\n" + "".join(f"{w}\n" for w in rendered))
    else:
        out.write("".join(f"{w}\n" for w in rendered))
    return EXIT_OK


# --- max ------------------------------------------------------------------


def cmd_max(args, out) -> int:
    kw = {} if args.cap is None else {"cap": args.cap}
    res = general.max_complexity(args.m, args.n, args.d, workers=args.workers, **kw)
    witness = render_word(res.witness, args.m)
    _emit_records([OutputRecord("search", res.value, n=res.n, d=res.d, m=res.m, witness=witness)], args.format, out)
    return EXIT_OK


# --- verify ---------------------------------------------------------------


def cmd_verify(args, out) -> int:
    kw = {}
    if args.cap is not None:
        kw["oracle_cap"] = args.cap
        kw["oracle_max"] = args.cap
    results = run_all(n_max=args.n_max, d_max=args.d_max, random_words=args.random_words, **kw)
    ok = all(r.ok for r in results)
    if args.format == "json":
        obj = {
            "ok": ok,
            "checks": [{"name": r.name, "cases": r.cases, "ok": r.ok, "failures": r.failures} for r in results],
        }
        out.write(dump_json(obj))
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["check", "cases", "status"])
        for r in results:
            w.writerow([r.name, r.cases, "pass" if r.ok else "fail"])
    else:
        for r in results:
            out.write(f"[{'PASS' if r.ok else 'FAIL'}] {r.name} ({r.cases} cases)\n")
            for f in r.failures[:10]:
                out.write(f"    {f}\n")
        out.write("overall: " + ("PASS" if ok else "FAIL") + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--cap", type=_positive, default=None, help="override the size limit of the command")

    parser = argparse.ArgumentParser(prog="superd", description="Super-d-complexity of finite words.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complexity", parents=[common], help="S(n,d) of a rainbow word, or S_w(d) of a given word")
    p.add_argument("-n", type=_nonnegative)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--word", help="letters a-z or bracketed indices like [0][1][0]")
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--all", action="store_true", help="run every method and report whether they agree")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("table", parents=[common], help="reproduce the S or f2 table")
    p.add_argument("kind", choices=("S", "f2"))
    p.add_argument("--n-max", type=_positive, default=12)
    p.add_argument("--d-max", type=_positive)
    p.add_argument("--method", choices=tuple(S_METHODS), default="middle")
    p.add_argument("--check", action="store_true", help="compare with the published table; exit 1 on mismatch")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", parents=[common], help="list all super-d-subwords")
    p.add_argument("-n", type=_positive)
    p.add_argument("-d", type=int, required=True)
    p.add_argument("--word")
    p.add_argument("--nontrivial", action="store_true", help="only subwords of length >= 2")
    p.add_argument("--matrix", action="store_true", help="print the Warshall-Latin cell matrix")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("max", parents=[common], help="f(m,n,d) with a witness word")
    p.add_argument("-m", type=_positive, required=True)
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("-d", type=_positive, required=True)
    p.add_argument("--workers", type=_positive, default=1)
    p.set_defaults(func=cmd_max)

    p = sub.add_parser("verify", parents=[common], help="run the cross-method and identity checks")
    p.add_argument("--n-max", type=_positive, default=30)
    p.add_argument("--d-max", type=_positive, default=30)
    p.add_argument("--random-words", type=_nonnegative, default=200)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (CapExceeded, UsageError, ValueError, TypeError) as exc:
        print(f"superd {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
