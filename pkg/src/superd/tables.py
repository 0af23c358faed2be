"""Reproducing the S(n, d) and f(2, n, d) tables, and the golden copies to compare against."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from superd.counting import complexity_binomial, complexity_middle, complexity_recursive
from superd.general import DEFAULT_SEARCH_CAP, max_complexity
from superd.graph import complexity_graph

S_METHODS: dict[str, Callable[[int, int], int]] = {
    "recursive": complexity_recursive,
    "middle": complexity_middle,
    "binomial": complexity_binomial,
    "graph": complexity_graph,
}

GOLDEN_FILES = {"S": "table1.csv", "f2": "table2.csv"}
FIRST_N = {"S": 1, "f2": 3}
FIRST_D = {"S": 1, "f2": 2}


@dataclass
class Table:
    kind: str
    method: str
    ns: list[int]
    ds: list[int]
    cells: dict[tuple[int, int], int | None]

    def value(self, n: int, d: int) -> int | None:
        return self.cells.get((n, d))

    def to_rows(self) -> list[list[str]]:
        rows = [["n", *map(str, self.ds)]]
        for n in self.ns:
            row = [str(n)]
            for d in self.ds:
                v = self.cells.get((n, d))
                row.append("-" if v is None else str(v))
            rows.append(row)
        return rows

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "method": self.method,
            "d": self.ds,
            "rows": [
                {
                    "n": n,
                    "values": [None if (v := self.cells.get((n, d))) is None else str(v) for d in self.ds],
                }
                for n in self.ns
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Table":
        ds = list(obj["d"])
        cells: dict[tuple[int, int], int | None] = {}
        ns = []
        for row in obj["rows"]:
            ns.append(row["n"])
            for d, v in zip(ds, row["values"]):
                cells[row["n"], d] = None if v is None else int(v)
        return cls(obj["kind"], obj["method"], ns, ds, cells)


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        return dump_json(table.to_json_obj())
    rows = table.to_rows()
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    if fmt == "plain":
        widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
        lines = []
        for r in rows:
            first = r[0].rjust(widths[0])
            rest = " ".join(cell.rjust(w) for cell, w in zip(r[1:], widths[1:]))
            lines.append(f"{first} | {rest}")
        lines.insert(1, "-" * len(lines[0]))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def load_golden(kind: str) -> Table:
    """The published table as shipped in ``superd/data``; ``-`` marks an undefined cell."""
    text = resources.files("superd.data").joinpath(GOLDEN_FILES[kind]).read_text()
    rows = list(csv.reader(io.StringIO(text)))
    ds = [int(x) for x in rows[0][1:]]
    ns: list[int] = []
    cells: dict[tuple[int, int], int | None] = {}
    for row in rows[1:]:
        n = int(row[0])
        ns.append(n)
        for d, v in zip(ds, row[1:]):
            cells[n, d] = None if v == "-" else int(v)
    return Table(kind, "golden", ns, ds, cells)


def build_table(kind: str, n_max: int, d_max: int, method: str = "middle", cap: int = DEFAULT_SEARCH_CAP) -> Table:
    """Compute the S table (by one rainbow method) or the f2 table (by exhaustive search)."""
    ns = list(range(FIRST_N[kind], n_max + 1))
    ds = list(range(FIRST_D[kind], d_max + 1))
    cells: dict[tuple[int, int], int | None] = {}
    if kind == "S":
        fn = S_METHODS[method]
        for n in ns:
            for d in ds:
                cells[n, d] = fn(n, d)
        return Table(kind, method, ns, ds, cells)
    if kind == "f2":
        for n in ns:
            for d in ds:
                cells[n, d] = max_complexity(2, n, d, cap=cap).value if d <= n - 1 else None
        return Table(kind, "search", ns, ds, cells)
    raise ValueError(f"unknown table kind {kind!r}")


@dataclass
class Comparison:
    method: str
    matched: int
    mismatches: list[tuple[int, int, int | None, int | None]]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_with_golden(table: Table, golden: Table | None = None) -> Comparison:
    """Compare every defined golden cell that falls inside ``table``'s range."""
    golden = golden or load_golden(table.kind)
    matched = 0
    bad = []
    for (n, d), want in golden.cells.items():
        if want is None or n not in table.ns or d not in table.ds:
            continue
        got = table.value(n, d)
        if got == want:
            matched += 1
        else:
            bad.append((n, d, want, got))
    return Comparison(table.method, matched, bad)
