"""Manifest-driven benchmark harness producing verdict tables.

A manifest is a CSV with columns ``name,graph_a,graph_b,expected``. Graph
references are file paths or inline generator specs (``gen:`` prefix), e.g.::

    gen:cycle:6
    gen:random_gnm:50:150:7
    gen:disjoint_union:complete:3:complete:3
    gen:permuted:42:paley:13        (seeded random relabeling of a spec)

``expected`` is ``iso``, ``non-iso``, or ``unknown`` (blank); unknown rows
run without agreement scoring so externally obtained benchmark files can be
ingested without curated labels. A failing row reports its error and never
aborts the run.
"""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .formats import load_graph
from .generators import disjoint_union, generate
from .graphs import Graph, Permutation, permute
from .oracle import find_isomorphism
from .refinement import WLVerdict, wl_compare
from .signature import NonIsomorphic, rsvp_compare

EXPECTED_LABELS = ("iso", "non-iso", "unknown")

# exact search is refused above this vertex count unless forced
ORACLE_SIZE_LIMIT = 16


@dataclass(frozen=True)
class ManifestRow:
    name: str
    graph_a: str
    graph_b: str
    expected: str = "unknown"


@dataclass
class ReportRow:
    name: str
    expected: str = "unknown"
    n: int | None = None
    m: int | None = None
    wl: str = ""
    rsvp: str = ""
    oracle: str = ""
    wl_ms: float = 0.0
    rsvp_ms: float = 0.0
    oracle_ms: float = 0.0
    wl_ok: str = ""
    rsvp_ok: str = ""
    error: str = ""


_SPEC_ARITY = {
    "cycle": 1,
    "complete": 1,
    "path": 1,
    "rook": 1,
    "paley": 1,
    "shrikhande": 0,
    "worked_example": 0,
    "random_gnm": 3,
    "random_regular": 3,
}


def _int_token(tokens: list[str], family: str) -> int:
    if not tokens:
        raise ValueError(f"generator {family!r}: missing parameter")
    try:
        return int(tokens[0])
    except ValueError:
        raise ValueError(
            f"generator {family!r}: non-integer parameter {tokens[0]!r}"
        ) from None


def graph_from_spec_tokens(tokens: list[str]) -> tuple[Graph, list[str]]:
    """Parse one generator spec from ``tokens``; returns (graph, leftover)."""
    if not tokens:
        raise ValueError("empty generator spec")
    family, rest = tokens[0], tokens[1:]
    if family == "disjoint_union":
        a, rest = graph_from_spec_tokens(rest)
        b, rest = graph_from_spec_tokens(rest)
        return disjoint_union(a, b), rest
    if family == "permuted":
        seed = _int_token(rest, family)
        sub, rest = graph_from_spec_tokens(rest[1:])
        p = Permutation.random(sub.n, random.Random(seed))
        return permute(sub, p), rest
    if family not in _SPEC_ARITY:
        known = ", ".join(sorted(_SPEC_ARITY) + ["disjoint_union", "permuted"])
        raise ValueError(f"unknown generator family {family!r}; known: {known}")
    params = []
    for _ in range(_SPEC_ARITY[family]):
        params.append(_int_token(rest, family))
        rest = rest[1:]
    return generate(family, *params), rest


def graph_from_spec(spec: str) -> Graph:
    graph, leftover = graph_from_spec_tokens(spec.split(":"))
    if leftover:
        raise ValueError(f"trailing generator spec tokens: {':'.join(leftover)}")
    return graph


def resolve_graph_ref(ref: str) -> Graph:
    """A ``gen:`` inline spec, or a readable graph file (format sniffed)."""
    if ref.startswith("gen:"):
        return graph_from_spec(ref[len("gen:"):])
    return load_graph(ref)


def load_manifest(path: str | Path) -> list[ManifestRow]:
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        fields = reader.fieldnames or []
        for column in ("name", "graph_a", "graph_b", "expected"):
            if column not in fields:
                raise ValueError(f"manifest is missing column {column!r}")
        rows = []
        for record in reader:
            expected = (record["expected"] or "unknown").strip() or "unknown"
            if expected not in EXPECTED_LABELS:
                raise ValueError(
                    f"row {record['name']!r}: expected label {expected!r} "
                    f"not in {EXPECTED_LABELS}"
                )
            rows.append(
                ManifestRow(
                    name=record["name"].strip(),
                    graph_a=record["graph_a"].strip(),
                    graph_b=record["graph_b"].strip(),
                    expected=expected,
                )
            )
    names = [row.name for row in rows]
    if len(set(names)) != len(names):
        raise ValueError("manifest case names are not unique")
    return rows


def builtin_manifest() -> list[ManifestRow]:
    """The generatable verdict-table rows: the two classic refinement-failure
    pairs plus relabeled pairs from the always-detected families."""
    return [
        ManifestRow("disconnected-pair", "gen:cycle:6",
                    "gen:disjoint_union:complete:3:complete:3", "non-iso"),
        ManifestRow("strongly-regular-pair", "gen:shrikhande", "gen:rook:4",
                    "non-iso"),
        ManifestRow("paley-13-relabeled", "gen:paley:13",
                    "gen:permuted:42:paley:13", "iso"),
        ManifestRow("paley-17-relabeled", "gen:paley:17",
                    "gen:permuted:43:paley:17", "iso"),
        ManifestRow("complete-6-relabeled", "gen:complete:6",
                    "gen:permuted:44:complete:6", "iso"),
        ManifestRow("rook-4-relabeled", "gen:rook:4",
                    "gen:permuted:45:rook:4", "iso"),
    ]


def _agreement(expected: str, says_non_iso: bool) -> str:
    if expected == "non-iso":
        return "yes" if says_non_iso else "no"
    if expected == "iso":
        return "no" if says_non_iso else "yes"
    return ""


def run_row(row: ManifestRow, oracle_limit: int = ORACLE_SIZE_LIMIT) -> ReportRow:
    report = ReportRow(name=row.name, expected=row.expected)
    try:
        a = resolve_graph_ref(row.graph_a)
        b = resolve_graph_ref(row.graph_b)
    except Exception as exc:  # noqa: BLE001 - row isolation is the contract
        report.error = str(exc)
        return report
    report.n, report.m = a.n, a.m

    t0 = time.perf_counter()
    wl = wl_compare(a, b)
    report.wl_ms = (time.perf_counter() - t0) * 1000.0
    report.wl = ("non-isomorphic" if wl is WLVerdict.NON_ISOMORPHIC
                 else "possibly-isomorphic")
    report.wl_ok = _agreement(row.expected, wl is WLVerdict.NON_ISOMORPHIC)

    t0 = time.perf_counter()
    rsvp = rsvp_compare(a, b)
    report.rsvp_ms = (time.perf_counter() - t0) * 1000.0
    rsvp_non_iso = isinstance(rsvp, NonIsomorphic)
    report.rsvp = "non-isomorphic" if rsvp_non_iso else "certificates-equal"
    report.rsvp_ok = _agreement(row.expected, rsvp_non_iso)

    if max(a.n, b.n) <= oracle_limit:
        t0 = time.perf_counter()
        found = find_isomorphism(a, b)
        report.oracle_ms = (time.perf_counter() - t0) * 1000.0
        report.oracle = "isomorphic" if found is not None else "non-isomorphic"
    else:
        report.oracle = "skipped"
    return report


def run_bench(rows: list[ManifestRow], jobs: int = 1,
              oracle_limit: int = ORACLE_SIZE_LIMIT) -> list[ReportRow]:
    """One report row per manifest row, preserving manifest order."""
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda r: run_row(r, oracle_limit), rows))
    return [run_row(row, oracle_limit) for row in rows]


_COLUMNS = ("name", "expected", "n", "m", "wl", "wl_ms", "rsvp", "rsvp_ms",
            "oracle", "oracle_ms", "wl_ok", "rsvp_ok", "error")


def _cell(report: ReportRow, column: str) -> str:
    value = getattr(report, column)
    if value is None:
        return ""
    if column.endswith("_ms"):
        return f"{value:.1f}" if getattr(report, column[:-3]) else ""
    return str(value)


def summary_line(reports: list[ReportRow]) -> str:
    rsvp_hits = sum(r.rsvp == "non-isomorphic" for r in reports)
    wl_hits = sum(r.wl == "non-isomorphic" for r in reports)
    errors = sum(bool(r.error) for r in reports)
    return (f"summary: {len(reports)} case(s); non-isomorphism flagged by "
            f"rsvp: {rsvp_hits}, by wl: {wl_hits}; errors: {errors}")


def format_table(reports: list[ReportRow]) -> str:
    grid = [_COLUMNS] + [
        tuple(_cell(report, column) for column in _COLUMNS) for report in reports
    ]
    widths = [max(len(row[i]) for row in grid) for i in range(len(_COLUMNS))]
    lines = [
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        for row in grid
    ]
    return "".join(line + "\n" for line in lines)


def format_csv(reports: list[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for report in reports:
        writer.writerow(_cell(report, column) for column in _COLUMNS)
    return buffer.getvalue()
