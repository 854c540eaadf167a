"""Benchmark protocol: run every dominance process type on a series of graphs.

Each record is one row of the results CSV::

    ProcessType,VertexCount,EdgeCount,DeletedEdges,DeletedVertices,Duration

Durations are wall-clock seconds around the reduction pass only.
"""
from __future__ import annotations

import csv
import logging
import os
import re
import sys
from dataclasses import astuple, dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .dominance import DominanceRule, ExecMode, process_type, run_pass, warm_up
from .generator import SUITE_SIZES, GenSpec, default_edge_count, generate
from .graph import Graph
from .io import GraphFormatError, load_graph, save_matrix
from .oracle import ORACLE_CAP, clique_number

log = logging.getLogger(__name__)

HEADER = ("ProcessType", "VertexCount", "EdgeCount", "DeletedEdges", "DeletedVertices", "Duration")
DEFAULT_INPUT_DIR = Path("data/input")
DEFAULT_OUTPUT = Path("data/saved_results/result_.csv")
DEFAULT_SEED = 2021

# Row order within one graph: each rule, serial before parallel.
RULE_ORDER = (
    DominanceRule.EDGE_DOM_DISJOINT,
    DominanceRule.VERTEX_DOM,
    DominanceRule.EDGE_DOM_SHARED,
)


class OracleMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class BenchRecord:
    process_type: str
    vertex_count: int
    edge_count: int
    deleted_edges: int
    deleted_vertices: int
    duration: float

    def to_row(self) -> list[str]:
        return [
            self.process_type,
            str(self.vertex_count),
            str(self.edge_count),
            str(self.deleted_edges),
            str(self.deleted_vertices),
            f"{self.duration:.6f}",
        ]

    @classmethod
    def from_row(cls, row: Sequence[str]) -> "BenchRecord":
        name, nv, ne, de, dv, dur = row
        return cls(name, int(nv), int(ne), int(de), int(dv), float(dur))


def amdahl_speedup(p: float, n: float) -> float:
    """Upper bound on speedup with parallel fraction ``p`` on ``n`` workers."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"parallel fraction must lie in [0, 1], got {p}")
    if n < 1:
        raise ValueError(f"worker count must be >= 1, got {n}")
    return 1.0 / ((1.0 - p) + p / n)


def parallel_fraction(speedup: float, n: int) -> float | None:
    """Parallel fraction that makes :func:`amdahl_speedup` equal an observed speedup."""
    if n <= 1 or speedup <= 0:
        return None
    return (1.0 - 1.0 / speedup) / (1.0 - 1.0 / n)


def process_types(workers: int, rules: Iterable[DominanceRule] | None = None) -> list[tuple[DominanceRule, ExecMode]]:
    chosen = set(RULE_ORDER if rules is None else rules)
    modes = (ExecMode.serial(), ExecMode.parallel(workers))
    return [(rule, mode) for rule in RULE_ORDER if rule in chosen for mode in modes]


def run_graph(
    g: Graph,
    workers: int,
    rules: Iterable[DominanceRule] | None = None,
    oracle_check: bool = False,
) -> list[BenchRecord]:
    """Run each process type on its own copy of ``g``."""
    warm_up()
    records = []
    omega = None
    if oracle_check and g.vertex_count <= ORACLE_CAP:
        omega = clique_number(g)
    for rule, mode in process_types(workers, rules):
        kernel = g.copy()
        report = run_pass(kernel, rule, mode)
        if g.edge_count - report.deleted_edges != kernel.edge_count:
            raise RuntimeError(f"{report.rule}: deletion counters disagree with the kernel")
        if omega is not None and clique_number(kernel) != omega:
            raise OracleMismatch(f"{report.rule}: kernel clique number differs from input ({omega})")
        records.append(
            BenchRecord(
                process_type(rule, mode),
                g.vertex_count,
                g.edge_count,
                report.deleted_edges,
                report.deleted_vertices,
                report.duration,
            )
        )
        log.info("%s n=%d done in %.3fs", records[-1].process_type, g.n, report.duration)
    return records


def write_csv(records: Iterable[BenchRecord], path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(HEADER)
        for rec in records:
            writer.writerow(rec.to_row())


def read_csv(path) -> list[BenchRecord]:
    with Path(path).open(newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if tuple(header or ()) != HEADER:
            raise ValueError(f"{path}: unexpected header {header}")
        return [BenchRecord.from_row(row) for row in reader if row]


def format_table(records: Sequence[BenchRecord]) -> str:
    rows = [HEADER] + [tuple(r.to_row()) for r in records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(HEADER))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines)


def format_speedups(records: Sequence[BenchRecord], workers: int) -> str:
    """Serial/parallel timing ratio per rule and graph, with the implied Amdahl bound."""
    serial = {}
    out = ["Rule          Vertices  Speedup  ParallelFraction  AmdahlBound"]
    for rec in records:
        mode, rule = rec.process_type.split(" ", 1)
        key = (rule, rec.vertex_count, rec.edge_count)
        if mode == "SERIAL":
            serial[key] = rec.duration
            continue
        if key not in serial or rec.duration <= 0:
            continue
        s = serial[key] / rec.duration
        p = parallel_fraction(s, workers)
        if p is None or not 0.0 <= p < 1.0:
            frac, bound = "-", "-"
        else:
            frac, bound = f"{p:.3f}", f"{amdahl_speedup(p, 1e12):.2f}"
        out.append(f"{rule:<13} {rec.vertex_count:>8}  {s:>7.2f}  {frac:>16}  {bound:>11}")
    return "\n".join(out)


def _natural_key(path: Path):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", path.name)]


def suite_inputs(input_dir, seed: int = DEFAULT_SEED) -> list[Path]:
    """Graph files in ``input_dir``; generates the standard series when there are none."""
    input_dir = Path(input_dir)
    input_dir.mkdir(parents=True, exist_ok=True)
    files = sorted((p for p in input_dir.iterdir() if p.is_file() and not p.name.startswith(".")), key=_natural_key)
    if files:
        return files
    for n in SUITE_SIZES:
        path = input_dir / f"graph_{n:04d}.txt"
        log.info("generating %s", path)
        save_matrix(generate(GenSpec(n, default_edge_count(n), seed + n)), path)
        files.append(path)
    return files


def _emit(records: Sequence[BenchRecord], output_path, workers: int, out: TextIO | None) -> None:
    write_csv(records, output_path)
    if out is not None:
        print(format_table(records), file=out)
        print(file=out)
        print(format_speedups(records, workers), file=out)


def run_suite(
    input_dir=DEFAULT_INPUT_DIR,
    output_path=DEFAULT_OUTPUT,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
    rules: Iterable[DominanceRule] | None = None,
    oracle_check: bool = False,
    out: TextIO | None = sys.stdout,
) -> list[BenchRecord]:
    """Run all process types over every graph in ``input_dir`` and write the CSV."""
    workers = workers or os.cpu_count() or 1
    records: list[BenchRecord] = []
    for path in suite_inputs(input_dir, seed):
        g = load_graph(path)
        records.extend(run_graph(g, workers, rules, oracle_check))
    _emit(records, output_path, workers, out)
    return records


def run_single(
    n: int,
    source,
    output_path=DEFAULT_OUTPUT,
    seed: int = DEFAULT_SEED,
    workers: int | None = None,
    rules: Iterable[DominanceRule] | None = None,
    oracle_check: bool = False,
    out: TextIO | None = sys.stdout,
) -> list[BenchRecord]:
    """``source`` is an edge count (generate a graph) or a path (load one with ``n`` vertices)."""
    workers = workers or os.cpu_count() or 1
    if isinstance(source, int):
        g = generate(GenSpec(n, source, seed))
    else:
        g = load_graph(source, n)
    records = run_graph(g, workers, rules, oracle_check)
    _emit(records, output_path, workers, out)
    return records


__all__ = [
    "BenchRecord",
    "GraphFormatError",
    "HEADER",
    "amdahl_speedup",
    "read_csv",
    "run_graph",
    "run_single",
    "run_suite",
    "write_csv",
]
