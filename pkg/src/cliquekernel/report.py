from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass

from .graph import Graph


@dataclass
class ReductionReport:
    """What one reduction call removed from a graph."""

    rule: str
    deleted_edges: int = 0
    deleted_vertices: int = 0
    rounds: int = 0
    duration: float = 0.0

    @property
    def deleted(self) -> int:
        return self.deleted_edges + self.deleted_vertices


@contextmanager
def measure(g: Graph, rule: str):
    """Yield a report whose counts are filled from ``g``'s counter deltas on exit."""
    report = ReductionReport(rule)
    e0, v0 = g.deleted_edges, g.deleted_vertices
    t0 = time.perf_counter()
    try:
        yield report
    finally:
        report.duration = time.perf_counter() - t0
        report.deleted_edges = g.deleted_edges - e0
        report.deleted_vertices = g.deleted_vertices - v0
