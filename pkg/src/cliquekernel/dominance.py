"""Dominance reductions for clique search.

Three rules, each run to a fixpoint:

``VERTEX_DOM``
    delete ``a`` when a non-adjacent ``b`` has ``N(a) <= N(b)``;
``EDGE_DOM_SHARED``
    delete ``{a,u}`` when an edge ``{u,b}`` exists with ``b`` not adjacent to
    ``a`` and ``N(a) & N(u) <= N(b)``;
``EDGE_DOM_DISJOINT``
    delete ``{x,y}`` when an edge ``{u,v}`` on two other vertices, neither a
    common neighbour of ``x`` and ``y``, has ``N(x) & N(y) <= N(u) & N(v)``.

In each case the deleted element can be swapped for its dominator inside any
clique, so the maximum clique size never changes.  Vertex dominance may lose
individual cliques; the edge rules keep a ``k``-clique for every ``k`` that
had one.

Serial mode deletes eagerly while scanning.  Snapshot mode splits the
candidate space into ``workers`` contiguous slices, scans every slice against
the same frozen matrix, then applies the merged proposals in descending
order, re-checking each witness first.  The proposal set does not depend on
how the space was cut, so the kernel is identical for any worker count.
Descending application means that of two elements dominating each other,
the higher-indexed (vertices) or lexicographically larger (edges) goes.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels as K
from .graph import Graph, GraphError
from .permutations import rank_tuple, split_range, tuple_count, unrank_tuple
from .report import ReductionReport, measure


class DominanceRule(enum.Enum):
    VERTEX_DOM = "DOM. ALG-1"
    EDGE_DOM_SHARED = "DOM. ALG-2"
    EDGE_DOM_DISJOINT = "EdgeDom v1"


class Mode(enum.Enum):
    SERIAL = "SERIAL"
    PARALLEL_SNAPSHOT = "PARALLEL"


@dataclass(frozen=True)
class ExecMode:
    mode: Mode = Mode.SERIAL
    workers: int = 1

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")

    @classmethod
    def serial(cls) -> "ExecMode":
        return cls(Mode.SERIAL, 1)

    @classmethod
    def parallel(cls, workers: int) -> "ExecMode":
        return cls(Mode.PARALLEL_SNAPSHOT, workers)

    @property
    def is_serial(self) -> bool:
        return self.mode is Mode.SERIAL


SERIAL = ExecMode.serial()


def process_type(rule: DominanceRule, exec_mode: ExecMode) -> str:
    """Label used in reports, e.g. ``"PARALLEL DOM. ALG-2"``."""
    return f"{exec_mode.mode.value} {rule.value}"


# ---------------------------------------------------------------------------
# reference predicates (plain set logic; the kernels are checked against these)


def _pair(g: Graph, *vs: int) -> None:
    if len(set(vs)) != len(vs):
        raise GraphError(f"vertices {vs} must be distinct")
    for v in vs:
        if not g.is_active(v):
            raise GraphError(f"vertex {v} is not active")


def dominates_vertex(g: Graph, a: int, b: int) -> bool:
    """True when ``b`` dominates ``a``: non-adjacent and ``N(a) <= N(b)``."""
    _pair(g, a, b)
    return not g.is_edge(a, b) and g.neighbors(a).issubset(g.neighbors(b))


def dominates_edge_shared(g: Graph, a: int, u: int, b: int) -> bool:
    """True when edge ``{u,b}`` dominates edge ``{a,u}``."""
    _pair(g, a, u, b)
    if not (g.is_edge(a, u) and g.is_edge(u, b)) or g.is_edge(a, b):
        return False
    return (g.neighbors(a) & g.neighbors(u)).issubset(g.neighbors(b))


def dominates_edge_disjoint(g: Graph, x: int, y: int, u: int, v: int) -> bool:
    """True when edge ``{u,v}`` dominates edge ``{x,y}``."""
    _pair(g, x, y, u, v)
    if not (g.is_edge(x, y) and g.is_edge(u, v)):
        return False
    if g.is_edge(u, x) and g.is_edge(u, y):
        return False
    if g.is_edge(v, x) and g.is_edge(v, y):
        return False
    return (g.neighbors(x) & g.neighbors(y)).issubset(g.neighbors(u) & g.neighbors(v))


# ---------------------------------------------------------------------------
# snapshot scans


def _scan_slices(rule: DominanceRule, n: int, workers: int) -> list[tuple[int, int]]:
    if rule is DominanceRule.EDGE_DOM_DISJOINT:
        total = tuple_count(n, 4)
    else:
        total = n
    return [(lo, hi) for lo, hi in split_range(total, workers) if hi > lo]


def _disjoint_slice(lo: int, hi: int, n: int) -> tuple[int, int, int, int]:
    # A worker unranks the first and last 4-tuple of its share; their leading
    # pairs bound the (x, y) blocks it has to visit.
    first = unrank_tuple(lo, n, 4)
    last = unrank_tuple(hi - 1, n, 4)
    return lo, hi, rank_tuple(first[:2], n), rank_tuple(last[:2], n)


_SCAN = {
    DominanceRule.VERTEX_DOM: K.vertex_scan,
    DominanceRule.EDGE_DOM_SHARED: K.shared_scan,
    DominanceRule.EDGE_DOM_DISJOINT: K.disjoint_scan,
}
_APPLY = {
    DominanceRule.VERTEX_DOM: K.vertex_apply,
    DominanceRule.EDGE_DOM_SHARED: K.shared_apply,
    DominanceRule.EDGE_DOM_DISJOINT: K.disjoint_apply,
}
_SWEEP = {
    DominanceRule.VERTEX_DOM: K.vertex_sweep,
    DominanceRule.EDGE_DOM_SHARED: K.shared_sweep,
    DominanceRule.EDGE_DOM_DISJOINT: K.disjoint_sweep,
}
_WIDTH = {
    DominanceRule.VERTEX_DOM: 2,
    DominanceRule.EDGE_DOM_SHARED: 3,
    DominanceRule.EDGE_DOM_DISJOINT: 4,
}


def _merge(rule: DominanceRule, parts: Sequence[np.ndarray]) -> np.ndarray:
    """Combine per-worker proposals into the canonical application order."""
    width = _WIDTH[rule]
    props = np.concatenate(parts) if parts else np.empty((0, width), dtype=np.int64)
    if props.shape[0] == 0:
        return props
    if rule is DominanceRule.VERTEX_DOM:
        order = np.argsort(-props[:, 0], kind="stable")
        return np.ascontiguousarray(props[order])
    if rule is DominanceRule.EDGE_DOM_SHARED:
        lo = np.minimum(props[:, 0], props[:, 1])
        hi = np.maximum(props[:, 0], props[:, 1])
        # descending edge, then ascending (a, u, b) within an edge
        order = np.lexsort((props[:, 2], props[:, 1], props[:, 0], -hi, -lo))
        return np.ascontiguousarray(props[order])
    # A block of tuples sharing (x, y) may straddle two slices; keep the
    # lexicographically first witness, which is what one worker would find.
    order = np.lexsort((props[:, 3], props[:, 2], props[:, 1], props[:, 0]))
    props = props[order]
    keep = np.ones(props.shape[0], dtype=bool)
    keep[1:] = np.any(props[1:, :2] != props[:-1, :2], axis=1)
    props = props[keep]
    return np.ascontiguousarray(props[::-1])


def _snapshot_round(g: Graph, rule: DominanceRule, workers: int, pool) -> tuple[int, int]:
    slices = _scan_slices(rule, g.n, workers)
    if rule is DominanceRule.EDGE_DOM_DISJOINT:
        slices = [_disjoint_slice(lo, hi, g.n) for lo, hi in slices]
    scan = _SCAN[rule]
    adj, active = g.adj, g.active
    if pool is None:
        parts = [scan(adj, active, *s) for s in slices]
    else:
        parts = list(pool.map(lambda s: scan(adj, active, *s), slices))
    props = _merge(rule, parts)
    if props.shape[0] == 0:
        return 0, 0
    return _APPLY[rule](adj, active, props)


def run_pass(g: Graph, rule: DominanceRule, exec_mode: ExecMode = SERIAL) -> ReductionReport:
    """Apply ``rule`` until a round deletes nothing."""
    if rule is DominanceRule.EDGE_DOM_DISJOINT and g.n < 4:
        with measure(g, process_type(rule, exec_mode)) as report:
            report.rounds = 1
        return report
    with measure(g, process_type(rule, exec_mode)) as report:
        if exec_mode.is_serial:
            sweep = _SWEEP[rule]
            while True:
                report.rounds += 1
                de, dv = sweep(g.adj, g.active)
                g._charge(int(de), int(dv))
                if de + dv == 0:
                    break
        else:
            pool = ThreadPoolExecutor(exec_mode.workers) if exec_mode.workers > 1 else None
            try:
                while True:
                    report.rounds += 1
                    de, dv = _snapshot_round(g, rule, exec_mode.workers, pool)
                    g._charge(int(de), int(dv))
                    if de + dv == 0:
                        break
            finally:
                if pool is not None:
                    pool.shutdown()
    return report


def vertex_dominance_pass(g: Graph, exec_mode: ExecMode = SERIAL) -> ReductionReport:
    return run_pass(g, DominanceRule.VERTEX_DOM, exec_mode)


def edge_dominance_shared_pass(g: Graph, exec_mode: ExecMode = SERIAL) -> ReductionReport:
    return run_pass(g, DominanceRule.EDGE_DOM_SHARED, exec_mode)


def edge_dominance_disjoint_pass(g: Graph, exec_mode: ExecMode = SERIAL) -> ReductionReport:
    return run_pass(g, DominanceRule.EDGE_DOM_DISJOINT, exec_mode)


def run_to_fixpoint(
    g: Graph, rules: Sequence[DominanceRule], exec_mode: ExecMode = SERIAL
) -> ReductionReport:
    """Cycle through ``rules`` until one whole cycle deletes nothing."""
    if not rules:
        raise ValueError("at least one rule is required")
    label = f"{exec_mode.mode.value} " + "+".join(r.value for r in rules)
    with measure(g, label) as report:
        while True:
            report.rounds += 1
            deleted = sum(run_pass(g, rule, exec_mode).deleted for rule in rules)
            if deleted == 0:
                break
    return report


def warm_up() -> None:
    """Compile (or load from cache) every kernel so later timings exclude the JIT."""
    from .graph import path_graph

    for rule in DominanceRule:
        for mode in (SERIAL, ExecMode.parallel(2)):
            run_pass(path_graph(5), rule, mode)


def parse_rules(spec: str) -> list[DominanceRule]:
    """Parse a comma list such as ``"alg1,edgedom"`` (names or report labels)."""
    aliases = {
        "alg1": DominanceRule.VERTEX_DOM,
        "vertex": DominanceRule.VERTEX_DOM,
        "alg2": DominanceRule.EDGE_DOM_SHARED,
        "shared": DominanceRule.EDGE_DOM_SHARED,
        "edgedom": DominanceRule.EDGE_DOM_DISJOINT,
        "disjoint": DominanceRule.EDGE_DOM_DISJOINT,
    }
    for rule in DominanceRule:
        aliases[rule.name.lower()] = rule
        aliases[rule.value.lower()] = rule
    out = []
    for token in spec.split(","):
        token = token.strip().lower()
        if not token:
            continue
        if token not in aliases:
            raise ValueError(f"unknown rule {token!r}; choose from alg1, alg2, edgedom")
        out.append(aliases[token])
    if not out:
        raise ValueError("no rules given")
    return out
