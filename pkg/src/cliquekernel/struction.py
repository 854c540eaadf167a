"""Struction: a derived graph whose clique number is one less.

With pivot ``p``, let ``A`` be the neighbours of ``p`` and ``B`` the other
non-pivot vertices.  The derived graph has one node per vertex of ``A`` and
one node ``c(x, y)`` per edge ``{x, y}`` inside ``B`` with ``x < y``.
Adjacency:

* ``a_i ~ a_j`` when ``{a_i, a_j}`` is an edge;
* ``c(x, y) ~ c(x, z)`` when ``{y, z}`` is an edge (same first component);
* ``a ~ c(x, y)`` when ``a`` is adjacent to both ``x`` and ``y``.

A clique inside ``A`` lifts by adding the pivot; a clique with C-nodes
``c(x, y_1) .. c(x, y_t)`` lifts to ``{x, y_1 .. y_t}`` plus its A-nodes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import numpy as np

from .graph import Graph, GraphError
from .io import GraphFormatError


class StructionBudgetError(RuntimeError):
    """The derived graph would exceed the node budget."""


@dataclass(frozen=True)
class Origin:
    """Where a derived node comes from: ``("A", v)`` or ``("C", x, y)``."""

    kind: str
    first: int
    second: int = -1

    def __str__(self) -> str:
        return f"A {self.first}" if self.kind == "A" else f"C {self.first} {self.second}"


@dataclass
class StructionResult:
    graph: Graph
    node_origin: list[Origin]
    pivot: int


def default_pivot(g: Graph) -> int:
    verts = g.active_vertices()
    if not verts:
        raise GraphError("graph has no active vertex to pivot on")
    deg = g.degrees()
    return min(verts, key=lambda v: (deg[v], v))


def struction(g: Graph, pivot: int | None = None, node_budget: int | None = None) -> StructionResult:
    """Build the struction of ``g`` around ``pivot`` (default: a minimum-degree vertex).

    ``node_budget`` defaults to four times the number of active vertices.
    """
    if pivot is None:
        pivot = default_pivot(g)
    if not g.is_active(pivot):
        raise GraphError(f"pivot {pivot} is not active")
    dense = g.to_dense()
    verts = g.active_vertices()
    a_nodes = [v for v in verts if dense[pivot, v]]
    b_nodes = [v for v in verts if v != pivot and not dense[pivot, v]]
    c_nodes = [(x, y) for x, y in combinations(b_nodes, 2) if dense[x, y]]

    budget = 4 * len(verts) if node_budget is None else node_budget
    size = len(a_nodes) + len(c_nodes)
    if size > budget:
        raise StructionBudgetError(f"struction would have {size} nodes, budget is {budget}")

    origin = [Origin("A", a) for a in a_nodes] + [Origin("C", x, y) for x, y in c_nodes]
    m = np.zeros((size, size), dtype=bool)
    na = len(a_nodes)
    if na:
        ai = np.array(a_nodes)
        m[:na, :na] = dense[np.ix_(ai, ai)]
    if c_nodes:
        cx = np.array([x for x, _ in c_nodes])
        cy = np.array([y for _, y in c_nodes])
        m[na:, na:] = (cx[:, None] == cx[None, :]) & dense[np.ix_(cy, cy)]
        if na:
            ac = dense[np.ix_(ai, cx)] & dense[np.ix_(ai, cy)]
            m[:na, na:] = ac
            m[na:, :na] = ac.T
    return StructionResult(Graph.from_dense(m), origin, pivot)


def lift_clique(res: StructionResult, clique) -> tuple[int, ...]:
    """Map a clique of the derived graph to a clique of the source one vertex larger."""
    nodes = sorted(set(clique))
    gp = res.graph
    for v in nodes:
        if not 0 <= v < gp.n:
            raise GraphError(f"node {v} not in the derived graph")
    for a, b in combinations(nodes, 2):
        if not gp.is_edge(a, b):
            raise GraphError(f"nodes {a} and {b} are not adjacent; input is not a clique")
    a_part = [res.node_origin[v].first for v in nodes if res.node_origin[v].kind == "A"]
    c_part = [res.node_origin[v] for v in nodes if res.node_origin[v].kind == "C"]
    if not c_part:
        return tuple(sorted(a_part + [res.pivot]))
    head = {o.first for o in c_part}
    if len(head) != 1:  # ruled out by the C-C adjacency rule
        raise GraphError("C-nodes of a clique must share their first component")
    return tuple(sorted(a_part + [head.pop()] + [o.second for o in c_part]))


def save_origin(res: StructionResult, path) -> None:
    Path(path).write_text("".join(f"{o}\n" for o in res.node_origin))


def load_origin(path) -> list[Origin]:
    out = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        parts = line.split()
        if not parts:
            continue
        try:
            if parts[0] == "A" and len(parts) == 2:
                out.append(Origin("A", int(parts[1])))
            elif parts[0] == "C" and len(parts) == 3:
                x, y = int(parts[1]), int(parts[2])
                if not x < y:
                    raise ValueError
                out.append(Origin("C", x, y))
            else:
                raise ValueError
        except ValueError:
            raise GraphFormatError(f"bad origin line {line!r}", path, lineno) from None
    return out
