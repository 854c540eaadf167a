"""Legal vertex colourings and the colour-index reductions.

The colour index of a vertex counts the colour classes that meet its
neighbourhood; that of an edge counts the classes meeting the common
neighbourhood of its endpoints.  A ``k``-clique through ``v`` needs ``k-1``
differently coloured neighbours of ``v``, and one through ``{u,v}`` needs
``k-2`` differently coloured common neighbours, which gives the two deletion
thresholds used by :func:`reduce_by_color_index`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .bits import pack
from .graph import Graph, GraphError
from .io import GraphFormatError
from .report import ReductionReport, measure


class ColoringError(GraphError):
    pass


@dataclass
class Coloring:
    """``class_of[v]`` is the colour of ``v`` or ``-1`` for vertices it does not cover."""

    class_of: list[int]
    k_colors: int = field(init=False)

    def __post_init__(self):
        self.k_colors = max(self.class_of, default=-1) + 1

    def classes(self, n: int) -> list[np.ndarray]:
        """Packed member set of every colour class."""
        members: list[list[int]] = [[] for _ in range(self.k_colors)]
        for v, c in enumerate(self.class_of):
            if c >= 0:
                members[c].append(v)
        return [pack(m, n) for m in members]


def check_legal(g: Graph, c: Coloring) -> None:
    """Raise :class:`ColoringError` unless ``c`` legally colours every active vertex of ``g``."""
    if len(c.class_of) != g.n:
        raise ColoringError(f"coloring covers {len(c.class_of)} vertices, graph has {g.n}")
    for v in g.active_vertices():
        if c.class_of[v] < 0:
            raise ColoringError(f"active vertex {v} has no colour")
    for u, v in g.edges():
        if c.class_of[u] == c.class_of[v]:
            raise ColoringError(f"edge {{{u},{v}}} joins two vertices of colour {c.class_of[u]}")


def is_legal(g: Graph, c: Coloring) -> bool:
    try:
        check_legal(g, c)
    except ColoringError:
        return False
    return True


def greedy_color(g: Graph) -> Coloring:
    """Largest-degree-first greedy colouring (ties broken by lower index)."""
    if g.vertex_count == 0:
        raise ColoringError("cannot colour a graph without active vertices")
    deg = g.degrees()
    order = sorted(g.active_vertices(), key=lambda v: (-deg[v], v))
    class_of = [-1] * g.n
    for v in order:
        used = {class_of[u] for u in g.neighbors(v)}
        color = 0
        while color in used:
            color += 1
        class_of[v] = color
    return Coloring(class_of)


def _classes_meeting(words: np.ndarray, classes: list[np.ndarray]) -> int:
    return sum(1 for cls in classes if np.any(words & cls))


def node_color_index(g: Graph, c: Coloring, v: int) -> int:
    if not g.is_active(v):
        raise GraphError(f"vertex {v} is not active")
    return _classes_meeting(g.adj[v], c.classes(g.n))


def edge_color_index(g: Graph, c: Coloring, u: int, v: int) -> int:
    if not g.is_edge(u, v):
        raise GraphError(f"{{{u},{v}}} is not an edge")
    return _classes_meeting(g.adj[u] & g.adj[v], c.classes(g.n))


def reduce_by_color_index(g: Graph, c: Coloring, k: int) -> ReductionReport:
    """Delete vertices of colour index ``< k-1`` and edges of index ``< k-2`` until stable.

    No ``k``-clique is lost.  The colouring is fixed for the whole call; it
    stays legal as elements are deleted.
    """
    if k < 2:
        raise ValueError(f"target clique size must be >= 2, got {k}")
    check_legal(g, c)
    classes = c.classes(g.n)
    with measure(g, "COLOR-INDEX") as report:
        while True:
            report.rounds += 1
            before = g.deleted_edges + g.deleted_vertices
            for v in g.active_vertices():
                if _classes_meeting(g.adj[v], classes) < k - 1:
                    g.remove_vertex(v)
            for u, v in list(g.edges()):
                if _classes_meeting(g.adj[u] & g.adj[v], classes) < k - 2:
                    g.remove_edge(u, v)
            if g.deleted_edges + g.deleted_vertices == before:
                break
    return report


def save_coloring(g: Graph, c: Coloring, path) -> None:
    """One class id per active vertex, in vertex order."""
    lines = [str(c.class_of[v]) for v in g.active_vertices()]
    Path(path).write_text("".join(line + "\n" for line in lines))


def load_coloring(g: Graph, path) -> Coloring:
    values = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        token = line.strip()
        if not token:
            continue
        try:
            value = int(token)
        except ValueError:
            raise GraphFormatError(f"bad class id {token!r}", path, lineno) from None
        if value < 0:
            raise GraphFormatError(f"negative class id {value}", path, lineno)
        values.append(value)
    verts = g.active_vertices()
    if len(values) != len(verts):
        raise GraphFormatError(f"{len(values)} class ids for {len(verts)} active vertices", path)
    class_of = [-1] * g.n
    for v, value in zip(verts, values):
        class_of[v] = value
    coloring = Coloring(class_of)
    check_legal(g, coloring)
    return coloring
