"""Undirected simple graph on a word-packed adjacency bit-matrix.

Vertices are the indices ``0..n-1`` and are never renumbered: deleting a
vertex clears its active bit and zeroes its row and column, so reports from
successive reductions refer to a stable index space.  :meth:`Graph.compact`
exports the surviving subgraph with fresh indices when that is wanted.
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from .bits import BitVector, full_mask, n_words, unpack


class GraphError(ValueError):
    """Invalid vertex, loop request or other misuse of a :class:`Graph`."""


class Graph:
    """Adjacency bit-matrix with per-vertex active flags and deletion counters.

    ``adj[u]`` is the packed neighbourhood of ``u`` and ``active`` the packed
    set of live vertices.  Both arrays are exposed for the reduction kernels;
    everything else should go through the methods, which keep the symmetry
    and counter invariants.
    """

    def __init__(self, n: int):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        self.n = n
        self.words = n_words(n)
        self.adj = np.zeros((n, self.words), dtype=np.uint64)
        self.active = full_mask(n)
        self.deleted_edges = 0
        self.deleted_vertices = 0
        self._edges = 0

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(n)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    @classmethod
    def from_dense(cls, matrix) -> "Graph":
        """Build from a square 0/1 matrix; it must be symmetric with a zero diagonal."""
        m = np.asarray(matrix).astype(bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise GraphError(f"adjacency matrix must be square, got shape {m.shape}")
        if m.diagonal().any():
            raise GraphError("adjacency matrix has a non-zero diagonal entry")
        if not np.array_equal(m, m.T):
            raise GraphError("adjacency matrix is not symmetric")
        g = cls(m.shape[0])
        g._load_dense(m)
        return g

    def _load_dense(self, m: np.ndarray) -> None:
        n = self.n
        if n == 0:
            return
        padded = np.zeros((n, self.words * 64), dtype=bool)
        padded[:, :n] = m
        packed = np.packbits(padded, axis=1, bitorder="little")
        self.adj = np.ascontiguousarray(packed).view(np.uint64).reshape(n, self.words).copy()
        self._edges = int(m.sum()) // 2

    def copy(self) -> "Graph":
        g = Graph.__new__(Graph)
        g.n = self.n
        g.words = self.words
        g.adj = self.adj.copy()
        g.active = self.active.copy()
        g.deleted_edges = self.deleted_edges
        g.deleted_vertices = self.deleted_vertices
        g._edges = self._edges
        return g

    # -- queries -----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def is_active(self, v: int) -> bool:
        self._check_vertex(v)
        return bool((int(self.active[v >> 6]) >> (v & 63)) & 1)

    def is_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((int(self.adj[u, v >> 6]) >> (v & 63)) & 1)

    def neighbors(self, v: int) -> BitVector:
        if not self.is_active(v):
            raise GraphError(f"vertex {v} is not active")
        return BitVector(self.adj[v], self.n)

    def active_set(self) -> BitVector:
        return BitVector(self.active, self.n)

    def active_vertices(self) -> list[int]:
        return unpack(self.active)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(np.unpackbits(self.adj[v].view(np.uint8)).sum())

    def degrees(self) -> np.ndarray:
        if self.n == 0:
            return np.zeros(0, dtype=np.int64)
        return np.unpackbits(self.adj.view(np.uint8), axis=1).sum(axis=1).astype(np.int64)

    @property
    def edge_count(self) -> int:
        return self._edges

    @property
    def initial_edge_count(self) -> int:
        return self._edges + self.deleted_edges

    @property
    def vertex_count(self) -> int:
        """Number of active vertices."""
        return int(np.unpackbits(self.active.view(np.uint8)).sum()) if self.n else 0

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u in range(self.n):
            for v in unpack(self.adj[u]):
                if v > u:
                    yield u, v

    def to_dense(self) -> np.ndarray:
        if self.n == 0:
            return np.zeros((0, 0), dtype=bool)
        bits = np.unpackbits(self.adj.view(np.uint8), axis=1, bitorder="little")
        return bits[:, : self.n].astype(bool)

    # -- mutation ------------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop {{{u},{v}}} not allowed in a simple graph")
        if not (self.is_active(u) and self.is_active(v)):
            raise GraphError(f"cannot add edge {{{u},{v}}}: endpoint inactive")
        if not self.is_edge(u, v):
            self._set(u, v, True)
            self._edges += 1
        return self

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Delete ``{u, v}``; endpoints stay.  Absent edges are a no-op."""
        if self.is_edge(u, v):
            self._set(u, v, False)
            self._edges -= 1
            self.deleted_edges += 1
        return self

    def remove_vertex(self, v: int) -> "Graph":
        """Deactivate ``v``; its live edges are charged to ``deleted_edges``."""
        if not self.is_active(v):
            raise GraphError(f"vertex {v} is already inactive")
        for u in unpack(self.adj[v]):
            self._set(u, v, False)
            self._edges -= 1
            self.deleted_edges += 1
        self.active[v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
        self.deleted_vertices += 1
        return self

    def _set(self, u: int, v: int, on: bool) -> None:
        bu = np.uint64(1) << np.uint64(u & 63)
        bv = np.uint64(1) << np.uint64(v & 63)
        if on:
            self.adj[u, v >> 6] |= bv
            self.adj[v, u >> 6] |= bu
        else:
            self.adj[u, v >> 6] &= ~bv
            self.adj[v, u >> 6] &= ~bu

    def _charge(self, edges: int, vertices: int) -> None:
        """Account for deletions performed directly on ``adj``/``active`` by a kernel."""
        self._edges -= edges
        self.deleted_edges += edges
        self.deleted_vertices += vertices

    # -- export ----------------------------------------------------------------

    def compact(self) -> tuple["Graph", list[int]]:
        """Return the active subgraph reindexed ``0..k-1`` and the old index of each new vertex."""
        keep = self.active_vertices()
        dense = self.to_dense()[np.ix_(keep, keep)] if keep else np.zeros((0, 0), dtype=bool)
        return Graph.from_dense(dense), keep

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.adj, other.adj)
            and np.array_equal(self.active, other.active)
        )

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, active={self.vertex_count}, edges={self.edge_count})"


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """Vertex 0 joined to ``1..leaves``."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))
