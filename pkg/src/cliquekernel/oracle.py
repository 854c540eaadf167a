"""Exact clique facts for small graphs, used as ground truth by the tests.

Two independent engines compute the maximum clique: a branch-and-bound
search bounded by greedy colouring, and a plain scan over vertex subsets.
Both look only at the active vertices of a graph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

ORACLE_CAP = 30


class OracleCapError(ValueError):
    pass


@dataclass(frozen=True)
class CliqueWitness:
    size: int
    members: tuple[int, ...]


def _rows(g: Graph, cap: int | None) -> tuple[list[int], dict[int, int]]:
    verts = g.active_vertices()
    if cap is not None and len(verts) > cap:
        raise OracleCapError(f"{len(verts)} active vertices exceeds oracle cap {cap}")
    rows = {v: int.from_bytes(g.adj[v].tobytes(), "little") for v in verts}
    return verts, rows


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _color_bound(p: int, rows: dict[int, int]) -> int:
    colors = 0
    while p:
        colors += 1
        avail = p
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~rows[v] & ~low
            p &= ~low
    return colors


def max_clique(g: Graph, cap: int | None = ORACLE_CAP) -> CliqueWitness:
    """Lexicographically smallest maximum clique of the active subgraph."""
    verts, rows = _rows(g, cap)
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = clique
            return
        if len(clique) + _color_bound(cand, rows) <= len(best):
            return
        while cand:
            if len(clique) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(clique + [v], cand & rows[v])

    expand([], sum(1 << v for v in verts))
    return CliqueWitness(len(best), tuple(best))


def max_clique_exhaustive(g: Graph, cap: int | None = ORACLE_CAP) -> CliqueWitness:
    """Same answer as :func:`max_clique` by trying subsets from the largest size down."""
    verts, rows = _rows(g, cap)
    for size in range(len(verts), 0, -1):
        for subset in combinations(verts, size):
            if all(rows[a] >> b & 1 for a, b in combinations(subset, 2)):
                return CliqueWitness(size, subset)
    return CliqueWitness(0, ())


def clique_number(g: Graph, cap: int | None = ORACLE_CAP) -> int:
    return max_clique(g, cap).size


def enumerate_k_cliques(g: Graph, k: int, cap: int | None = ORACLE_CAP) -> list[tuple[int, ...]]:
    """All ``k``-cliques as sorted tuples, in lexicographic order."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    verts, rows = _rows(g, cap)
    out: list[tuple[int, ...]] = []

    def extend(clique: tuple[int, ...], cand: int) -> None:
        if len(clique) == k:
            out.append(clique)
            return
        for v in _bits(cand):
            extend(clique + (v,), cand & rows[v] & ~((2 << v) - 1))

    extend((), sum(1 << v for v in verts))
    return out


def is_clique(g: Graph, members) -> bool:
    members = list(members)
    if len(set(members)) != len(members):
        return False
    if not all(0 <= v < g.n and g.is_active(v) for v in members):
        return False
    return all(g.is_edge(a, b) for a, b in combinations(members, 2))
