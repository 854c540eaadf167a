"""Seeded random test graphs.

Every graph starts from the Hamiltonian path ``0-1-...-(n-1)`` so it is
connected; the remaining edges are drawn by rejection sampling with endpoints
``floor(n * r**skew)`` for uniform ``r``, which piles extra edges onto
low-index vertices.  The random stream is SplitMix64 (Steele, Lea & Flood
2014): output ``i`` is a fixed mix of ``seed + (i + 1) * 0x9E3779B97F4A7C15``,
so the sequence is reproducible anywhere and can be generated in vectorized
blocks.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1

SUITE_SIZES = tuple(range(100, 2000, 200))


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the SplitMix64 stream for ``seed``."""
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & _MASK64) + idx * GOLDEN_GAMMA
        z = (z ^ (z >> np.uint64(30))) * _MIX1
        z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniform01(seed: int, start: int, count: int) -> np.ndarray:
    """Doubles in ``[0, 1)`` from the top 53 bits of each stream output."""
    return (splitmix64(seed, start, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def default_edge_count(n: int) -> int:
    """Edge count used by the benchmark suite: ``n(n-5)/2``."""
    if n < 7:
        raise ValueError(f"default edge count needs n >= 7, got {n}")
    return n * (n - 5) // 2


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 vertices, got n={self.n}")
        top = self.n * (self.n - 1) // 2
        if not self.n - 1 <= self.m <= top:
            raise ValueError(f"edge count {self.m} infeasible for n={self.n}: need {self.n - 1}..{top}")


def generate(spec: GenSpec, skew: float = 2.0) -> Graph:
    """Connected simple graph with exactly ``spec.m`` edges; pure in ``(n, m, seed)``.

    ``skew=1`` gives the unbiased sampler (used only for comparison).
    """
    n = spec.n
    dense = np.zeros((n, n), dtype=bool)
    path = np.arange(n - 1)
    dense[path, path + 1] = True
    dense[path + 1, path] = True

    need = spec.m - (n - 1)
    cursor = 0  # index of the next unused stream output
    rate = 1.0
    while need > 0:
        batch = int(min(1 << 22, max(4096, 1.25 * need / max(rate, 1e-7))))
        r = uniform01(spec.seed, cursor, 2 * batch).reshape(batch, 2)
        cursor += 2 * batch
        ends = np.minimum((n * r**skew).astype(np.int64), n - 1)
        u, v = ends[:, 0], ends[:, 1]
        ok = (u != v) & ~dense[u, v]
        lo = np.minimum(u, v)[ok]
        hi = np.maximum(u, v)[ok]
        _, first = np.unique(lo * n + hi, return_index=True)
        first.sort()
        take = first[:need]
        dense[lo[take], hi[take]] = True
        dense[hi[take], lo[take]] = True
        need -= take.size
        rate = max(take.size, 1) / batch
    return Graph.from_dense(dense)
