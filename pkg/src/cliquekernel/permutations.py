"""Lexicographic ranking of ordered tuples of distinct elements.

The tuples of length ``arity`` drawn without repetition from ``0..n-1`` are
numbered ``0 .. P(n, arity)-1`` in lexicographic order.  Unranking lets a
worker jump straight to the first tuple of its share of that index space.
"""
from __future__ import annotations

from math import perm


def tuple_count(n: int, arity: int) -> int:
    """``n * (n-1) * ... * (n-arity+1)``; zero when ``arity > n``."""
    if n < 0 or arity < 0:
        raise ValueError("n and arity must be non-negative")
    return perm(n, arity) if arity <= n else 0


def unrank_tuple(index: int, n: int, arity: int) -> tuple[int, ...]:
    """The ``index``-th ``arity``-tuple of distinct values from ``range(n)``."""
    total = tuple_count(n, arity)
    if not 0 <= index < total:
        raise IndexError(f"index {index} out of range for P({n},{arity}) = {total}")
    pool = list(range(n))
    out = []
    for depth in range(arity):
        block = tuple_count(n - depth - 1, arity - depth - 1)
        pos, index = divmod(index, block)
        out.append(pool.pop(pos))
    return tuple(out)


def rank_tuple(items, n: int) -> int:
    """Inverse of :func:`unrank_tuple`."""
    arity = len(items)
    if len(set(items)) != arity or any(not 0 <= x < n for x in items):
        raise ValueError(f"{items!r} is not a tuple of distinct values below {n}")
    pool = list(range(n))
    index = 0
    for depth, x in enumerate(items):
        pos = pool.index(x)
        pool.pop(pos)
        index += pos * tuple_count(n - depth - 1, arity - depth - 1)
    return index


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut ``[0, total)`` into ``parts`` contiguous, near-equal half-open ranges."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts)]
