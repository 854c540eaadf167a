"""Word-packed bit vectors.

Vertex sets are stored as little-endian arrays of ``uint64`` words: vertex
``v`` lives in word ``v >> 6`` at bit ``v & 63``.  The numba helpers in this
module are shared by the reduction kernels; :class:`BitVector` is the public,
immutable wrapper handed out by :meth:`Graph.neighbors`.
"""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np
from numba import njit

WORD_BITS = 64

ONE = np.uint64(1)
ZERO = np.uint64(0)
_DEBRUIJN = np.uint64(0x03F79D71B4CB0A89)
_SHIFT58 = np.uint64(58)


def _debruijn_table() -> np.ndarray:
    table = np.zeros(64, dtype=np.int64)
    for i in range(64):
        key = ((1 << i) * 0x03F79D71B4CB0A89) & 0xFFFFFFFFFFFFFFFF
        table[key >> 58] = i
    return table


_CTZ_TABLE = _debruijn_table()


def n_words(n: int) -> int:
    return (n + WORD_BITS - 1) // WORD_BITS


# ---------------------------------------------------------------------------
# numba primitives (all arithmetic stays in uint64; mixing signed and
# unsigned operands makes numba promote to float64)


@njit(cache=True, inline="always")
def ctz(low):
    """Index of the single set bit in ``low`` (``low`` must be a power of two)."""
    return _CTZ_TABLE[(low * _DEBRUIJN) >> _SHIFT58]


@njit(cache=True, inline="always")
def lowbit(x):
    return x & (~x + ONE)


@njit(cache=True, inline="always")
def popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return (x * np.uint64(0x0101010101010101)) >> np.uint64(56)


@njit(cache=True, inline="always")
def bit(v):
    return ONE << np.uint64(v & 63)


@njit(cache=True, inline="always")
def has_bit(words, v):
    return (words[v >> 6] >> np.uint64(v & 63)) & ONE != ZERO


@njit(cache=True)
def count_bits(words):
    total = 0
    for i in range(words.shape[0]):
        total += popcount(words[i])
    return total


@njit(cache=True)
def first_bit(words):
    for i in range(words.shape[0]):
        x = words[i]
        if x != ZERO:
            return i * 64 + ctz(lowbit(x))
    return -1


@njit(cache=True)
def is_subset(a, b):
    for i in range(a.shape[0]):
        if a[i] & ~b[i] != ZERO:
            return False
    return True


@njit(cache=True)
def is_empty(a):
    for i in range(a.shape[0]):
        if a[i] != ZERO:
            return False
    return True


# ---------------------------------------------------------------------------
# Python-side helpers


def pack(indices: Iterable[int], size: int) -> np.ndarray:
    words = np.zeros(n_words(size), dtype=np.uint64)
    for v in indices:
        if not 0 <= v < size:
            raise IndexError(f"bit {v} out of range for size {size}")
        words[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    return words


def unpack(words: np.ndarray) -> list[int]:
    if words.size == 0:
        return []
    bits = np.unpackbits(words.view(np.uint8), bitorder="little")
    return np.flatnonzero(bits).tolist()


def full_mask(size: int) -> np.ndarray:
    words = np.full(n_words(size), np.iinfo(np.uint64).max, dtype=np.uint64)
    tail = size & 63
    if tail:
        words[-1] = np.uint64((1 << tail) - 1)
    return words


class BitVector:
    """Immutable fixed-length set of small integers backed by packed words."""

    __slots__ = ("_words", "size")

    def __init__(self, words: np.ndarray, size: int):
        if words.shape != (n_words(size),):
            raise ValueError(f"expected {n_words(size)} words for size {size}, got {words.shape}")
        self._words = words.astype(np.uint64, copy=True)
        self._words.flags.writeable = False
        self.size = size

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> "BitVector":
        return cls(pack(indices, size), size)

    @property
    def words(self) -> np.ndarray:
        return self._words

    def _check(self, other: "BitVector") -> None:
        if not isinstance(other, BitVector):
            raise TypeError(f"expected BitVector, got {type(other).__name__}")
        if other.size != self.size:
            raise ValueError(f"length mismatch: {self.size} != {other.size}")

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self._words & other._words, self.size)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self._words | other._words, self.size)

    def __sub__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self._words & ~other._words, self.size)

    def issubset(self, other: "BitVector") -> bool:
        self._check(other)
        return not np.any(self._words & ~other._words)

    def __contains__(self, v: int) -> bool:
        if not 0 <= v < self.size:
            return False
        return bool((int(self._words[v >> 6]) >> (v & 63)) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(unpack(self._words))

    def count(self) -> int:
        return int(count_bits(self._words)) if self.size else 0

    def __bool__(self) -> bool:
        return bool(np.any(self._words))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.size == other.size and np.array_equal(self._words, other._words)

    def __hash__(self) -> int:
        return hash((self.size, self._words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({{{', '.join(map(str, self))}}}, size={self.size})"


def intersect_and_subset(a: BitVector, b: BitVector) -> tuple[BitVector, bool]:
    """Return ``(a & b, a <= b)`` computed word-wise."""
    return a & b, a.issubset(b)
