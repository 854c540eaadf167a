"""Graph file formats.

Matrix files hold the ``n*n`` adjacency entries in row-major order as ASCII
``0``/``1``, one value per line.  DIMACS edge lists (``p edge n m`` /
``e u v`` with 1-based vertices) are accepted as a second input format.
"""
from __future__ import annotations

import math
import os
from pathlib import Path

import numpy as np

from .graph import Graph, GraphError


class GraphFormatError(GraphError):
    """Malformed graph file; ``line`` is the 1-based offending line when known."""

    def __init__(self, message: str, path=None, line: int | None = None):
        where = str(path) if path is not None else "<input>"
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {message}")
        self.path = path
        self.line = line


def save_matrix(g: Graph, path) -> None:
    dense = g.to_dense()
    chars = np.where(dense.ravel(), ord("1"), ord("0")).astype(np.uint8)
    out = np.empty(2 * chars.size, dtype=np.uint8)
    out[0::2] = chars
    out[1::2] = ord("\n")
    Path(path).write_bytes(out.tobytes())


def _dense_from_values(values: np.ndarray, path, expected_n: int | None) -> np.ndarray:
    count = values.size
    n = math.isqrt(count)
    if n * n != count:
        raise GraphFormatError(f"not a square matrix ({count} values)", path, count)
    if expected_n is not None and n != expected_n:
        raise GraphFormatError(
            f"dimension mismatch: expected {expected_n}x{expected_n}, file holds {n}x{n}", path
        )
    m = values.reshape(n, n).astype(bool)
    diag = np.flatnonzero(m.diagonal())
    if diag.size:
        i = int(diag[0])
        raise GraphFormatError(f"self-loop at vertex {i}", path, i * n + i + 1)
    bad = np.argwhere(m != m.T)
    if bad.size:
        i, j = (int(x) for x in bad[0])
        raise GraphFormatError(f"asymmetric entry ({i},{j})", path, i * n + j + 1)
    return m


def load_matrix(path, n: int | None = None) -> Graph:
    """Read a newline-separated adjacency matrix; ``n`` pins the expected dimension."""
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise GraphFormatError(f"cannot read file ({exc.strerror})", path) from exc
    buf = np.frombuffer(raw, dtype=np.uint8)
    # Fast path for files in the canonical layout written by save_matrix.
    if buf.size % 2 == 0 and np.all(buf[1::2] == ord("\n")):
        vals = buf[0::2]
        ok = (vals == ord("0")) | (vals == ord("1"))
        if ok.all():
            return Graph.from_dense(_dense_from_values(vals == ord("1"), path, n))
    values = []
    for lineno, line in enumerate(raw.decode("ascii", errors="replace").splitlines(), 1):
        token = line.strip()
        if not token:
            continue
        if token not in ("0", "1"):
            raise GraphFormatError(f"non-binary token {token!r}", path, lineno)
        values.append(token == "1")
    return Graph.from_dense(_dense_from_values(np.array(values, dtype=bool), path, n))


def load_dimacs(path) -> Graph:
    """Read a DIMACS ``.col``/``.clq`` edge list."""
    n = None
    edges = []
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read file ({exc.strerror})", path) from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4 or n is not None:
                raise GraphFormatError("bad or repeated problem line", path, lineno)
            try:
                n = int(parts[2])
            except ValueError:
                raise GraphFormatError(f"bad vertex count {parts[2]!r}", path, lineno) from None
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before problem line", path, lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except (IndexError, ValueError):
                raise GraphFormatError("malformed edge line", path, lineno) from None
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge endpoint out of range 1..{n}", path, lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u + 1}", path, lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line type {parts[0]!r}", path, lineno)
    if n is None:
        raise GraphFormatError("missing problem line 'p edge n m'", path)
    m = np.zeros((n, n), dtype=bool)
    if edges:
        e = np.array(edges)
        m[e[:, 0], e[:, 1]] = True
        m[e[:, 1], e[:, 0]] = True
    return Graph.from_dense(m)


def load_graph(path, n: int | None = None) -> Graph:
    """Load either format, choosing DIMACS by extension or a leading ``c``/``p`` line."""
    suffix = os.path.splitext(str(path))[1].lower()
    is_dimacs = suffix in (".col", ".clq", ".dimacs")
    if not is_dimacs:
        try:
            with open(path, "rb") as fh:
                head = fh.read(2)
        except OSError as exc:
            raise GraphFormatError(f"cannot read file ({exc.strerror})", path) from exc
        is_dimacs = head[:1] in (b"c", b"p")
    if is_dimacs:
        g = load_dimacs(path)
        if n is not None and g.n != n:
            raise GraphFormatError(f"dimension mismatch: expected {n} vertices, file declares {g.n}", path)
        return g
    return load_matrix(path, n)
