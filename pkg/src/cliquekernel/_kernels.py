"""numba kernels for the dominance rules.

Each rule has three entry points:

* ``*_sweep``: one eager serial sweep that deletes in place as it scans;
* ``*_scan``: read-only scan of one worker's share of the candidate space,
  returning deletion proposals with the first witness found;
* ``*_apply``: re-checks proposals (already sorted by the caller) against
  the current matrix and applies those that still hold.

Kernels take the raw ``adj``/``active`` arrays of a :class:`Graph` and
return ``(deleted_edges, deleted_vertices)`` when they mutate, so the caller
can charge the graph's counters.
"""
import numpy as np
from numba import njit

from .bits import ONE, ZERO, bit, ctz, first_bit, has_bit, is_subset, lowbit

_OPTS = dict(cache=True, nogil=True)


@njit(**_OPTS)
def _grow(buf):
    out = np.empty((buf.shape[0] * 2, buf.shape[1]), dtype=buf.dtype)
    out[: buf.shape[0]] = buf
    return out


@njit(**_OPTS)
def _drop_vertex(adj, active, a):
    deg = 0
    row = adj[a]
    for i in range(row.shape[0]):
        x = row[i]
        while x != ZERO:
            low = lowbit(x)
            x ^= low
            u = i * 64 + ctz(low)
            adj[u, a >> 6] &= ~bit(a)
            deg += 1
        row[i] = ZERO
    active[a >> 6] &= ~bit(a)
    return deg


@njit(**_OPTS)
def _drop_edge(adj, u, v):
    adj[u, v >> 6] &= ~bit(v)
    adj[v, u >> 6] &= ~bit(u)


# ---------------------------------------------------------------------------
# vertex dominance: b dominates a when a, b are non-adjacent and N(a) <= N(b);
# equal neighbourhoods only let the lower index dominate the higher one.


@njit(**_OPTS)
def _dominated_by(adj, a, b):
    ra = adj[a]
    rb = adj[b]
    equal = True
    for i in range(ra.shape[0]):
        if ra[i] & ~rb[i] != ZERO:
            return False
        if ra[i] != rb[i]:
            equal = False
    return not (equal and b > a)


@njit(**_OPTS)
def _vertex_witness(adj, active, a, cand):
    row = adj[a]
    s0 = first_bit(row)
    for i in range(row.shape[0]):
        c = active[i] & ~row[i]
        if s0 >= 0:
            c &= adj[s0, i]
        cand[i] = c
    cand[a >> 6] &= ~bit(a)
    for i in range(cand.shape[0]):
        x = cand[i]
        while x != ZERO:
            low = lowbit(x)
            x ^= low
            b = i * 64 + ctz(low)
            if _dominated_by(adj, a, b):
                return b
    return -1


@njit(**_OPTS)
def vertex_sweep(adj, active):
    n = adj.shape[0]
    cand = np.empty(active.shape[0], dtype=np.uint64)
    de = 0
    dv = 0
    for a in range(n):
        if not has_bit(active, a):
            continue
        if _vertex_witness(adj, active, a, cand) >= 0:
            de += _drop_vertex(adj, active, a)
            dv += 1
    return de, dv


@njit(**_OPTS)
def vertex_scan(adj, active, lo, hi):
    cand = np.empty(active.shape[0], dtype=np.uint64)
    out = np.empty((max(hi - lo, 1), 2), dtype=np.int64)
    k = 0
    for a in range(lo, hi):
        if not has_bit(active, a):
            continue
        b = _vertex_witness(adj, active, a, cand)
        if b >= 0:
            out[k, 0] = a
            out[k, 1] = b
            k += 1
    return out[:k]


@njit(**_OPTS)
def vertex_apply(adj, active, props):
    de = 0
    dv = 0
    for j in range(props.shape[0]):
        a = props[j, 0]
        b = props[j, 1]
        if not (has_bit(active, a) and has_bit(active, b)) or has_bit(adj[a], b):
            continue
        if _dominated_by(adj, a, b):
            de += _drop_vertex(adj, active, a)
            dv += 1
    return de, dv


# ---------------------------------------------------------------------------
# shared-endpoint edge dominance: {u,b} dominates {a,u} when b != a,
# {u,b} is an edge, b is not adjacent to a and N(a) & N(u) <= N(b).


@njit(**_OPTS)
def _shared_witness(adj, a, u, cn, cand):
    ra = adj[a]
    ru = adj[u]
    for i in range(ra.shape[0]):
        cn[i] = ra[i] & ru[i]
    s0 = first_bit(cn)
    for i in range(ra.shape[0]):
        c = ru[i] & ~ra[i]
        if s0 >= 0:
            c &= adj[s0, i]
        cand[i] = c
    cand[a >> 6] &= ~bit(a)
    for i in range(cand.shape[0]):
        x = cand[i]
        while x != ZERO:
            low = lowbit(x)
            x ^= low
            b = i * 64 + ctz(low)
            if is_subset(cn, adj[b]):
                return b
    return -1


@njit(**_OPTS)
def shared_sweep(adj, active):
    n = adj.shape[0]
    w = active.shape[0]
    cn = np.empty(w, dtype=np.uint64)
    cand = np.empty(w, dtype=np.uint64)
    row = np.empty(w, dtype=np.uint64)
    de = 0
    for a in range(n):
        if not has_bit(active, a):
            continue
        row[:] = adj[a]
        for i in range(w):
            x = row[i]
            while x != ZERO:
                low = lowbit(x)
                x ^= low
                u = i * 64 + ctz(low)
                if _shared_witness(adj, a, u, cn, cand) >= 0:
                    _drop_edge(adj, a, u)
                    de += 1
    return de, 0


@njit(**_OPTS)
def shared_scan(adj, active, lo, hi):
    w = active.shape[0]
    cn = np.empty(w, dtype=np.uint64)
    cand = np.empty(w, dtype=np.uint64)
    out = np.empty((1024, 3), dtype=np.int64)
    k = 0
    for a in range(lo, hi):
        if not has_bit(active, a):
            continue
        row = adj[a]
        for i in range(w):
            x = row[i]
            while x != ZERO:
                low = lowbit(x)
                x ^= low
                u = i * 64 + ctz(low)
                b = _shared_witness(adj, a, u, cn, cand)
                if b >= 0:
                    if k == out.shape[0]:
                        out = _grow(out)
                    out[k, 0] = a
                    out[k, 1] = u
                    out[k, 2] = b
                    k += 1
    return out[:k]


@njit(**_OPTS)
def shared_apply(adj, active, props):
    w = active.shape[0]
    cn = np.empty(w, dtype=np.uint64)
    de = 0
    for j in range(props.shape[0]):
        a = props[j, 0]
        u = props[j, 1]
        b = props[j, 2]
        if b == a or b == u or not has_bit(adj[a], u) or not has_bit(adj[u], b) or has_bit(adj[a], b):
            continue
        for i in range(w):
            cn[i] = adj[a, i] & adj[u, i]
        if is_subset(cn, adj[b]):
            _drop_edge(adj, a, u)
            de += 1
    return de, 0


# ---------------------------------------------------------------------------
# disjoint edge dominance: {u,v} dominates {x,y} (four distinct vertices)
# when neither u nor v is a common neighbour of x and y and
# N(x) & N(y) <= N(u) & N(v).  Witnesses are searched in lexicographic order
# of the 4-tuple (x, y, u, v); rank bounds restrict the (u, v) part to a
# worker's slice of the tuple index space.


@njit(**_OPTS)
def _disjoint_witness(adj, active, x, y, s, wset, r_lo, r_hi):
    n = adj.shape[0]
    w = active.shape[0]
    rx = adj[x]
    ry = adj[y]
    for i in range(w):
        s[i] = rx[i] & ry[i]
    s0 = first_bit(s)
    for i in range(w):
        c = active[i] & ~s[i]
        if s0 >= 0:
            c &= adj[s0, i]
        wset[i] = c
    wset[x >> 6] &= ~bit(x)
    wset[y >> 6] &= ~bit(y)
    # keep only vertices adjacent to every common neighbour of x and y
    for i in range(w):
        c = wset[i]
        while c != ZERO:
            low = lowbit(c)
            c ^= low
            if not is_subset(s, adj[i * 64 + ctz(low)]):
                wset[i] &= ~low
    for i in range(w):
        c = wset[i]
        while c != ZERO:
            low = lowbit(c)
            c ^= low
            u = i * 64 + ctz(low)
            up = u - (u > x) - (u > y)
            ru = adj[u]
            for j in range(w):
                nb = ru[j] & wset[j]
                while nb != ZERO:
                    lv = lowbit(nb)
                    nb ^= lv
                    v = j * 64 + ctz(lv)
                    vp = v - (v > x) - (v > y) - (v > u)
                    r = up * (n - 3) + vp
                    if r < r_lo:
                        continue
                    if r >= r_hi:
                        return -1, -1
                    return u, v
    return -1, -1


@njit(**_OPTS)
def disjoint_sweep(adj, active):
    # Edges are visited in descending order so that of two edges dominating
    # each other the larger one is deleted, as in the snapshot merge.
    n = adj.shape[0]
    w = active.shape[0]
    s = np.empty(w, dtype=np.uint64)
    wset = np.empty(w, dtype=np.uint64)
    block = (n - 2) * (n - 3)
    de = 0
    for x in range(n - 1, -1, -1):
        if not has_bit(active, x):
            continue
        for y in range(n - 1, x, -1):
            if not has_bit(adj[x], y):
                continue
            u, v = _disjoint_witness(adj, active, x, y, s, wset, 0, block)
            if u >= 0:
                _drop_edge(adj, x, y)
                de += 1
    return de, 0


@njit(**_OPTS)
def disjoint_scan(adj, active, lo, hi, p_first, p_last):
    """Proposals for the 4-tuples with lexicographic rank in ``[lo, hi)``.

    ``p_first``/``p_last`` are the ranks of the leading pairs ``(x, y)`` of
    the first and last tuple in the slice.
    """
    n = adj.shape[0]
    w = active.shape[0]
    s = np.empty(w, dtype=np.uint64)
    wset = np.empty(w, dtype=np.uint64)
    out = np.empty((1024, 4), dtype=np.int64)
    k = 0
    block = (n - 2) * (n - 3)
    for p in range(p_first, p_last + 1):
        x = p // (n - 1)
        t = p % (n - 1)
        y = t if t < x else t + 1
        if x > y or not has_bit(adj[x], y):
            continue
        base = p * block
        r_lo = max(lo - base, 0)
        r_hi = min(hi - base, block)
        u, v = _disjoint_witness(adj, active, x, y, s, wset, r_lo, r_hi)
        if u >= 0:
            if k == out.shape[0]:
                out = _grow(out)
            out[k, 0] = x
            out[k, 1] = y
            out[k, 2] = u
            out[k, 3] = v
            k += 1
    return out[:k]


@njit(**_OPTS)
def disjoint_apply(adj, active, props):
    w = active.shape[0]
    de = 0
    for j in range(props.shape[0]):
        x = props[j, 0]
        y = props[j, 1]
        u = props[j, 2]
        v = props[j, 3]
        if u == x or u == y or v == x or v == y or u == v:
            continue
        if not has_bit(adj[x], y) or not has_bit(adj[u], v):
            continue
        if has_bit(adj[u], x) and has_bit(adj[u], y):
            continue
        if has_bit(adj[v], x) and has_bit(adj[v], y):
            continue
        ok = True
        for i in range(w):
            if (adj[x, i] & adj[y, i]) & ~(adj[u, i] & adj[v, i]) != ZERO:
                ok = False
                break
        if ok:
            _drop_edge(adj, x, y)
            de += 1
    return de, 0
