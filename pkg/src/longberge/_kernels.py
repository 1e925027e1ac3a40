"""Compiled subset-DP kernels for cycle and Berge-path queries.

Graph kernels work on adjacency bitmasks.  The hypergraph kernel tracks, for each
(vertex set, end vertex) state, only whether the last edge used is forced to one
specific edge or can be chosen from at least two.  For 3-uniform hypergraphs two
pairs of a Berge path can share an edge only when they are consecutive, so this
state is exact there; for larger r it is a relaxation (it may accept sequences
whose non-consecutive pairs compete for one edge) and callers confirm positives.
"""

from __future__ import annotations

import numpy as np
from numba import njit

EMPTY = -1
MANY = -2


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def graph_longest_cycle(adj, n, allowed):
    """Length of the longest cycle using only vertices in ``allowed`` (0 if none)."""
    best = 0
    for a in range(n):
        if not (allowed >> a) & 1:
            continue
        # local labels: vertex a + i -> i, restricted to allowed vertices >= a
        m = n - a
        ladj = np.zeros(m, dtype=np.int64)
        lallowed = 0
        for i in range(m):
            v = a + i
            if (allowed >> v) & 1:
                lallowed |= 1 << i
                ladj[i] = (adj[v] >> a) & ((1 << m) - 1)
        for i in range(m):
            ladj[i] &= lallowed
        if _popcount(lallowed) <= best:
            continue
        dp = np.zeros(1 << m, dtype=np.int64)
        dp[1] = 1
        start_nb = ladj[0]
        for S in range(1, 1 << m):
            ends = dp[S]
            if ends == 0:
                continue
            size = _popcount(S)
            if size >= 3 and (ends & start_nb) != 0 and size > best:
                best = size
            free = lallowed & ~S
            e = ends
            while e:
                u = 0
                low = e & -e
                while (low >> u) != 1:
                    u += 1
                e ^= low
                nb = ladj[u] & free
                while nb:
                    lw = nb & -nb
                    nb ^= lw
                    dp[S | lw] |= lw
    return best


@njit(cache=True)
def graph_path_lengths(adj, n, a, allowed):
    """For each vertex b, the largest vertex count of an a-b path inside ``allowed`` (0 if none)."""
    out = np.zeros(n, dtype=np.int64)
    dp = np.zeros(1 << n, dtype=np.int64)
    dp[1 << a] = 1 << a
    out[a] = 1
    for S in range(1, 1 << n):
        ends = dp[S]
        if ends == 0:
            continue
        size = _popcount(S)
        free = allowed & ~S
        e = ends
        while e:
            low = e & -e
            e ^= low
            u = 0
            while (low >> u) != 1:
                u += 1
            if size > out[u]:
                out[u] = size
            nb = adj[u] & free
            while nb:
                lw = nb & -nb
                nb ^= lw
                dp[S | lw] |= lw
    return out


@njit(cache=True)
def _step(val, c, x0, x1, emask_w_bit_of_val):
    # val: state of the last edge; c: usable edges on the new pair; x0/x1 their first ids
    if c == 0:
        return EMPTY
    if val == MANY:
        if c >= 2:
            return MANY
        return x0
    allowed = c - emask_w_bit_of_val
    if allowed >= 2:
        return MANY
    if allowed == 1:
        if emask_w_bit_of_val:
            return x1 if x0 == val else x0
        return x0
    return EMPTY


@njit(cache=True)
def berge_path_lengths(n, cnt, ids, emask, a, allowed, excluded):
    """Largest vertex count of a Berge path from ``a`` to each vertex.

    ``cnt[u, w]`` is the number of edges containing pair uw, ``ids[u, w, :3]`` the
    first three of their edge indices, ``emask[e]`` the vertex bitmask of edge e.
    Edge ``excluded`` (or -1) is treated as absent; only vertices in ``allowed``
    may appear on the path.
    """
    out = np.zeros(n, dtype=np.int64)
    st = np.full((1 << n, n), EMPTY, dtype=np.int32)
    st[1 << a, a] = MANY
    out[a] = 1
    exmask = emask[excluded] if excluded >= 0 else 0
    for S in range(1, 1 << n):
        if not (S >> a) & 1:
            continue
        size = _popcount(S)
        free = allowed & ~S
        for u in range(n):
            val = st[S, u]
            if val == EMPTY:
                continue
            if size > out[u]:
                out[u] = size
            nb = free
            while nb:
                lw = nb & -nb
                nb ^= lw
                w = 0
                while (lw >> w) != 1:
                    w += 1
                c = cnt[u, w]
                if c == 0:
                    continue
                x0 = ids[u, w, 0]
                x1 = ids[u, w, 1]
                if excluded >= 0 and ((exmask >> u) & 1) and ((exmask >> w) & 1):
                    c -= 1
                    if x0 == excluded:
                        x0 = x1
                        x1 = ids[u, w, 2]
                    elif x1 == excluded:
                        x1 = ids[u, w, 2]
                if c == 0:
                    continue
                bit = 0
                if val >= 0 and ((emask[val] >> w) & 1):
                    bit = 1
                nv = _step(val, c, x0, x1, bit)
                if nv == EMPTY:
                    continue
                T = S | lw
                cur = st[T, w]
                if cur == EMPTY:
                    st[T, w] = nv
                elif cur != MANY and (nv == MANY or nv != cur):
                    st[T, w] = MANY
    return out


@njit(cache=True)
def longest_berge_cycle_through(n, cnt, ids, emask, edge, allowed):
    """Longest Berge cycle that uses edge index ``edge`` for one of its pairs (0 if none)."""
    m = emask[edge]
    best = 0
    for a in range(n):
        if not (m >> a) & 1 or not (allowed >> a) & 1:
            continue
        lens = berge_path_lengths(n, cnt, ids, emask, a, allowed, edge)
        for b in range(a + 1, n):
            if (m >> b) & 1 and lens[b] >= 2 and lens[b] > best:
                best = lens[b]
    return best


@njit(cache=True)
def longest_berge_cycle(n, cnt, ids, emask, nedges, allowed):
    """Longest Berge cycle inside ``allowed`` (0 if none)."""
    best = 0
    for e in range(nedges):
        if (emask[e] & ~allowed) != 0:
            continue
        c = longest_berge_cycle_through(n, cnt, ids, emask, e, allowed)
        if c > best:
            best = c
    return best


@njit(cache=True)
def longest_berge_path(n, cnt, ids, emask, allowed):
    """Largest vertex count of any Berge path inside ``allowed``."""
    best = 0
    for a in range(n):
        if not (allowed >> a) & 1:
            continue
        lens = berge_path_lengths(n, cnt, ids, emask, a, allowed, -1)
        for b in range(n):
            if lens[b] > best:
                best = lens[b]
    return best


def pair_tables(n: int, edges) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Build (cnt, ids, emask) for the hypergraph kernels."""
    cnt = np.zeros((n, n), dtype=np.int64)
    ids = np.full((n, n, 3), -1, dtype=np.int64)
    emask = np.zeros(max(len(edges), 1), dtype=np.int64)
    for i, e in enumerate(edges):
        m = 0
        for v in e:
            m |= 1 << v
        emask[i] = m
        for x in range(len(e)):
            for y in range(x + 1, len(e)):
                u, w = e[x], e[y]
                c = cnt[u, w]
                if c < 3:
                    ids[u, w, c] = i
                    ids[w, u, c] = i
                cnt[u, w] = c + 1
                cnt[w, u] = c + 1
    return cnt, ids, emask


def adjacency_array(adj) -> np.ndarray:
    return np.asarray(list(adj), dtype=np.int64)
