"""Graph-structural tools: blocks, cores, the Kopylov set, hamilton-connectivity,
the pair-shadow inequality and the fractional Kruskal-Katona shadow bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import _kernels as K
from .hypercore import Edge, Graph, Hypergraph, binom, complement_shadow2

HAMCON_MAX_N = 12


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    block_edges: tuple[tuple[Edge, ...], ...]
    cut_vertices: frozenset[int]

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def block_of_edge(self) -> dict[Edge, int]:
        return {e: i for i, es in enumerate(self.block_edges) for e in es}


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected components (bridges count as 2-vertex blocks) via Hopcroft-Tarjan."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    timer = 0
    edge_stack: list[Edge] = []
    comps: list[set[Edge]] = []
    cuts: set[int] = set()

    for root in range(n):
        if disc[root] != -1 or not nbrs[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((min(v, w), max(v, w)))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((min(v, w), max(v, w)))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cuts.add(parent)
                comp: set[Edge] = set()
                target = (min(parent, v), max(parent, v))
                while edge_stack:
                    e = edge_stack.pop()
                    comp.add(e)
                    if e == target:
                        break
                comps.append(comp)
        if root_children > 1:
            cuts.add(root)

    rows = []
    for comp in comps:
        vs = tuple(sorted({v for e in comp for v in e}))
        rows.append((vs, tuple(sorted(comp))))
    rows.sort()
    return BlockDecomposition(tuple(r[0] for r in rows), tuple(r[1] for r in rows), frozenset(cuts))


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        return False
    bd = blocks(g)
    return len(bd.blocks) == 1 and len(bd.blocks[0]) == g.n


@dataclass(frozen=True)
class CoreResult:
    surviving: frozenset[int]
    removal_order: tuple[tuple[int, int], ...]


def core(g: Graph, alpha: int, priority: Sequence[int] | None = None) -> CoreResult:
    """alpha-disintegration: delete vertices of degree <= alpha until none is left.

    Among deletable vertices the one earliest in ``priority`` (default: smallest
    label) goes first; the surviving set does not depend on this choice.
    """
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    rank = list(range(g.n)) if priority is None else _ranks(priority, g.n)
    alive = set(range(g.n))
    deg = g.degrees()
    adj = g.adj
    order: list[tuple[int, int]] = []
    while True:
        ready = [v for v in alive if deg[v] <= alpha]
        if not ready:
            break
        v = min(ready, key=rank.__getitem__)
        order.append((v, deg[v]))
        alive.remove(v)
        for u in alive:
            if adj[v] >> u & 1:
                deg[u] -= 1
    return CoreResult(frozenset(alive), tuple(order))


def _ranks(priority: Sequence[int], n: int) -> list[int]:
    if sorted(priority) != list(range(n)):
        raise ValueError("priority must be a permutation of the vertices")
    rank = [0] * n
    for i, v in enumerate(priority):
        rank[v] = i
    return rank


class KopylovError(ValueError):
    """Input outside the hypotheses of the Kopylov set theorem."""

    def __init__(self, message: str, cycle: tuple[int, ...] | None = None):
        super().__init__(message)
        self.cycle = cycle


@dataclass(frozen=True)
class KopylovSet:
    s: int
    S: tuple[int, ...]
    disintegration: CoreResult


def find_kopylov_set(g: Graph, k: int) -> KopylovSet | None:
    """Find s in [k-t, k-2] and an s-set S whose complement a (k-s)-disintegration removes.

    Returns None if no s works, which on a valid input would contradict Kopylov's
    theorem.
    """
    from .berge import longest_graph_cycle

    if k < 5:
        raise KopylovError("k must be at least 5")
    if not is_two_connected(g):
        raise KopylovError("graph is not 2-connected")
    if g.n < k:
        raise KopylovError(f"n < k ({g.n} < {k})")
    res = longest_graph_cycle(g)
    if res.length >= k:
        raise KopylovError(f"contains cycle of length {res.length}", res.witness.base_vertices)
    t = (k - 1) // 2
    for s in range(k - 2, k - t - 1, -1):
        cr = core(g, k - s)
        if len(cr.surviving) <= s:
            pad = [v for v, _ in reversed(cr.removal_order)][: s - len(cr.surviving)]
            return KopylovSet(s, tuple(sorted(set(cr.surviving) | set(pad))), cr)
    return None


@dataclass(frozen=True)
class HamiltonConnectivity:
    connected: bool
    exception_shape: bool
    failing_pair: tuple[int, int] | None = None


def is_exception_shape(g: Graph) -> bool:
    """K_{n-1} plus one vertex of degree 2."""
    n = g.n
    if n < 3:
        return False
    deg = g.degrees()
    full = (1 << n) - 1
    for v in range(n):
        if deg[v] != 2:
            continue
        rest = full & ~(1 << v)
        if all((g.adj[u] | 1 << u | 1 << v) & rest == rest for u in range(n) if u != v):
            return True
    return False


def is_hamilton_connected(g: Graph, force: bool = False) -> HamiltonConnectivity:
    """Exhaustive test that every vertex pair is joined by a spanning path."""
    if g.n > HAMCON_MAX_N and not force:
        raise ValueError(f"hamilton-connectivity search refuses n > {HAMCON_MAX_N} without force")
    shape = is_exception_shape(g)
    n = g.n
    if n <= 1:
        return HamiltonConnectivity(True, shape)
    adj = K.adjacency_array(g.adj)
    full = (1 << n) - 1
    for x in range(n):
        lens = K.graph_path_lengths(adj, n, x, full)
        for y in range(x + 1, n):
            if lens[y] != n:
                return HamiltonConnectivity(False, shape, (x, y))
    return HamiltonConnectivity(True, shape)


@dataclass(frozen=True)
class ShadowInequality:
    lhs: int
    rhs: int
    holds: bool
    equality: str | None  # None, "complete-hypergraph", "complete-complement" or "other"


def shadow_inequality_check(h: Hypergraph, w: int) -> ShadowInequality:
    """Check |H| + |pairs outside the 2-shadow| against C(w,2) / C(w,r)."""
    if w < 2:
        raise ValueError("w must be at least 2")
    if any(e[-1] >= w for e in h.edges):
        raise ValueError("hypergraph does not live on [0, w)")
    r = h.r
    lhs = len(h) + len(complement_shadow2(h, w))
    rhs = binom(w, 2) if w <= r + 2 else binom(w, r)
    equality = None
    if lhs == rhs:
        if len(h) == binom(w, r) and len(h) > 0:
            equality = "complete-hypergraph"
        elif len(h) == 0:
            equality = "complete-complement"
        else:
            equality = "other"
    return ShadowInequality(lhs, rhs, lhs <= rhs, equality)


def real_binom(x: float, r: int) -> float:
    """x(x-1)...(x-r+1)/r! for x >= r-1, else 0."""
    if x < r - 1:
        return 0.0
    p = 1.0
    for i in range(r):
        p *= x - i
    return p / math.factorial(r)


def kk_fractional_bound(b: int, r: int, tol: float = 1e-9, max_iter: int = 200) -> float:
    """Lovász-form lower bound C(x,2) on the 2-shadow of b r-sets, where C(x,r) = b."""
    if b < 0 or r < 2:
        raise ValueError("need b >= 0 and r >= 2")
    if b == 0:
        return 0.0
    lo, hi = float(r - 1), float(r)
    while real_binom(hi, r) < b:
        lo, hi = hi, hi * 2
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if real_binom(mid, r) < b:
            lo = mid
        else:
            hi = mid
    x = (lo + hi) / 2
    if abs(x - round(x)) < 1e-7:
        x = float(round(x))
    return x * (x - 1) / 2


def min_shadow_size(b: int, r: int, w: int) -> int:
    """Brute-force minimum 2-shadow over all b-edge r-graphs on w vertices."""
    cands = list(combinations(range(w), r))
    if b > len(cands):
        raise ValueError("not enough r-sets")
    if b == 0:
        return 0
    pmask = {}
    idx = {p: i for i, p in enumerate(combinations(range(w), 2))}
    for e in cands:
        m = 0
        for p in combinations(e, 2):
            m |= 1 << idx[p]
        pmask[e] = m
    first = cands[0]
    rest = [pmask[e] for e in cands[1:]]
    best = None
    # every b-family is isomorphic to one containing the first r-set
    for combo in combinations(rest, b - 1):
        m = pmask[first]
        for x in combo:
            m |= x
        c = m.bit_count()
        if best is None or c < best:
            best = c
    return best
