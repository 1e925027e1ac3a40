"""Berge cycles and paths: witness checking, exact longest search, graph cycles and
lifting shadow-graph cycles back to Berge cycles."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import _kernels as K
from .hypercore import Edge, Graph, Hypergraph, MixedHypergraph
from .matching import hall_violator, max_matching
from .structure import blocks

EXACT_MAX_N = 24
EXACT_MAX_EDGES = 64
DP_MAX_N = 22


class BudgetExhausted(RuntimeError):
    pass


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = 10**8
    max_seconds: float = 3600.0

    def __post_init__(self) -> None:
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ValueError("budget limits must be positive")


@dataclass
class _Clock:
    budget: SearchBudget
    nodes: int = 0
    start: float = field(default_factory=time.monotonic)

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExhausted
        if self.nodes & 1023 == 0 and time.monotonic() - self.start > self.budget.max_seconds:
            raise BudgetExhausted


@dataclass(frozen=True)
class BergeWitness:
    kind: str  # "cycle" or "path"
    base_vertices: tuple[int, ...]
    witness_edges: tuple[Edge, ...]

    @property
    def length(self) -> int:
        return len(self.witness_edges)

    def pairs(self) -> list[tuple[int, int]]:
        vs = self.base_vertices
        if self.kind == "cycle":
            return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]

    def serialize(self) -> str:
        lines = [f"{self.kind.upper()} {self.length}", " ".join(map(str, self.base_vertices))]
        lines.extend(" ".join(map(str, e)) for e in self.witness_edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "BergeWitness":
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        kind, length = rows[0][0].lower(), int(rows[0][1])
        if kind not in ("cycle", "path"):
            raise ValueError(f"unknown witness kind {rows[0][0]!r}")
        verts = tuple(int(x) for x in rows[1])
        edges = tuple(tuple(sorted(int(x) for x in row)) for row in rows[2:])
        if len(edges) != length:
            raise ValueError(f"header says {length} edges, found {len(edges)}")
        return cls(kind, verts, edges)


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_witness(h: Hypergraph, w: BergeWitness) -> WitnessCheck:
    """Check a claimed Berge cycle/path against ``h``.

    Raises ``KeyError`` when the witness refers to an edge that is not in ``h``.
    """
    for e in w.witness_edges:
        if tuple(sorted(e)) not in h.edge_set:
            raise KeyError(f"dangling edge reference {e}")
    vs = w.base_vertices
    es = [tuple(sorted(e)) for e in w.witness_edges]
    if w.kind not in ("cycle", "path"):
        return WitnessCheck(False, f"unknown kind {w.kind!r}")
    if len(set(vs)) != len(vs):
        return WitnessCheck(False, "duplicate base vertex")
    if len(set(es)) != len(es):
        return WitnessCheck(False, "duplicate witness edge")
    if w.kind == "cycle":
        if len(vs) < 2 or len(es) != len(vs):
            return WitnessCheck(False, "a cycle needs as many edges as base vertices (at least 2)")
    elif len(es) != len(vs) - 1 or not es:
        return WitnessCheck(False, "a path needs one edge fewer than base vertices")
    for i, (a, b) in enumerate(w.pairs()):
        if a not in es[i] or b not in es[i]:
            return WitnessCheck(False, f"containment fails at position {i + 1}")
    return WitnessCheck(True)


def assign_edges(h: Hypergraph, pairs: Sequence[tuple[int, int]],
                 forbidden: Sequence[Edge] = ()) -> list[Edge] | None:
    """Distinct edges of ``h`` containing the given pairs, or None if impossible."""
    ban = set(forbidden)
    options = {i: [e for e in h.edges if a in e and b in e and e not in ban]
               for i, (a, b) in enumerate(pairs)}
    m = max_matching(list(range(len(pairs))), options)
    if len(m) < len(pairs):
        return None
    return [m[i] for i in range(len(pairs))]


# ---------------------------------------------------------------------------
# exact search

@dataclass(frozen=True)
class BergeSearchResult:
    witness: BergeWitness | None
    length: int
    exact: bool
    nodes: int

    @property
    def exhausted(self) -> bool:
        return not self.exact


class _BergeDFS:
    """Depth-first search over base-vertex sequences with an incrementally
    maintained system of distinct edges for the consecutive pairs."""

    def __init__(self, h: Hypergraph, clock: _Clock):
        self.h = h
        self.clock = clock
        n = h.n
        self.pair_edges: dict[tuple[int, int], list[int]] = {}
        nb = [0] * n
        for i, e in enumerate(h.edges):
            for x in range(len(e)):
                for y in range(x + 1, len(e)):
                    u, v = e[x], e[y]
                    self.pair_edges.setdefault((u, v), []).append(i)
                    self.pair_edges.setdefault((v, u), []).append(i)
                    nb[u] |= 1 << v
                    nb[v] |= 1 << u
        self.nb = nb
        self.owner: dict[int, int] = {}
        self.match: list[int] = []
        self.pairs: list[tuple[int, int]] = []

    def _augment(self, j: int, seen: set[int]) -> bool:
        for e in self.pair_edges.get(self.pairs[j], ()):
            if e in seen:
                continue
            seen.add(e)
            o = self.owner.get(e)
            if o is None or self._augment(o, seen):
                self.owner[e] = j
                self.match[j] = e
                return True
        return False

    def push(self, a: int, b: int) -> bool:
        self.pairs.append((a, b))
        self.match.append(-1)
        if self._augment(len(self.pairs) - 1, set()):
            return True
        self.pairs.pop()
        self.match.pop()
        return False

    def pop(self) -> None:
        e = self.match.pop()
        del self.owner[e]
        self.pairs.pop()

    def edges_used(self) -> tuple[Edge, ...]:
        return tuple(self.h.edges[e] for e in self.match)

    def reach(self, v: int, free: int) -> int:
        seen = 0
        frontier = self.nb[v] & free
        while frontier:
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= self.nb[low.bit_length() - 1]
            frontier = nxt & free & ~seen
        return seen

    def cycles(self, allowed: int, upper: int, floor: int = 0) -> tuple[int, tuple[int, ...], tuple[Edge, ...]]:
        """Longest cycle inside ``allowed``, stopping once ``upper`` is reached.

        With ``floor`` > 0 only cycles of length >= floor are sought (shorter ones may
        be missed), which prunes much harder.
        """
        best = [0, (), ()]

        def rec(seq: list[int], free: int) -> bool:
            self.clock.tick()
            a, u = seq[0], seq[-1]
            if len(seq) >= 2 and len(seq) > best[0] and self.nb[u] >> a & 1:
                if self.push(u, a):
                    best[0], best[1], best[2] = len(seq), tuple(seq), self.edges_used()
                    self.pop()
                    if best[0] >= upper:
                        return True
            r = self.reach(u, free)
            if len(seq) + r.bit_count() <= max(best[0], floor - 1):
                return False
            cand = self.nb[u] & free
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                if self.push(u, w):
                    seq.append(w)
                    done = rec(seq, free & ~low)
                    seq.pop()
                    self.pop()
                    if done:
                        return True
            return False

        vs = allowed
        while vs:
            low = vs & -vs
            vs ^= low
            a = low.bit_length() - 1
            higher = allowed & ~((low << 1) - 1)
            if 1 + higher.bit_count() <= max(best[0], floor - 1):
                break
            if rec([a], higher):
                break
        return best[0], best[1], best[2]

    def paths(self, allowed: int, upper: int) -> tuple[int, tuple[int, ...], tuple[Edge, ...]]:
        best = [0, (), ()]  # length counted in edges

        def rec(seq: list[int], free: int) -> bool:
            self.clock.tick()
            if len(seq) - 1 > best[0]:
                best[0], best[1], best[2] = len(seq) - 1, tuple(seq), self.edges_used()
                if best[0] >= upper:
                    return True
            u = seq[-1]
            r = self.reach(u, free)
            if len(seq) - 1 + r.bit_count() <= best[0]:
                return False
            cand = self.nb[u] & free
            while cand:
                low = cand & -cand
                cand ^= low
                w = low.bit_length() - 1
                if self.push(u, w):
                    seq.append(w)
                    done = rec(seq, free & ~low)
                    seq.pop()
                    self.pop()
                    if done:
                        return True
            return False

        vs = allowed
        while vs:
            low = vs & -vs
            vs ^= low
            a = low.bit_length() - 1
            if rec([a], allowed & ~low):
                break
        return best[0], best[1], best[2]


def _kernel_tables(h: Hypergraph):
    return K.pair_tables(h.n, h.edges)


def dp_longest_cycle(h: Hypergraph, allowed: int | None = None) -> int:
    """Longest Berge cycle length from the compiled DP (exact for r = 3, an upper
    bound for larger r)."""
    if h.n > DP_MAX_N:
        raise InstanceTooLarge("DP kernel supports at most 22 vertices")
    if not h.edges:
        return 0
    cnt, ids, emask = _kernel_tables(h)
    mask = (1 << h.n) - 1 if allowed is None else allowed
    return int(K.longest_berge_cycle(h.n, cnt, ids, emask, len(h.edges), mask))


def dp_longest_path(h: Hypergraph) -> int:
    """Longest Berge path length (edges) from the compiled DP; exact for r = 3."""
    if not h.edges:
        return 0
    cnt, ids, emask = _kernel_tables(h)
    return int(K.longest_berge_path(h.n, cnt, ids, emask, (1 << h.n) - 1)) - 1


def longest_berge(h: Hypergraph, kind: str = "cycle", budget: SearchBudget | None = None,
                  force: bool = False) -> BergeSearchResult:
    """Maximum Berge cycle or path, lexicographically smallest base sequence on ties.

    Cycles are searched inside each block of the 2-shadow separately.  When the
    budget runs out the best witness found so far is returned with ``exact=False``.
    """
    if kind not in ("cycle", "path"):
        raise ValueError("kind must be 'cycle' or 'path'")
    if not force and (h.n > EXACT_MAX_N or len(h) > EXACT_MAX_EDGES):
        raise InstanceTooLarge(
            f"exact search refuses n > {EXACT_MAX_N} or more than {EXACT_MAX_EDGES} edges without force")
    clock = _Clock(budget or SearchBudget())
    dfs = _BergeDFS(h, clock)
    best_len, best_seq, best_edges = 0, (), ()
    exact = True
    try:
        if kind == "cycle":
            bd = blocks(h.shadow_graph())
            order = sorted(range(len(bd.blocks)), key=lambda i: bd.blocks[i])
            for i in order:
                vs = bd.blocks[i]
                mask = 0
                for v in vs:
                    mask |= 1 << v
                inside = [e for e in h.edges if all(mask >> v & 1 for v in e)]
                upper = min(len(vs), len(inside))
                if h.r == 3 and len(vs) <= 16 and len(inside) <= 400:
                    upper = min(upper, dp_longest_cycle(h, mask))
                if upper < 2 or upper < best_len:
                    continue
                length, seq, es = dfs.cycles(mask, upper)
                if length > best_len or (length == best_len and length and seq < best_seq):
                    best_len, best_seq, best_edges = length, seq, es
        else:
            upper = min(h.n - 1, len(h))
            if h.r == 3 and h.n <= 16:
                upper = min(upper, dp_longest_path(h))
            if upper > 0:
                best_len, best_seq, best_edges = dfs.paths((1 << h.n) - 1, upper)
    except BudgetExhausted:
        exact = False
    witness = BergeWitness(kind, best_seq, best_edges) if best_len > 0 else None
    if witness is not None:
        check = verify_witness(h, witness)
        assert check.ok, check.reason
    return BergeSearchResult(witness, best_len, exact, clock.nodes)


def has_berge_cycle_at_least(h: Hypergraph, k: int) -> bool:
    """True iff ``h`` contains a Berge cycle of length >= k."""
    if h.r == 3 and h.n <= DP_MAX_N:
        return dp_longest_cycle(h) >= k
    bd = blocks(h.shadow_graph())
    for vs in bd.blocks:
        if len(vs) < k:
            continue
        mask = sum(1 << v for v in vs)
        inside = [e for e in h.edges if all(mask >> v & 1 for v in e)]
        if len(inside) < k:
            continue
        if h.n <= DP_MAX_N and dp_longest_cycle(h, mask) < k:
            continue
        dfs = _BergeDFS(h, _Clock(SearchBudget()))
        if dfs.cycles(mask, k, floor=k)[0] >= k:
            return True
    return False


def find_berge_cycle_at_least(h: Hypergraph, k: int,
                              budget: SearchBudget | None = None) -> BergeWitness | None:
    """Some Berge cycle of length >= k (not necessarily longest), or None."""
    clock = _Clock(budget or SearchBudget())
    bd = blocks(h.shadow_graph())
    for vs in bd.blocks:
        if len(vs) < k:
            continue
        mask = sum(1 << v for v in vs)
        dfs = _BergeDFS(h, clock)
        length, seq, es = dfs.cycles(mask, k, floor=k)
        if length >= k:
            w = BergeWitness("cycle", seq, es)
            assert verify_witness(h, w).ok
            return w
    return None


# ---------------------------------------------------------------------------
# graphs

@dataclass(frozen=True)
class GraphCycleResult:
    length: int
    witness: BergeWitness | None
    exact: bool


def _graph_cycle_dfs(g: Graph, allowed: int, target: int, clock: _Clock) -> tuple[int, ...] | None:
    """Lexicographically first cycle with exactly ``target`` vertices inside ``allowed``."""
    adj = g.adj

    def reach(v: int, free: int) -> int:
        seen = 0
        frontier = adj[v] & free
        while frontier:
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                f ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & free & ~seen
        return seen

    def rec(seq: list[int], free: int) -> tuple[int, ...] | None:
        clock.tick()
        a, u = seq[0], seq[-1]
        if len(seq) == target:
            return tuple(seq) if adj[u] >> a & 1 else None
        if len(seq) + reach(u, free).bit_count() < target:
            return None
        cand = adj[u] & free
        while cand:
            low = cand & -cand
            cand ^= low
            seq.append(low.bit_length() - 1)
            got = rec(seq, free & ~low)
            seq.pop()
            if got:
                return got
        return None

    vs = allowed
    while vs:
        low = vs & -vs
        vs ^= low
        higher = allowed & ~((low << 1) - 1)
        got = rec([low.bit_length() - 1], higher)
        if got:
            return got
    return None


def longest_graph_cycle(g: Graph, budget: SearchBudget | None = None) -> GraphCycleResult:
    """Exact circumference (0 for forests) with a lexicographically first witness."""
    if isinstance(g, Hypergraph):
        g = g.as_graph()
    clock = _Clock(budget or SearchBudget())
    bd = blocks(g)
    best, best_seq = 0, None
    exact = True
    adj = K.adjacency_array(g.adj)
    try:
        for vs in bd.blocks:
            if len(vs) < 3 or len(vs) < best:
                continue
            mask = sum(1 << v for v in vs)
            if len(vs) <= DP_MAX_N:
                length = int(K.graph_longest_cycle(adj, g.n, mask))
            else:
                length = _graph_circumference_dfs(g, mask, clock)
            if length == 0:
                continue
            seq = _graph_cycle_dfs(g, mask, length, clock)
            if length > best or (length == best and seq < best_seq):
                best, best_seq = length, seq
    except BudgetExhausted:
        exact = False
    if best_seq is None:
        return GraphCycleResult(0, None, exact)
    es = tuple(tuple(sorted((best_seq[i], best_seq[(i + 1) % best]))) for i in range(best))
    return GraphCycleResult(best, BergeWitness("cycle", best_seq, es), exact)


def _graph_circumference_dfs(g: Graph, mask: int, clock: _Clock) -> int:
    for target in range(mask.bit_count(), 2, -1):
        if _graph_cycle_dfs(g, mask, target, clock):
            return target
    return 0


def graph_has_cycle_at_least(g: Graph, k: int) -> bool:
    adj = K.adjacency_array(g.adj)
    for vs in blocks(g).blocks:
        if len(vs) >= k and K.graph_longest_cycle(adj, g.n, sum(1 << v for v in vs)) >= k:
            return True
    return False


# ---------------------------------------------------------------------------
# lifting

class HallViolation(ValueError):
    """Matching the cycle's shadow pairs to distinct hyperedges is impossible."""

    def __init__(self, pairs: list[Edge], edges: list[Edge]):
        super().__init__(f"Hall condition fails: {len(pairs)} pairs covered by only {len(edges)} hyperedges")
        self.pairs = pairs
        self.edges = edges


def lift_to_berge(m: MixedHypergraph, sdrp_pairs: Mapping[Edge, Edge],
                  graph_cycle: Sequence[int]) -> BergeWitness:
    """Turn a cycle of A ∪ ∂₂ℬ into a Berge cycle of A-representatives ∪ ℬ on the same vertices.

    A-edges map to their representative hyperedges; the remaining pairs are matched
    to distinct ℬ-edges containing them.
    """
    reps = {tuple(sorted(p)): tuple(sorted(f)) for p, f in sdrp_pairs.items()}
    ell = len(graph_cycle)
    if ell < 3 or len(set(graph_cycle)) != ell:
        raise ValueError("graph cycle needs at least 3 distinct vertices")
    pairs = [tuple(sorted((graph_cycle[i], graph_cycle[(i + 1) % ell]))) for i in range(ell)]
    apairs = set(m.pair_edges)
    hyper = m.hyper_edges
    chosen: list[Edge | None] = [None] * ell
    bpos: list[int] = []
    for i, p in enumerate(pairs):
        if p in apairs:
            if p not in reps:
                raise ValueError(f"A-edge {p} has no representative")
            chosen[i] = reps[p]
        else:
            bpos.append(i)
    options = {i: [f for f in hyper if pairs[i][0] in f and pairs[i][1] in f] for i in bpos}
    match = max_matching(bpos, options)
    if len(match) < len(bpos):
        bad = hall_violator(bpos, options, match)
        covering = sorted({f for i in bad for f in options[i]})
        raise HallViolation([pairs[i] for i in bad], covering)
    for i in bpos:
        chosen[i] = match[i]
    w = BergeWitness("cycle", tuple(graph_cycle), tuple(chosen))  # type: ignore[arg-type]
    full = Hypergraph(m.n, m.r, tuple(set(hyper) | set(reps.values())))
    check = verify_witness(full, w)
    if not check.ok:
        raise ValueError(f"lifted cycle failed verification: {check.reason}")
    return w
