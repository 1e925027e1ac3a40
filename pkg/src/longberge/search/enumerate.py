"""Isomorph-free enumeration of families with no long cycle, by vertex augmentation.

Every family H on n vertices with at least T edges arises from H - v, where v is a
vertex of minimum degree, by adding v back with its link.  Since deg(v) <= r|H|/n,
H - v has at least T - floor(rT/n) edges, so the levels are built bottom-up with
decreasing thresholds.  A link is grown edge by edge with three prunings:

* counting: current size plus remaining candidates must reach T;
* degree: no old vertex may end with degree below deg(v) = |link|;
* freeness: each added edge must not close a long cycle (the property is monotone,
  so a violation kills the whole subtree).

Duplicates are removed with ``canonical_form``; the canonical form doubles as the
stored representative.

Two freeness notions are supported: Berge cycles of an r-graph (``BergeChecker``,
exact for r = 3 through the compiled kernel, confirmed by exact search for r >= 4)
and ordinary cycles of the 2-shadow of a family of pairs and r-sets
(``ShadowChecker``; graphs and mixed hypergraphs).
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from .. import _kernels as K
from ..berge import BudgetExhausted, SearchBudget, has_berge_cycle_at_least
from ..hypercore import Edge, Hypergraph
from .canon import canonical_form

log = logging.getLogger(__name__)

Family = tuple[Edge, ...]


class BergeChecker:
    """Incremental pair tables for the Berge-cycle kernel."""

    def __init__(self, n: int, r: int, k: int):
        self.n, self.r, self.k = n, r, k
        cap = len(list(combinations(range(n), r))) + 1
        self.cnt = np.zeros((n, n), dtype=np.int64)
        self.ids = np.full((n, n, 3), -1, dtype=np.int64)
        self.emask = np.zeros(cap, dtype=np.int64)
        self.edges: list[Edge] = []
        self.full = (1 << n) - 1

    def push(self, e: Edge) -> None:
        i = len(self.edges)
        self.edges.append(e)
        m = 0
        for v in e:
            m |= 1 << v
        self.emask[i] = m
        cnt, ids = self.cnt, self.ids
        for a, b in combinations(e, 2):
            c = cnt[a, b]
            if c < 3:
                ids[a, b, c] = i
                ids[b, a, c] = i
            cnt[a, b] = c + 1
            cnt[b, a] = c + 1

    def pop(self) -> None:
        e = self.edges.pop()
        cnt, ids = self.cnt, self.ids
        for a, b in combinations(e, 2):
            c = cnt[a, b] - 1
            if c < 3:
                ids[a, b, c] = -1
                ids[b, a, c] = -1
            cnt[a, b] = c
            cnt[b, a] = c

    def closes_long_cycle(self) -> bool:
        """Whether the last pushed edge lies on a Berge cycle of length >= k."""
        i = len(self.edges) - 1
        got = K.longest_berge_cycle_through(self.n, self.cnt, self.ids, self.emask, i, self.full)
        if got < self.k:
            return False
        if self.r == 3:
            return True
        # the kernel over-approximates for r >= 4: confirm exactly
        return has_berge_cycle_at_least(Hypergraph(self.n, self.r, tuple(self.edges)), self.k)

    def load(self, edges: Iterable[Edge]) -> None:
        for e in edges:
            self.push(e)


class ShadowChecker:
    """Incremental 2-shadow for families of pairs and r-sets (cycles in the shadow)."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.mult = np.zeros((n, n), dtype=np.int64)
        self.adj = np.zeros(n, dtype=np.int64)
        self.stack: list[list[tuple[int, int]]] = []
        self.edges: list[Edge] = []
        self.full = (1 << n) - 1

    def push(self, e: Edge) -> None:
        fresh = []
        for a, b in combinations(e, 2):
            if self.mult[a, b] == 0:
                fresh.append((a, b))
                self.adj[a] |= 1 << b
                self.adj[b] |= 1 << a
            self.mult[a, b] += 1
        self.stack.append(fresh)
        self.edges.append(e)

    def pop(self) -> None:
        self.stack.pop()
        e = self.edges.pop()
        for a, b in combinations(e, 2):
            self.mult[a, b] -= 1
            if self.mult[a, b] == 0:
                self.adj[a] &= ~(1 << b)
                self.adj[b] &= ~(1 << a)

    def closes_long_cycle(self) -> bool:
        for a, b in self.stack[-1]:
            self.adj[a] &= ~(1 << b)
            self.adj[b] &= ~(1 << a)
            lens = K.graph_path_lengths(self.adj, self.n, a, self.full)
            self.adj[a] |= 1 << b
            self.adj[b] |= 1 << a
            if lens[b] >= self.k:
                return True
        return False

    def load(self, edges: Iterable[Edge]) -> None:
        for e in edges:
            self.push(e)


@dataclass
class EnumStats:
    nodes: int = 0
    checks: int = 0
    generated: int = 0
    level_sizes: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class Mode:
    """What is enumerated: ``sizes`` are the allowed edge sizes, ``berge`` selects
    Berge-cycle freeness (r-uniform) instead of shadow-cycle freeness."""

    sizes: tuple[int, ...]
    berge: bool

    @property
    def rmax(self) -> int:
        return max(self.sizes)

    @classmethod
    def graph(cls) -> "Mode":
        return cls((2,), False)

    @classmethod
    def hyper(cls, r: int) -> "Mode":
        return cls((r,), True)

    @classmethod
    def mixed(cls, r: int) -> "Mode":
        return cls((2, r), False)


def thresholds(n: int, target: int, rmax: int) -> dict[int, int]:
    """Minimum edge counts per level so that every n-vertex family with >= target
    edges is reached."""
    out = {n: target}
    t = target
    for j in range(n, 1, -1):
        t = max(0, t - (rmax * t) // j)
        out[j - 1] = t
    return out


class Enumerator:
    def __init__(self, k: int, mode: Mode, budget: SearchBudget | None = None):
        self.k = k
        self.mode = mode
        self.budget = budget or SearchBudget()
        self.stats = EnumStats()
        self._t0 = time.monotonic()

    def _tick(self) -> None:
        self.stats.nodes += 1
        if self.stats.nodes > self.budget.max_nodes:
            raise BudgetExhausted("node budget exhausted")
        if self.stats.nodes & 0x3FF == 0 and time.monotonic() - self._t0 > self.budget.max_seconds:
            raise BudgetExhausted("time budget exhausted")

    def _checker(self, n: int):
        if self.mode.berge:
            return BergeChecker(n, self.mode.rmax, self.k)
        return ShadowChecker(n, self.k)

    def candidates(self, n: int, base: Family) -> list[Edge]:
        """Edges through the new vertex n-1, in a fixed order (larger edges first)."""
        v = n - 1
        base_set = set(base)
        out: list[Edge] = []
        for s in sorted(self.mode.sizes, reverse=True):
            for link in combinations(range(v), s - 1):
                e = link + (v,)
                if len(self.mode.sizes) > 1 and s > 2:
                    # Sperner: an r-set may not contain an existing pair
                    if any(p in base_set for p in combinations(link, 2)):
                        continue
                out.append(e)
        return out

    def extend(self, parent: Family, n: int, threshold: int, emit: Callable[[Family], None]) -> None:
        """All families parent + link on n vertices where n-1 has minimum degree,
        size >= threshold, and no long cycle."""
        v = n - 1
        chk = self._checker(n)
        chk.load(parent)
        deg = [0] * n
        for e in parent:
            for x in e:
                deg[x] += 1
        need_link = threshold - len(parent)
        cands = []
        for e in self.candidates(n, parent):
            chk.push(e)
            self.stats.checks += 1
            bad = chk.closes_long_cycle()
            chk.pop()
            if not bad:
                cands.append(e)
        if len(cands) < need_link:
            return
        L = len(cands)
        # rem[i][u] = candidates j >= i containing u
        rem = [[0] * n for _ in range(L + 1)]
        for i in range(L - 1, -1, -1):
            row = rem[i + 1][:]
            for x in cands[i]:
                row[x] += 1
            rem[i] = row
        mixed = len(self.mode.sizes) > 1
        chosen: list[Edge] = []
        chosen_pairs: set[Edge] = set()
        degl = [0] * n

        def feasible(i: int) -> bool:
            size = len(chosen)
            if size + (L - i) < need_link:
                return False
            r_i = rem[i]
            for u in range(v):
                if deg[u] + degl[u] + r_i[u] < size:
                    return False
            return True

        def rec(i: int) -> None:
            self._tick()
            if not feasible(i):
                return
            if i == L:
                size = len(chosen)
                if size >= need_link and all(deg[u] + degl[u] >= size for u in range(v)):
                    emit(parent + tuple(chosen))
                return
            e = cands[i]
            ok = True
            if mixed:
                if len(e) == 2:
                    ok = not any(len(f) > 2 and e[0] in f for f in chosen)
                else:
                    ok = not any(p in chosen_pairs for p in combinations(e, 2))
            if ok:
                chk.push(e)
                self.stats.checks += 1
                if not chk.closes_long_cycle():
                    chosen.append(e)
                    if len(e) == 2:
                        chosen_pairs.add(e)
                    for x in e:
                        degl[x] += 1
                    rec(i + 1)
                    for x in e:
                        degl[x] -= 1
                    if len(e) == 2:
                        chosen_pairs.discard(e)
                    chosen.pop()
                chk.pop()
            rec(i + 1)

        rec(0)

    def level(self, parents: Iterable[Family], n: int, threshold: int) -> set:
        out: set = set()

        def emit(fam: Family) -> None:
            self.stats.generated += 1
            out.add(canonical_form(n, fam)[1])

        for par in parents:
            self.extend(par, n, threshold, emit)
        self.stats.level_sizes[n] = len(out)
        return out

    def run(self, n: int, target: int, keep: Callable[[int, Family], bool] | None = None) -> set:
        """Canonical representatives of all free families on n vertices with >= target edges."""
        th = thresholds(n, target, self.mode.rmax)
        fams: set = {()}
        for j in range(2, n + 1):
            fams = self.level(fams, j, th[j])
            if keep is not None:
                fams = {f for f in fams if keep(j, f)}
            log.debug("level %d: threshold %d, %d families", j, th[j], len(fams))
        return fams
