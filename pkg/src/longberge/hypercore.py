"""Core value types: uniform hypergraphs, graphs, mixed (2,r) hypergraphs and shadows.

Vertices are the integers ``0..n-1``.  Every edge is stored as a sorted tuple and
edge collections are kept in lexicographic order, so two objects built from the
same edge set compare equal regardless of input order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

Edge = tuple[int, ...]

BITSET_MAX_N = 16


class ParseError(ValueError):
    """Malformed hypergraph text; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
        self.message = message


def binom(a: int, b: int) -> int:
    """Exact binomial coefficient, zero whenever ``a < b`` or ``b < 0``."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


def _normalize(edges: Iterable[Iterable[int]], n: int, size: int | None) -> tuple[Edge, ...]:
    raw = list(edges)
    if size is not None and len(raw) > 64:
        # vectorised path; anything odd falls through to the loop for the error message
        try:
            arr = np.array(raw, dtype=np.int64)
        except ValueError:
            arr = None
        if arr is not None and arr.ndim == 2 and arr.shape[1] == size:
            arr.sort(axis=1)
            if arr.min() >= 0 and arr.max() < n and not (arr[:, 1:] == arr[:, :-1]).any():
                if n ** size < 2 ** 62:
                    keys = np.zeros(len(arr), dtype=np.int64)
                    for c in range(size):
                        keys = keys * n + arr[:, c]
                    order = np.argsort(keys, kind="stable")
                    if not (keys[order][1:] == keys[order][:-1]).any():
                        return tuple(map(tuple, arr[order].tolist()))
                else:
                    uniq = np.unique(arr, axis=0)
                    if len(uniq) == len(arr):
                        return tuple(map(tuple, uniq.tolist()))
    return _normalize_slow([tuple(sorted(e)) for e in raw], n, size)


def _normalize_slow(edges: list[Edge], n: int, size: int | None) -> tuple[Edge, ...]:
    seen: set[Edge] = set()
    for raw in edges:
        e = tuple(sorted(raw))
        if size is not None and len(e) != size:
            raise ValueError(f"edge {e} has {len(e)} vertices, expected {size}")
        if len(set(e)) != len(e):
            raise ValueError(f"edge {e} repeats a vertex")
        if e and (e[0] < 0 or e[-1] >= n):
            raise ValueError(f"edge {e} has a vertex outside [0, {n})")
        if e in seen:
            raise ValueError(f"duplicate edge {e}")
        seen.add(e)
    return tuple(sorted(seen))


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices ``0..n-1``."""

    n: int
    r: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError("uniformity must be at least 2")
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _normalize(self.edges, self.n, self.r))

    @classmethod
    def complete(cls, n: int, r: int, vertices: Sequence[int] | None = None) -> "Hypergraph":
        vs = range(n) if vertices is None else vertices
        return cls(n, r, tuple(combinations(sorted(vs), r)))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, (tuple, list, frozenset, set)):
            return False
        return tuple(sorted(e)) in self.edge_set

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def with_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        return Hypergraph(self.n, self.r, self.edges + tuple(tuple(sorted(e)) for e in extra))

    def without_edges(self, drop: Iterable[Iterable[int]]) -> "Hypergraph":
        gone = {tuple(sorted(e)) for e in drop}
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if e not in gone))

    def induced(self, vertices: Iterable[int]) -> "Hypergraph":
        """Sub-hypergraph of edges inside ``vertices`` (labels kept)."""
        vs = set(vertices)
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if vs.issuperset(e)))

    def relabel(self, perm: Sequence[int], n: int | None = None) -> "Hypergraph":
        """Apply the vertex map ``v -> perm[v]``."""
        return Hypergraph(self.n if n is None else n, self.r,
                          tuple(tuple(sorted(perm[v] for v in e)) for e in self.edges))

    def shadow_graph(self) -> "Graph":
        return Graph(self.n, shadow(self, 2).members)

    def as_graph(self) -> "Graph":
        if self.r != 2:
            raise ValueError("only a 2-uniform hypergraph is a graph")
        return Graph(self.n, self.edges)

    def to_bitset(self) -> int:
        """Edge set as an integer over the lexicographic ranks of all r-subsets."""
        if self.n > BITSET_MAX_N:
            raise ValueError(f"bitset form supports n <= {BITSET_MAX_N}")
        rank = subset_ranks(self.n, self.r)
        bits = 0
        for e in self.edges:
            bits |= 1 << rank[e]
        return bits

    @classmethod
    def from_bitset(cls, n: int, r: int, bits: int) -> "Hypergraph":
        subsets = all_subsets(n, r)
        out = []
        i = 0
        while bits:
            if bits & 1:
                out.append(subsets[i])
            bits >>= 1
            i += 1
        return cls(n, r, tuple(out))


_SUBSET_CACHE: dict[tuple[int, int], tuple[Edge, ...]] = {}
_RANK_CACHE: dict[tuple[int, int], dict[Edge, int]] = {}


def all_subsets(n: int, r: int) -> tuple[Edge, ...]:
    key = (n, r)
    if key not in _SUBSET_CACHE:
        _SUBSET_CACHE[key] = tuple(combinations(range(n), r))
    return _SUBSET_CACHE[key]


def subset_ranks(n: int, r: int) -> dict[Edge, int]:
    key = (n, r)
    if key not in _RANK_CACHE:
        _RANK_CACHE[key] = {s: i for i, s in enumerate(all_subsets(n, r))}
    return _RANK_CACHE[key]


@dataclass(frozen=True)
class Graph:
    """A simple graph on ``0..n-1``."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", _normalize(self.edges, self.n, 2))

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        n = len(adj)
        return cls(n, tuple((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(n), 2)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, tuple((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(n - 1)))

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhood bitmask per vertex."""
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adj[v] >> u & 1]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = set(vertices)
        return Graph(self.n, tuple(e for e in self.edges if e[0] in vs and e[1] in vs))

    def relabel(self, perm: Sequence[int], n: int | None = None) -> "Graph":
        return Graph(self.n if n is None else n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def compact(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` relabelled to ``0..len-1``; returns the label map too."""
        vs = sorted(vertices)
        pos = {v: i for i, v in enumerate(vs)}
        es = tuple((pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos)
        return Graph(len(vs), es), vs

    def as_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, 2, self.edges)


@dataclass(frozen=True)
class MixedHypergraph:
    """A (2,r) mixed hypergraph: graph edges ``pair_edges`` and r-edges ``hyper_edges``.

    No pair edge may lie inside a hyperedge (Sperner property).
    """

    n: int
    r: int
    pair_edges: tuple[Edge, ...]
    hyper_edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.r < 3:
            raise ValueError("mixed hypergraphs need r >= 3")
        pairs = _normalize(self.pair_edges, self.n, 2)
        hyper = _normalize(self.hyper_edges, self.n, self.r)
        object.__setattr__(self, "pair_edges", pairs)
        object.__setattr__(self, "hyper_edges", hyper)
        covered = set()
        for e in hyper:
            covered.update(combinations(e, 2))
        bad = [p for p in pairs if p in covered]
        if bad:
            raise ValueError(f"Sperner property violated: pair {bad[0]} lies inside a hyperedge")

    def __len__(self) -> int:
        return len(self.pair_edges) + len(self.hyper_edges)

    @property
    def hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, self.r, self.hyper_edges)

    def hyper_shadow(self) -> frozenset[Edge]:
        return frozenset(p for e in self.hyper_edges for p in combinations(e, 2))

    def shadow_graph(self) -> Graph:
        """The graph A ∪ ∂₂ℬ."""
        return Graph(self.n, tuple(set(self.pair_edges) | self.hyper_shadow()))


@dataclass(frozen=True)
class EdgeSetFamily:
    """A family of distinct p-element vertex sets."""

    p: int
    members: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        ms = set()
        for m in self.members:
            t = tuple(sorted(m))
            if len(t) != self.p or len(set(t)) != self.p:
                raise ValueError(f"member {m} is not a {self.p}-set")
            ms.add(t)
        object.__setattr__(self, "members", tuple(sorted(ms)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        if not isinstance(s, (tuple, list, set, frozenset)):
            return False
        return tuple(sorted(s)) in set(self.members)

    def as_hypergraph(self, n: int) -> Hypergraph:
        return Hypergraph(n, self.p, self.members)


def shadow(h: Hypergraph, p: int) -> EdgeSetFamily:
    """All p-subsets contained in at least one edge of ``h``."""
    if not 1 <= p <= h.r:
        raise ValueError(f"shadow size must satisfy 1 <= p <= r = {h.r}")
    if p == h.r:
        return EdgeSetFamily(p, h.edges)
    found: set[Edge] = set()
    for e in h.edges:
        found.update(combinations(e, p))
    return EdgeSetFamily(p, tuple(found))


def complement_shadow2(h: Hypergraph, w: int) -> EdgeSetFamily:
    """Pairs of ``[0, w)`` contained in no edge of ``h``."""
    covered = set(shadow(h, 2).members) if h.r >= 2 else set()
    return EdgeSetFamily(2, tuple(p for p in combinations(range(w), 2) if p not in covered))


# ---------------------------------------------------------------------------
# text formats

def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        yield lineno, s.split()


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"non-integer token in {' '.join(tokens)!r}") from None


def parse_hypergraph(text: str) -> Hypergraph:
    """Read the ``n r`` / one-edge-per-line format."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header 'n r'") from None
    vals = _ints(header, lineno)
    if len(vals) != 2 or vals[0] < 0 or vals[1] < 2:
        raise ParseError(lineno, "malformed header, expected 'n r' with n >= 0, r >= 2")
    n, r = vals
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, toks in lines:
        e = _ints(toks, lineno)
        if len(e) != r:
            raise ParseError(lineno, f"edge has {len(e)} vertices, expected {r}")
        for v in e:
            if not 0 <= v < n:
                raise ParseError(lineno, f"vertex id {v} out of range [0, {n})")
        t = tuple(sorted(e))
        if len(set(t)) != r:
            raise ParseError(lineno, "edge repeats a vertex")
        if t in seen:
            raise ParseError(lineno, f"duplicate edge {' '.join(map(str, t))}")
        seen.add(t)
        edges.append(t)
    return Hypergraph(n, r, tuple(edges))


def serialize_hypergraph(h: Hypergraph) -> str:
    out = [f"{h.n} {h.r}"]
    out.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(out) + "\n"


def parse_mixed(text: str) -> MixedHypergraph:
    """Read the ``n 2 r`` format with ``P u v`` and ``H v1 .. vr`` lines."""
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "missing header 'n 2 r'") from None
    vals = _ints(header, lineno)
    if len(vals) != 3 or vals[1] != 2 or vals[2] < 3 or vals[0] < 0:
        raise ParseError(lineno, "malformed header, expected 'n 2 r' with r >= 3")
    n, _, r = vals
    pairs: list[Edge] = []
    hyper: list[Edge] = []
    seen: set[Edge] = set()
    for lineno, toks in lines:
        kind, rest = toks[0], _ints(toks[1:], lineno)
        if kind == "P":
            want, target = 2, pairs
        elif kind == "H":
            want, target = r, hyper
        else:
            raise ParseError(lineno, f"unknown record type {kind!r}")
        if len(rest) != want:
            raise ParseError(lineno, f"{kind} record has {len(rest)} vertices, expected {want}")
        for v in rest:
            if not 0 <= v < n:
                raise ParseError(lineno, f"vertex id {v} out of range [0, {n})")
        t = tuple(sorted(rest))
        if len(set(t)) != want:
            raise ParseError(lineno, "edge repeats a vertex")
        if t in seen:
            raise ParseError(lineno, f"duplicate edge {' '.join(map(str, t))}")
        seen.add(t)
        target.append(t)
    try:
        return MixedHypergraph(n, r, tuple(pairs), tuple(hyper))
    except ValueError as exc:
        raise ParseError(lineno, str(exc)) from None


def serialize_mixed(m: MixedHypergraph) -> str:
    out = [f"{m.n} 2 {m.r}"]
    out.extend("P " + " ".join(map(str, e)) for e in m.pair_edges)
    out.extend("H " + " ".join(map(str, e)) for e in m.hyper_edges)
    return "\n".join(out) + "\n"
