"""Systems of distinct representative pairs (SDRP) and the strict Hall property of
their residual.

An SDRP of H is a list of distinct pairs x_i y_i with distinct representative edges
f_i ⊇ {x_i, y_i} such that no pair lies in an edge outside the representatives.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .hypercore import Edge, Hypergraph, ParseError, parse_hypergraph, serialize_hypergraph
from .matching import hall_violator, max_matching

log = logging.getLogger(__name__)

# brute-force certification of maximality is attempted up to this many edges
CERTIFY_MAX_EDGES = 12
HALL_EXHAUSTIVE_MAX_PAIRS = 20


@dataclass(frozen=True)
class Sdrp:
    pairs: tuple[Edge, ...]
    representatives: tuple[Edge, ...]
    residual: Hypergraph
    certified: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.pairs) != len(self.representatives):
            raise ValueError("pairs and representatives differ in length")
        if len(set(self.pairs)) != len(self.pairs) or len(set(self.representatives)) != len(self.pairs):
            raise ValueError("pairs and representatives must be distinct")
        res = self.residual.edge_set
        for p, f in zip(self.pairs, self.representatives):
            if not set(p) <= set(f):
                raise ValueError(f"pair {p} is not inside its representative {f}")
            if f in res:
                raise ValueError(f"representative {f} is also a residual edge")
        shadow = {q for e in self.residual.edges for q in combinations(e, 2)}
        for p in self.pairs:
            if p in shadow:
                raise ValueError(f"pair {p} lies inside a residual edge")

    @property
    def size(self) -> int:
        return len(self.pairs)

    def mapping(self) -> dict[Edge, Edge]:
        return dict(zip(self.pairs, self.representatives))

    def serialize(self) -> str:
        lines = [f"{p[0]} {p[1]} -> {' '.join(map(str, f))}" for p, f in zip(self.pairs, self.representatives)]
        lines.append("RESIDUAL")
        return "\n".join(lines) + "\n" + serialize_hypergraph(self.residual)

    @classmethod
    def parse(cls, text: str) -> "Sdrp":
        lines = text.splitlines()
        pairs, reps = [], []
        for i, line in enumerate(lines):
            s = line.strip()
            if not s or s.startswith("#"):
                continue
            if s == "RESIDUAL":
                residual = parse_hypergraph("\n".join(lines[i + 1:]))
                return cls(tuple(pairs), tuple(reps), residual)
            if "->" not in s:
                raise ParseError(i + 1, "expected 'x y -> v1 ... vr'")
            left, right = s.split("->")
            try:
                p = tuple(sorted(int(x) for x in left.split()))
                f = tuple(sorted(int(x) for x in right.split()))
            except ValueError:
                raise ParseError(i + 1, "non-integer token") from None
            if len(p) != 2:
                raise ParseError(i + 1, "a pair needs two vertices")
            pairs.append(p)
            reps.append(f)
        raise ParseError(len(lines), "missing RESIDUAL section")


def _shadow_pairs(edges) -> list[Edge]:
    return sorted({p for e in edges for p in combinations(e, 2)})


def _options(pairs: list[Edge], edges) -> dict[Edge, list[Edge]]:
    opts: dict[Edge, list[Edge]] = {p: [] for p in pairs}
    for e in edges:
        for p in combinations(e, 2):
            if p in opts:
                opts[p].append(e)
    return opts


def _strict_hall_violator(edges: list[Edge], pairs: list[Edge] | None = None) -> list[Edge]:
    """A nonempty pair set S with |S| >= |B_S|, or [] if strict Hall holds.

    Strict Hall holds iff, for every edge y, all pairs can be matched into the edges
    other than y.
    """
    if pairs is None:
        pairs = _shadow_pairs(edges)
    if not pairs:
        return []
    opts = _options(pairs, edges)
    for y in edges:
        match = max_matching(pairs, opts, banned=y)
        if len(match) < len(pairs):
            return hall_violator(pairs, opts, match, banned=y)
    return []


def _minimal_violator(edges: list[Edge], start: list[Edge]) -> list[Edge]:
    cur = start
    shrunk = True
    while shrunk:
        shrunk = False
        for x in cur:
            sub = _strict_hall_violator(edges, [p for p in cur if p != x])
            if sub:
                cur, shrunk = sub, True
                break
    return cur


def _augment(h: Hypergraph) -> tuple[dict[Edge, Edge], list[Edge]]:
    return _augment_from(h, {}, list(h.edges))


def _feasible(chosen: tuple[Edge, ...], others: list[Edge]) -> dict[Edge, Edge] | None:
    forbidden = {p for e in others for p in combinations(e, 2)}
    opts = {e: [p for p in combinations(e, 2) if p not in forbidden] for e in chosen}
    match = max_matching(list(chosen), opts)
    if len(match) < len(chosen):
        return None
    return {p: e for e, p in match.items()}


def _brute_max(h: Hypergraph, floor: int) -> dict[Edge, Edge] | None:
    """Largest SDRP with more than ``floor`` pairs, or None if none exists."""
    edges = list(h.edges)
    for size in range(len(edges), floor, -1):
        for chosen in combinations(edges, size):
            cs = set(chosen)
            got = _feasible(chosen, [e for e in edges if e not in cs])
            if got is not None:
                return got
    return None


def max_sdrp(h: Hypergraph, certify: bool = True) -> Sdrp:
    """An SDRP whose residual satisfies strict Hall, certified maximum on small inputs.

    With at most CERTIFY_MAX_EDGES edges a brute-force search confirms (or improves)
    maximality; otherwise the augmentation result is returned with certified=False.
    """
    reps, residual = _augment(h)
    certified = False
    if certify and len(h) <= CERTIFY_MAX_EDGES:
        better = _brute_max(h, len(reps))
        if better is not None:
            log.warning("augmentation was not maximum (%d < %d); using brute-force SDRP", len(reps), len(better))
            used = set(better.values())
            reps, residual = _augment_from(h, better, [e for e in h.edges if e not in used])
        certified = True
    elif certify:
        log.info("SDRP maximality not certified for %d edges", len(h))
    pairs = tuple(sorted(reps))
    out = Sdrp(pairs, tuple(reps[p] for p in pairs), Hypergraph(h.n, h.r, tuple(residual)), certified)
    assert hall_check(out.residual).ok, "residual of a maximal SDRP violates strict Hall"
    return out


def _augment_from(h: Hypergraph, reps: dict[Edge, Edge], residual: list[Edge]):
    """Grow an SDRP until its residual satisfies strict Hall.

    A minimal violating pair set S can match its neighbourhood B_S injectively into
    S; moving B_S into the representatives keeps the SDRP valid and enlarges it.
    """
    reps = dict(reps)
    while True:
        bad = _strict_hall_violator(residual)
        if not bad:
            return reps, residual
        S = _minimal_violator(residual, bad)
        sset = set(S)
        bs = [e for e in residual if any(p in sset for p in combinations(e, 2))]
        opts = {e: [p for p in combinations(e, 2) if p in sset] for e in bs}
        match = max_matching(bs, opts)
        assert len(match) == len(bs), "minimal violator must saturate its neighbourhood"
        for e, p in match.items():
            reps[p] = e
        bset = set(bs)
        residual = [e for e in residual if e not in bset]


def brute_max_sdrp_size(h: Hypergraph) -> int:
    """Maximum SDRP size by exhaustive search (small inputs only)."""
    got = _brute_max(h, -1)
    return 0 if got is None else len(got)


@dataclass(frozen=True)
class HallResult:
    ok: bool
    violator: tuple[Edge, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def hall_check(residual: Hypergraph) -> HallResult:
    """Strict Hall: every nonempty set S of shadow pairs lies in more than |S| edges."""
    edges = list(residual.edges)
    pairs = _shadow_pairs(edges)
    if not pairs:
        return HallResult(True)
    if len(pairs) <= HALL_EXHAUSTIVE_MAX_PAIRS:
        bad = _exhaustive_violator(pairs, edges)
    else:
        bad = _strict_hall_violator(edges, pairs)
    return HallResult(not bad, tuple(bad))


def _exhaustive_violator(pairs: list[Edge], edges: list[Edge]) -> list[Edge]:
    """Smallest-index violating subset over all 2^|pairs| subsets."""
    P = len(pairs)
    words = (len(edges) + 63) // 64
    pm = np.zeros((P, words), dtype=np.uint64)
    for j, e in enumerate(edges):
        for p in combinations(e, 2):
            i = pairs.index(p)
            pm[i, j // 64] |= np.uint64(1 << (j % 64))
    masks = np.zeros((1 << P, words), dtype=np.uint64)
    for i in range(P):
        lo = 1 << i
        masks[lo:2 * lo] = masks[:lo] | pm[i]
    cover = np.bitwise_count(masks).sum(axis=1, dtype=np.int64)
    sizes = np.bitwise_count(np.arange(1 << P, dtype=np.uint64)).astype(np.int64)
    bad = np.nonzero((sizes >= cover) & (sizes > 0))[0]
    if len(bad) == 0:
        return []
    # prefer a smallest violator, ties by subset index
    first = int(bad[np.argmin(sizes[bad])])
    return [pairs[i] for i in range(P) if first >> i & 1]
