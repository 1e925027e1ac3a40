"""Bound functions, the extremal constructions and a recognizer for their shapes.

Blocks are laid out as a chain by default: block i shares its lowest vertex with
the highest vertex of block i-1, and the short block (if any) comes last.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .hypercore import Edge, Graph, Hypergraph, MixedHypergraph, ParseError, binom

log = logging.getLogger(__name__)


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    k: int
    r: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 3 or self.r < 2:
            raise ParameterError("need n >= 1, k >= 3, r >= 2")

    @property
    def p(self) -> int:
        return (self.n - 1) // (self.k - 2)

    @property
    def m(self) -> int:
        return self.n - (self.k - 2) * self.p

    @property
    def t(self) -> int:
        return (self.k - 1) // 2

    @property
    def proven_regime(self) -> bool:
        """r >= 3 and k >= r + 4."""
        return self.r >= 3 and self.k >= self.r + 4

    @property
    def conjectured_regime(self) -> bool:
        return self.r >= 3 and self.k == self.r + 3

    @property
    def f(self) -> int:
        return eval_f_graph(self.n, self.k)

    @property
    def fr(self) -> int:
        return eval_fr(self.n, self.k, self.r)

    @property
    def fr_plus(self) -> int:
        return eval_fr_plus(self.n, self.k, self.r)

    def s_range(self) -> range:
        """Valid s for u_r: 2 <= k - s <= t."""
        return range(self.k - self.t, self.k - 1)


def _pm(n: int, k: int) -> tuple[int, int]:
    p = (n - 1) // (k - 2)
    return p, n - (k - 2) * p


def eval_f_graph(n: int, k: int) -> int:
    """Erdős–Gallai / Kopylov bound for graphs: p·C(k-1,2) + C(m,2)."""
    if k < 3 or n < 1:
        raise ParameterError("need k >= 3 and n >= 1")
    p, m = _pm(n, k)
    return p * binom(k - 1, 2) + binom(m, 2)


def _check_r(k: int, r: int, n: int) -> None:
    if r < 3 or k < r + 3 or n < 1:
        raise ParameterError("need r >= 3, k >= r + 3, n >= 1")
    if k == r + 3:
        log.warning("k = r + 3 lies outside the proven regime k >= r + 4")


def eval_fr(n: int, k: int, r: int) -> int:
    _check_r(k, r, n)
    p, m = _pm(n, k)
    return p * binom(k - 1, r) + (m - 1 if m <= r else binom(m, r))


def eval_fr_plus(n: int, k: int, r: int) -> int:
    _check_r(k, r, n)
    p, m = _pm(n, k)
    return p * binom(k - 1, r) + (binom(m, 2) if m <= r + 1 else binom(m, r))


def ur_value(n: int, k: int, r: int, s: int) -> int:
    """u_r(n,k,s) without range checks (used by identities that step outside them)."""
    return max(binom(s, 2), binom(s, r)) + (n - s) * max(k - s, binom(k - s, r - 1))


def eval_ur(n: int, k: int, r: int, s: int) -> int:
    t = (k - 1) // 2
    if not 2 <= k - s <= t:
        raise ParameterError(f"s = {s} outside [k-t, k-2] = [{k - t}, {k - 2}]")
    if n < s:
        raise ParameterError("need n >= s")
    return ur_value(n, k, r, s)


# ---------------------------------------------------------------------------
# builders

def build_hnka(n: int, k: int, a: int) -> Graph:
    """A = [0,a), C = [a,k-a), B = [k-a,n); all A-B pairs plus a clique on A ∪ C."""
    if k < 4 or n < k:
        raise ParameterError("need k >= 4 and n >= k")
    if not (1 <= a and 2 * a < k):
        raise ParameterError("need 1 <= a < k/2")
    edges = list(combinations(range(k - a), 2))
    edges += [(x, b) for x in range(a) for b in range(k - a, n)]
    return Graph(n, tuple(edges))


def chain_blocks(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """Blocks of the given sizes on consecutive vertices, each starting at the last vertex of the previous one."""
    out: list[tuple[int, ...]] = []
    start = 0
    for i, s in enumerate(sizes):
        if i > 0:
            start = out[-1][-1]
        out.append(tuple(range(start, start + s)))
    return out


def _check_forest(blocks: Sequence[Sequence[int]], exact_one: bool) -> None:
    seen: set[int] = set()
    for i, b in enumerate(blocks):
        if len(set(b)) != len(b):
            raise ParameterError(f"block {i} repeats a vertex")
        if i > 0:
            shared = len(seen & set(b))
            if shared > 1 or (exact_one and shared != 1):
                raise ParameterError(
                    f"block {i} meets the earlier blocks in {shared} vertices "
                    f"(need {'exactly' if exact_one else 'at most'} 1)")
        seen |= set(b)


def _complete_on(block: Sequence[int], r: int) -> list[Edge]:
    return list(combinations(sorted(block), r))


def build_construction41(params: ExtremalParams, layout: Sequence[Sequence[int]] | None = None) -> Hypergraph:
    """Complete r-graphs on a clique tree of p blocks of size k-1 and one of size m."""
    n, k, r, p, m = params.n, params.k, params.r, params.p, params.m
    if 2 <= m <= r:
        raise ParameterError(f"m = {m} <= r: use Construction 4.2")
    if layout is None:
        sizes = [k - 1] * p + ([m] if m > 1 else [])
        layout = chain_blocks(sizes)
    layout = [tuple(b) for b in layout]
    want = sorted([k - 1] * p + ([m] if m > 1 else []))
    if sorted(len(b) for b in layout) != want:
        raise ParameterError(f"block sizes must be {want}")
    _check_forest(layout, exact_one=True)
    if set().union(*layout) != set(range(n)):
        raise ParameterError("blocks must cover [0, n)")
    edges: set[Edge] = set()
    for b in layout:
        edges.update(_complete_on(b, r))
    return Hypergraph(n, r, tuple(edges))


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str  # "C41" | "C42" | "C63" | "Hnka"
    blocks: tuple[tuple[int, ...], ...] = ()
    tree: tuple[tuple[int, int], ...] = ()
    blowups: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = ()
    kinds: tuple[str, ...] = ()
    hnka: tuple[int, int, int] | None = None
    params: tuple[int, int, int] | None = None

    def serialize(self) -> str:
        lines = [f"CONSTRUCTION {self.kind}"]
        if self.params:
            lines.append("PARAMS " + " ".join(map(str, self.params)))
        if self.hnka:
            lines.append("HNKA " + " ".join(map(str, self.hnka)))
        for b in self.blocks:
            lines.append("BLOCK " + " ".join(map(str, b)))
        for (a, b), (x, y) in zip(self.tree, self.blowups):
            lines.append(f"TREE {a} {b}")
            lines.append(f"BLOWUP {a}:{','.join(map(str, x))} {b}:{','.join(map(str, y))}")
        for i, kd in enumerate(self.kinds):
            lines.append(f"KIND {i} {kd}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "ConstructionSpec":
        kind = None
        blocks, tree, blowups, kinds = [], [], [], {}
        hnka = params = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            s = raw.split("#", 1)[0].strip()
            if not s:
                continue
            head, *rest = s.split()
            try:
                if head == "CONSTRUCTION":
                    kind = rest[0]
                elif head == "PARAMS":
                    params = tuple(int(x) for x in rest)
                elif head == "HNKA":
                    hnka = tuple(int(x) for x in rest)
                elif head == "BLOCK":
                    blocks.append(tuple(int(x) for x in rest))
                elif head == "TREE":
                    tree.append((int(rest[0]), int(rest[1])))
                elif head == "BLOWUP":
                    parts = [x.split(":") for x in rest]
                    if len(parts) != 2 or not tree or tuple(int(a) for a, _ in parts) != tree[-1]:
                        raise ParseError(lineno, "BLOWUP must follow its TREE line with matching components")
                    blowups.append(tuple(tuple(int(v) for v in vs.split(",")) for _, vs in parts))
                elif head == "KIND":
                    if rest[1] not in ("graph", "hyper"):
                        raise ParseError(lineno, "KIND must be graph or hyper")
                    kinds[int(rest[0])] = rest[1]
                else:
                    raise ParseError(lineno, f"unknown record {head!r}")
            except (IndexError, ValueError) as exc:
                if isinstance(exc, ParseError):
                    raise
                raise ParseError(lineno, f"malformed {head} record") from None
        if kind is None:
            raise ParseError(1, "missing CONSTRUCTION line")
        if len(blowups) != len(tree):
            raise ParseError(len(text.splitlines()), "every TREE line needs a BLOWUP line")
        kl = tuple(kinds[i] for i in sorted(kinds))
        return cls(kind, tuple(blocks), tuple(tree), tuple(blowups), kl, hnka, params)  # type: ignore[arg-type]


def components_of_blocks(n: int, blocks: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Components of the union of cliques on ``blocks``, ordered by smallest vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for b in blocks:
        for v in b[1:]:
            parent[find(v)] = find(b[0])
    comps: dict[int, list[int]] = {}
    for v in range(n):
        comps.setdefault(find(v), []).append(v)
    return sorted(tuple(c) for c in comps.values())


def default_spec42(params: ExtremalParams) -> ConstructionSpec:
    """Chain of p blocks, m-1 singletons, each joined to the chain by one cut edge."""
    n, k, r, p, m = params.n, params.k, params.r, params.p, params.m
    blocks = chain_blocks([k - 1] * p)
    last = blocks[-1]
    tree, blowups = [], []
    for j in range(1, m):
        tree.append((0, j))
        blowups.append((tuple(last[: r - 1]), (n - m + j,)))
    return ConstructionSpec("C42", tuple(blocks), tuple(tree), tuple(blowups), params=(n, k, r))


def build_construction42(params: ExtremalParams, spec: ConstructionSpec | None = None) -> Hypergraph:
    n, k, r, p, m = params.n, params.k, params.r, params.p, params.m
    if m > r:
        raise ParameterError(f"m = {m} > r: use Construction 4.1")
    if spec is None:
        spec = default_spec42(params)
    blocks = [tuple(sorted(b)) for b in spec.blocks]
    if len(blocks) != p or any(len(b) != k - 1 for b in blocks):
        raise ParameterError(f"need exactly p = {p} blocks of size k-1 = {k - 1}")
    if any(v < 0 or v >= n for b in blocks for v in b):
        raise ParameterError("block vertex out of range")
    _check_forest(blocks, exact_one=False)
    comps = components_of_blocks(n, blocks)
    if len(comps) != m:
        raise ParameterError(f"blocks leave {len(comps)} components, need m = {m}")
    if len(spec.tree) != m - 1 or len(spec.blowups) != m - 1:
        raise ParameterError(f"tree T needs m-1 = {m - 1} edges with blow-up sets")
    if not _is_tree(m, spec.tree):
        raise ParameterError("TREE edges do not form a tree on the components")
    edges: set[Edge] = set()
    for b in blocks:
        edges.update(_complete_on(b, r))
    for (a, b), (xa, xb) in zip(spec.tree, spec.blowups):
        ca, cb = comps[a], comps[b]
        if len(ca) + len(cb) < r:
            raise ParameterError(f"tree edge {a}-{b}: |C_a| + |C_b| = {len(ca) + len(cb)} < r")
        if not xa or not xb or len(xa) + len(xb) != r:
            raise ParameterError(f"tree edge {a}-{b}: blow-up sets must be nonempty with total size r")
        for comp, xs, name in ((ca, xa, a), (cb, xb, b)):
            if not set(xs) <= set(comp):
                raise ParameterError(f"blow-up set {xs} not inside component {name}")
            if len(comp) > 1 and not any(set(xs) <= set(bl) for bl in blocks):
                raise ParameterError(f"blow-up set {xs} not inside a single block")
        edges.add(tuple(sorted(set(xa) | set(xb))))
    return Hypergraph(n, r, tuple(edges))


def _is_tree(m: int, tree_edges: Sequence[tuple[int, int]]) -> bool:
    if len(tree_edges) != m - 1:
        return False
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for a, b in tree_edges:
        if not (0 <= a < m and 0 <= b < m):
            return False
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def build_extremal(params: ExtremalParams) -> Hypergraph:
    """The default extremal construction for (n,k,r)."""
    if params.m >= params.r + 1 or params.m == 1:
        return build_construction41(params)
    return build_construction42(params)


def maximal_kinds(sizes: Sequence[int], r: int) -> list[str]:
    """Per-block choice of the larger clique (hyper on ties)."""
    return ["hyper" if s >= r and binom(s, r) >= binom(s, 2) else "graph" for s in sizes]


def build_construction63(params: ExtremalParams, choices: Sequence[str] | None = None,
                         layout: Sequence[Sequence[int]] | None = None) -> MixedHypergraph:
    n, k, r, p, m = params.n, params.k, params.r, params.p, params.m
    if r < 3:
        raise ParameterError("mixed hypergraphs need r >= 3")
    if layout is None:
        layout = chain_blocks([k - 1] * p + ([m] if m > 1 else []))
    layout = [tuple(sorted(b)) for b in layout]
    want = sorted([k - 1] * p + ([m] if m > 1 else []))
    if sorted(len(b) for b in layout) != want:
        raise ParameterError(f"block sizes must be {want}")
    _check_forest(layout, exact_one=True)
    if set().union(*layout) != set(range(n)):
        raise ParameterError("blocks must cover [0, n)")
    if choices is None:
        choices = maximal_kinds([len(b) for b in layout], r)
    if len(choices) != len(layout):
        raise ParameterError("one clique kind per block required")
    pairs: list[Edge] = []
    hyper: list[Edge] = []
    for b, c in zip(layout, choices):
        if c == "hyper":
            if len(b) < r:
                raise ParameterError(f"block of size {len(b)} < r cannot carry an r-clique")
            hyper += _complete_on(b, r)
        elif c == "graph":
            pairs += list(combinations(b, 2))
        else:
            raise ParameterError(f"unknown clique kind {c!r}")
    return MixedHypergraph(n, r, tuple(pairs), tuple(hyper))


def build_from_spec(spec: ConstructionSpec, params: ExtremalParams | None = None):
    if params is None and spec.params:
        params = ExtremalParams(*spec.params)
    if spec.kind == "Hnka":
        if spec.hnka is None:
            raise ParameterError("Hnka spec needs an HNKA line")
        return build_hnka(*spec.hnka)
    if params is None:
        raise ParameterError("construction needs (n, k, r)")
    if spec.kind == "C41":
        return build_construction41(params, spec.blocks or None)
    if spec.kind == "C42":
        return build_construction42(params, spec if spec.blocks else None)
    if spec.kind == "C63":
        return build_construction63(params, spec.kinds or None, spec.blocks or None)
    raise ParameterError(f"unknown construction kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# recognition

@dataclass(frozen=True)
class RecognitionResult:
    verdict: str  # "Construction41" | "Construction42" | "Neither"
    block_sizes: tuple[int, ...] = ()
    blocks: tuple[tuple[int, ...], ...] = ()
    components: tuple[tuple[int, ...], ...] = ()
    cut_edges: tuple[Edge, ...] = ()
    signatures: tuple[tuple[int, ...], ...] = ()
    reason: str = ""
    notes: tuple[str, ...] = field(default=())

    def summary(self) -> str:
        return (f"verdict={self.verdict} blocks={list(self.block_sizes)} "
                f"components={len(self.components)} cut_edges={len(self.cut_edges)}"
                + (f" reason={self.reason}" if self.reason else ""))


CLIQUE_SEARCH_LIMIT = 200_000


def _max_cliques(n: int, adj: Sequence[int], min_size: int) -> list[int]:
    """Maximal cliques (as bitmasks) of size >= min_size, Bron–Kerbosch with pivot."""
    out: list[int] = []

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            if R.bit_count() >= min_size:
                out.append(R)
            return
        if R.bit_count() + P.bit_count() < min_size:
            return
        PX = P | X
        u = max(_bits(PX), key=lambda w: (P & adj[w]).bit_count())
        cand = P & ~adj[u]
        for v in _bits(cand):
            bk(R | 1 << v, P & adj[v], X & adj[v])
            P &= ~(1 << v)
            X |= 1 << v

    bk(0, (1 << n) - 1, 0)
    return out


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def complete_blocks(h: Hypergraph, size: int) -> list[tuple[int, ...]] | None:
    """All vertex sets of the given size spanning a complete r-graph in h.

    Returns None when the candidate space exceeds CLIQUE_SEARCH_LIMIT.
    """
    g = h.shadow_graph()
    es = h.edge_set
    found: set[tuple[int, ...]] = set()
    work = 0
    for Q in _max_cliques(h.n, g.adj, size):
        qs = _bits(Q)
        if binom(len(qs), size) + work > CLIQUE_SEARCH_LIMIT:
            return None
        for X in combinations(qs, size):
            work += 1
            if X in found:
                continue
            if all(e in es for e in combinations(X, h.r)):
                found.add(X)
    return sorted(found)


def recognize_extremal(h: Hypergraph, k: int) -> RecognitionResult:
    """Decide whether h has the shape of Construction 4.1 or 4.2 for (n, k, r).

    The (k-1)-sets spanning complete r-graphs must form a linear forest of exactly p
    sets; the remaining edges D must be a complete r-graph on a transversal of the
    components (4.1, m >= r+1) or have component signatures phi(f) forming a tree on
    the components with each side inside a single block (4.2, m <= r).
    """
    n, r = h.n, h.r
    if r < 3 or k < r + 3 or n < k:
        return RecognitionResult("Neither", reason="parameters outside r >= 3, k >= r+3, n >= k")
    params = ExtremalParams(n, k, r)
    p, m = params.p, params.m
    vs = complete_blocks(h, k - 1)
    if vs is None:
        return RecognitionResult("Neither", reason="clique search limit exceeded")
    if len(vs) != p:
        return RecognitionResult("Neither", block_sizes=tuple(len(v) for v in vs), blocks=tuple(vs),
                                 reason=f"found {len(vs)} complete (k-1)-sets, need p = {p}")
    try:
        _forest_order(vs)
    except ParameterError as exc:
        return RecognitionResult("Neither", blocks=tuple(vs), reason=str(exc))
    comps = components_of_blocks(n, vs)
    if len(comps) != m:
        return RecognitionResult("Neither", blocks=tuple(vs), components=tuple(comps),
                                 reason=f"{len(comps)} components, need m = {m}")
    comp_of = [0] * n
    for a, c in enumerate(comps):
        for v in c:
            comp_of[v] = a
    inside: set[Edge] = set()
    for b in vs:
        inside.update(combinations(b, r))
    D = tuple(e for e in h.edges if e not in inside)
    sigs = tuple(tuple(sorted({comp_of[v] for v in f})) for f in D)
    base = dict(block_sizes=tuple(len(v) for v in vs), blocks=tuple(vs), components=tuple(comps),
                cut_edges=D, signatures=sigs)

    if m >= r + 1:
        W = sorted({v for f in D for v in f})
        ok = (len(W) == m and len({comp_of[v] for v in W}) == m
              and set(D) == set(combinations(W, r)))
        if ok:
            return RecognitionResult("Construction41", **{**base, "block_sizes": base["block_sizes"] + (m,)},
                                     notes=("D is the complete r-graph on a transversal of the components",))
        return RecognitionResult("Neither", reason="D is not a complete r-graph on a component transversal", **base)

    if m == 1:
        if D:
            return RecognitionResult("Neither", reason="m = 1 but edges outside the blocks remain", **base)
        return RecognitionResult("Construction42", notes=("m = 1: Constructions 4.1 and 4.2 coincide",), **base)

    if len(D) != m - 1:
        return RecognitionResult("Neither", reason=f"|D| = {len(D)}, need m-1 = {m - 1}", **base)
    for f, sg in zip(D, sigs):
        if len(sg) != 2:
            return RecognitionResult("Neither", reason=f"edge {f} has signature {sg}, need size 2", **base)
        for a in sg:
            part = {v for v in f if comp_of[v] == a}
            if len(comps[a]) > 1 and not any(part <= set(b) for b in vs):
                return RecognitionResult("Neither", reason=f"edge {f} meets component {a} outside a single block",
                                         **base)
    if not _is_tree(m, [tuple(sg) for sg in sigs]):  # type: ignore[misc]
        return RecognitionResult("Neither", reason="signature graph is not a tree", **base)
    return RecognitionResult("Construction42", **base)


def _forest_order(blocks: Sequence[tuple[int, ...]]) -> None:
    """Raise unless the vertex-block incidence graph is acyclic.

    This holds iff some ordering of the blocks is a linear hypergraph forest.
    """
    nodes: dict = {}

    def find(x):
        nodes.setdefault(x, x)
        while nodes[x] != x:
            x = nodes[x]
        return x

    for i, b in enumerate(blocks):
        for v in b:
            a, c = find(("v", v)), find(("b", i))
            if a == c:
                raise ParameterError("blocks contain a cycle (not a linear forest)")
            nodes[a] = c
