"""Exact extremal numbers at desk scale: EG(n,k), EG_r(n,k) and the mixed m_r(n,k)."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from ..berge import BudgetExhausted, SearchBudget, graph_has_cycle_at_least, has_berge_cycle_at_least
from ..extremal import (ExtremalParams, build_construction63, build_extremal, build_hnka,
                        chain_blocks)
from ..hypercore import Graph, Hypergraph, MixedHypergraph
from .enumerate import Enumerator, Mode

log = logging.getLogger(__name__)

GRAPH_MAX_N = 9
HYPER_MAX_N = {3: 11, 4: 9, 5: 8}


class SearchRefused(ValueError):
    pass


@dataclass
class SearchResult:
    value: int
    extremal: list = field(default_factory=list)
    nodes_expanded: int = 0
    exact: bool = True
    lower_bound_source: str = ""
    elapsed: float = 0.0
    level_sizes: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "exact": self.exact,
            "nodes_expanded": self.nodes_expanded,
            "extremal_count": len(self.extremal),
            "extremal": [[list(e) for e in fam] for fam in self.extremal],
            "lower_bound_source": self.lower_bound_source,
            "level_sizes": {str(k): v for k, v in sorted(self.level_sizes.items())},
        }


def _graph_lower_bound(n: int, k: int) -> tuple[int, str]:
    """Edges of a clique chain with blocks of size k-1 and one of size m (no cycle >= k)."""
    p = (n - 1) // (k - 2)
    m = n - (k - 2) * p
    blocks = chain_blocks([k - 1] * p + ([m] if m > 1 else []))
    edges = {e for b in blocks for e in _pairs(b)}
    g = Graph(n, tuple(edges))
    if graph_has_cycle_at_least(g, k):
        raise AssertionError("lower-bound construction has a long cycle")
    return len(g), "clique chain"


def _pairs(b):
    return [(b[i], b[j]) for i in range(len(b)) for j in range(i + 1, len(b))]


def exact_eg_graph(n: int, k: int, budget: SearchBudget | None = None, force: bool = False) -> SearchResult:
    """EG(n,k) with all extremal graphs up to isomorphism."""
    if k < 4:
        raise SearchRefused("need k >= 4")
    if n > GRAPH_MAX_N and not force:
        raise SearchRefused(f"exact graph search refuses n > {GRAPH_MAX_N}")
    t0 = time.monotonic()
    if n < k:
        g = Graph.complete(n)
        return SearchResult(len(g), [g.edges], 0, True, "complete graph (n < k)", time.monotonic() - t0)
    lb, src = _graph_lower_bound(n, k)
    return _run(n, k, Mode.graph(), lb, src, budget, t0, lambda fam: Graph(n, fam))


def exact_eg_hypergraph(n: int, k: int, r: int, budget: SearchBudget | None = None,
                        force: bool = False) -> SearchResult:
    """EG_r(n,k) with all extremal r-graphs up to isomorphism."""
    if r < 3:
        raise SearchRefused("need r >= 3 (use exact_eg_graph for graphs)")
    cap = HYPER_MAX_N.get(r, 7)
    if n > cap and not force:
        raise SearchRefused(f"exact search for r = {r} refuses n > {cap} without force")
    t0 = time.monotonic()
    if n < k:
        h = Hypergraph.complete(n, r)
        return SearchResult(len(h), [h.edges], 0, True, "complete r-graph (n < k)", time.monotonic() - t0)
    if k >= r + 3:
        h = build_extremal(ExtremalParams(n, k, r))
        src = "Construction 4.1/4.2"
    else:
        h = Hypergraph(n, r, ())
        src = "empty"
    if has_berge_cycle_at_least(h, k):
        raise AssertionError("lower-bound construction has a long Berge cycle")
    return _run(n, k, Mode.hyper(r), len(h), src, budget, t0, lambda fam: Hypergraph(n, r, fam))


def exact_mixed(n: int, k: int, r: int, budget: SearchBudget | None = None, force: bool = False) -> SearchResult:
    """m_r(n,k): largest mixed (2,r) family whose 2-shadow has no cycle of length >= k."""
    cap = {3: 9, 4: 8}.get(r, 7)
    if n > cap and not force:
        raise SearchRefused(f"mixed search for r = {r} refuses n > {cap} without force")
    t0 = time.monotonic()
    if k >= r + 3 and n >= k:
        mh = build_construction63(ExtremalParams(n, k, r))
        lb, src = len(mh), "Construction 6.3"
        if graph_has_cycle_at_least(mh.shadow_graph(), k):
            raise AssertionError("Construction 6.3 has a long shadow cycle")
    else:
        lb, src = 0, "empty"

    def wrap(fam):
        return MixedHypergraph(n, r, tuple(e for e in fam if len(e) == 2), tuple(e for e in fam if len(e) == r))

    return _run(n, k, Mode.mixed(r), lb, src, budget, t0, wrap)


def _run(n, k, mode: Mode, lb: int, src: str, budget, t0, wrap) -> SearchResult:
    en = Enumerator(k, mode, budget)
    try:
        fams = en.run(n, lb)
    except BudgetExhausted:
        log.warning("budget exhausted; reporting the lower bound %d", lb)
        return SearchResult(lb, [], en.stats.nodes, False, src, time.monotonic() - t0, dict(en.stats.level_sizes))
    if not fams:
        raise AssertionError(f"enumeration missed the lower-bound family ({src}, {lb} edges)")
    value = max(len(f) for f in fams)
    ext = sorted(f for f in fams if len(f) == value)
    # independent re-verification of every extremal family
    for fam in ext:
        obj = wrap(fam)
        if isinstance(obj, Hypergraph):
            assert not has_berge_cycle_at_least(obj, k), "extremal family has a long Berge cycle"
        elif isinstance(obj, MixedHypergraph):
            assert not graph_has_cycle_at_least(obj.shadow_graph(), k)
        else:
            assert not graph_has_cycle_at_least(obj, k)
    return SearchResult(value, ext, en.stats.nodes, True, src, time.monotonic() - t0, dict(en.stats.level_sizes))


def free_graphs(n: int, k: int, budget: SearchBudget | None = None) -> dict[int, set]:
    """All graphs on j <= n vertices with no cycle of length >= k, per j, up to isomorphism."""
    en = Enumerator(k, Mode.graph(), budget)
    out: dict[int, set] = {1: {()}}
    fams: set = {()}
    for j in range(2, n + 1):
        fams = en.level(fams, j, 0)
        out[j] = fams
    return out


def two_connected_free_graphs(n: int, k: int) -> list[Graph]:
    """2-connected graphs on exactly n vertices with no cycle of length >= k."""
    from ..structure import is_two_connected
    fams = free_graphs(n, k)[n]
    return [g for g in (Graph(n, f) for f in sorted(fams)) if is_two_connected(g)]


def contains_hnka(result: SearchResult, n: int, k: int, a: int) -> bool:
    from .canon import canonical_form
    want = canonical_form(n, build_hnka(n, k, a).edges)[1]
    return any(canonical_form(n, f)[1] == want for f in result.extremal)
