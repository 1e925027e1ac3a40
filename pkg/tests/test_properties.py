import itertools

from hypothesis import given, settings, strategies as st

from longberge.berge import dp_longest_cycle, longest_berge, longest_graph_cycle, verify_witness
from longberge.extremal import ExtremalParams, build_extremal, eval_fr, recognize_extremal
from longberge.hypercore import Graph, Hypergraph, parse_hypergraph, serialize_hypergraph
from longberge.search.canon import canonical_form
from longberge.structure import blocks, core


@st.composite
def hypergraphs(draw, max_n=7, r=3):
    n = draw(st.integers(r, max_n))
    pool = list(itertools.combinations(range(n), r))
    chosen = draw(st.lists(st.sampled_from(pool), unique=True, max_size=min(len(pool), 14)))
    return Hypergraph(n, r, tuple(chosen))


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pool = list(itertools.combinations(range(n), 2))
    return Graph(n, tuple(draw(st.lists(st.sampled_from(pool), unique=True))))


@given(hypergraphs())
def test_text_roundtrip(h):
    assert parse_hypergraph(serialize_hypergraph(h)) == h


@settings(max_examples=60, deadline=None)
@given(hypergraphs())
def test_dp_matches_search(h):
    res = longest_berge(h)
    assert res.length == dp_longest_cycle(h)
    if res.witness is not None:
        assert verify_witness(h, res.witness).ok


@settings(max_examples=80, deadline=None)
@given(graphs(), st.integers(0, 4), st.randoms(use_true_random=False))
def test_core_order_independent(g, alpha, rnd):
    prio = list(range(g.n))
    rnd.shuffle(prio)
    a = core(g, alpha)
    b = core(g, alpha, prio)
    assert a.surviving == b.surviving
    deg = {v: sum(1 for u in a.surviving if g.has_edge(u, v)) for v in a.surviving}
    assert all(d > alpha for d in deg.values())


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_blocks_partition_edges(g):
    bd = blocks(g)
    seen = [e for es in bd.block_edges for e in es]
    assert sorted(seen) == sorted(g.edges)
    for a, b in itertools.combinations(bd.blocks, 2):
        assert len(set(a) & set(b)) <= 1


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    moved = [(perm[a], perm[b]) for a, b in g.edges]
    assert canonical_form(g.n, g.edges) == canonical_form(g.n, moved)
    assert longest_graph_cycle(g).length == longest_graph_cycle(Graph(g.n, tuple(moved))).length


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 5), st.integers(0, 8), st.integers(0, 60))
def test_extremal_builder_count(r, dk, dn):
    k = r + 4 + dk
    n = k + dn
    h = build_extremal(ExtremalParams(n, k, r))
    assert len(h) == eval_fr(n, k, r)
    assert recognize_extremal(h, k).verdict != "Neither"
