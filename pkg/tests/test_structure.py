import itertools

import pytest

from longberge.extremal import ExtremalParams, build_construction41, build_hnka
from longberge.hypercore import Graph, Hypergraph
from longberge.structure import (KopylovError, blocks, core, find_kopylov_set, is_exception_shape,
                                 is_hamilton_connected, kk_fractional_bound, min_shadow_size, shadow_inequality_check)

BOWTIE = Graph(5, ((0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)))


def test_blocks_examples():
    bd = blocks(BOWTIE)
    assert sorted(bd.sizes()) == [3, 3] and bd.cut_vertices == {0}
    bd = blocks(Graph.path(3))
    assert bd.sizes() == [2, 2] and bd.cut_vertices == {1}
    bd = blocks(build_construction41(ExtremalParams(12, 9, 3)).shadow_graph())
    assert sorted(bd.sizes()) == [5, 8]


def test_core_examples():
    assert core(Graph.cycle(5), 1).surviving == set(range(5))
    assert core(Graph.complete(4), 3).surviving == frozenset()
    assert core(BOWTIE, 2).surviving == frozenset()
    with pytest.raises(ValueError):
        core(BOWTIE, -1)


def test_core_removal_degrees():
    g = build_hnka(10, 7, 2)
    cr = core(g, 2)
    assert all(d <= 2 for _, d in cr.removal_order)


def test_kopylov_examples():
    ks = find_kopylov_set(build_hnka(9, 6, 2), 6)
    assert ks.s == 4 and ks.S == (0, 1, 2, 3)
    with pytest.raises(KopylovError, match="contains cycle of length 6"):
        find_kopylov_set(Graph.cycle(6), 6)
    with pytest.raises(KopylovError, match="n < k"):
        find_kopylov_set(Graph.cycle(5), 6)


def test_hamilton_examples():
    assert is_hamilton_connected(Graph.complete(4)).connected
    g = Graph(4, tuple(e for e in itertools.combinations(range(4), 2) if e != (0, 1)))
    res = is_hamilton_connected(g)
    assert not res.connected and res.exception_shape
    res = is_hamilton_connected(Graph.cycle(5))
    assert not res.connected and not res.exception_shape
    assert not is_exception_shape(Graph.cycle(5))
    with pytest.raises(ValueError):
        is_hamilton_connected(Graph.complete(13))


def test_hamilton_split_graph_k6_minus_triangle():
    # K_3 joined to 3 independent vertices: 12 = C(5,2)+2 edges, min degree 3, yet no
    # spanning path between two clique vertices, and not K_5 plus a degree-2 vertex
    g = Graph(6, tuple(e for e in itertools.combinations(range(6), 2) if not set(e) <= {0, 1, 2}))
    assert len(g) == 12 and g.min_degree() == 3
    res = is_hamilton_connected(g)
    assert not res.connected and not res.exception_shape
    assert set(res.failing_pair) <= {3, 4, 5}


def test_shadow_inequality_examples():
    r = shadow_inequality_check(Hypergraph.complete(5, 3), 5)
    assert r.holds and r.equality == "complete-hypergraph"
    r = shadow_inequality_check(Hypergraph(5, 3, ()), 5)
    assert r.holds and r.equality == "complete-complement" and r.lhs == 10
    r = shadow_inequality_check(Hypergraph(6, 3, ((0, 1, 2),)), 6)
    assert (r.lhs, r.rhs, r.holds, r.equality) == (13, 20, True, None)


def test_kk_examples():
    assert kk_fractional_bound(4, 3) == 6.0
    assert kk_fractional_bound(1, 3) == 3.0
    # frozen bisection value: root of x(x-1)(x-2) = 12 in (3, 4)
    assert kk_fractional_bound(2, 3) == pytest.approx(4.181646927656657, abs=1e-8)


@pytest.mark.parametrize("b", range(1, 7))
def test_kk_below_true_minimum(b):
    for w in range(3, 8):
        if b <= len(list(itertools.combinations(range(w), 3))):
            assert kk_fractional_bound(b, 3) <= min_shadow_size(b, 3, w) + 1e-9
