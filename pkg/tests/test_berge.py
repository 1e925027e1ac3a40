import pytest

from conftest import random_hypergraph
from longberge.berge import (BergeWitness, HallViolation, InstanceTooLarge, SearchBudget, dp_longest_cycle,
                             find_berge_cycle_at_least, has_berge_cycle_at_least, lift_to_berge, longest_berge,
                             longest_graph_cycle, verify_witness)
from longberge.extremal import ExtremalParams, build_construction41, build_hnka
from longberge.hypercore import Graph, Hypergraph, MixedHypergraph

K4 = Hypergraph.complete(4, 3)


def test_witness_ok():
    w = BergeWitness("cycle", (0, 1, 2, 3), ((0, 1, 2), (1, 2, 3), (0, 2, 3), (0, 1, 3)))
    assert verify_witness(K4, w).ok


def test_witness_duplicate_edge():
    w = BergeWitness("cycle", (0, 1, 2, 3), ((0, 1, 2), (1, 2, 3), (0, 2, 3), (0, 1, 2)))
    chk = verify_witness(K4, w)
    assert not chk.ok and chk.reason == "duplicate witness edge"


def test_witness_containment_position():
    h = Hypergraph(4, 3, ((0, 1, 2), (0, 1, 3), (0, 2, 3)))
    w = BergeWitness("cycle", (0, 1, 2), ((0, 1, 2), (0, 1, 3), (0, 2, 3)))
    chk = verify_witness(h, w)
    assert not chk.ok and chk.reason == "containment fails at position 2"


def test_witness_dangling_edge():
    w = BergeWitness("cycle", (0, 1), ((0, 1, 2), (0, 1, 5)))
    with pytest.raises(KeyError):
        verify_witness(Hypergraph(6, 3, ((0, 1, 2),)), w)


def test_witness_serialize_roundtrip():
    w = BergeWitness("path", (0, 1, 2), ((0, 1, 3), (1, 2, 3)))
    assert BergeWitness.parse(w.serialize()) == w


def test_longest_examples():
    assert longest_berge(K4).length == 4
    assert longest_berge(Hypergraph(3, 3, ((0, 1, 2),))).length == 0
    res = longest_berge(build_construction41(ExtremalParams(11, 7, 3)))
    assert res.length == 6 and res.exact
    assert longest_berge(K4, "path").length == 3


def test_graph_cycle_examples():
    assert longest_graph_cycle(Graph.cycle(5)).length == 5
    assert longest_graph_cycle(Graph.path(6)).length == 0
    assert longest_graph_cycle(build_hnka(14, 11, 3)).length == 10


def test_instance_cap_and_budget():
    big = Hypergraph(25, 3, ((0, 1, 2),))
    with pytest.raises(InstanceTooLarge):
        longest_berge(big)
    h = Hypergraph.complete(8, 3)
    res = longest_berge(h, budget=SearchBudget(max_nodes=5))
    assert not res.exact


def test_dp_agrees_with_dfs(rng):
    for _ in range(60):
        n = rng.randint(4, 8)
        h = random_hypergraph(rng, n, 3, rng.uniform(0.1, 0.5))
        assert dp_longest_cycle(h) == longest_berge(h).length


def test_at_least_consistent(rng):
    for _ in range(60):
        n = rng.randint(5, 8)
        r = rng.choice((3, 4))
        h = random_hypergraph(rng, n, r, rng.uniform(0.1, 0.4))
        L = longest_berge(h).length
        for k in range(3, n + 1):
            assert has_berge_cycle_at_least(h, k) == (L >= k)
            w = find_berge_cycle_at_least(h, k)
            assert (w is not None) == (L >= k)
            if w is not None:
                assert verify_witness(h, w).ok and w.length >= k


def test_lift_all_a():
    reps = {(0, 1): (0, 1, 2), (1, 2): (1, 2, 3), (2, 3): (0, 2, 3), (0, 3): (0, 1, 3)}
    m = MixedHypergraph(4, 3, tuple(reps), ())
    w = lift_to_berge(m, reps, (0, 1, 2, 3))
    assert set(w.witness_edges) == set(reps.values())


def test_lift_all_b():
    m = MixedHypergraph(4, 3, (), K4.edges)
    w = lift_to_berge(m, {}, (0, 1, 2, 3))
    assert len(set(w.witness_edges)) == 4 and verify_witness(K4, w).ok


def test_lift_hall_failure():
    m = MixedHypergraph(4, 3, (), ((0, 1, 3), (1, 2, 3)))
    with pytest.raises(HallViolation) as ei:
        lift_to_berge(m, {}, (1, 2, 0, 3))
    assert len(ei.value.edges) < len(ei.value.pairs)
