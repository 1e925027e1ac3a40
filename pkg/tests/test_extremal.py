import logging

import pytest

from longberge.berge import longest_berge, longest_graph_cycle
from longberge.extremal import (ConstructionSpec, ExtremalParams, ParameterError, build_construction41,
                                build_construction42, build_construction63, build_extremal, build_from_spec,
                                build_hnka, default_spec42, eval_f_graph, eval_fr, eval_fr_plus, eval_ur,
                                recognize_extremal)
from longberge.hypercore import Hypergraph
from longberge.structure import blocks


def test_f_graph_examples():
    assert eval_f_graph(9, 5) == 15
    assert eval_f_graph(5, 6) == 10
    assert eval_f_graph(5, 4) == 6


def test_fr_examples():
    assert eval_fr(11, 7, 3) == 40
    assert eval_fr(12, 9, 3) == 66
    assert eval_fr(17, 7, 3) == 61


def test_fr_plus_examples():
    assert eval_fr_plus(17, 7, 3) == 61
    assert eval_fr_plus(18, 7, 3) == 63 and eval_fr(18, 7, 3) == 62
    assert eval_fr_plus(19, 7, 3) == 66 and eval_fr(19, 7, 3) == 64


def test_ur_examples():
    assert eval_ur(10, 7, 3, 5) == 20
    assert eval_ur(7, 7, 3, 5) == 14
    assert eval_ur(7, 7, 3, 4) == 15
    with pytest.raises(ParameterError):
        eval_ur(10, 7, 3, 3)


def test_regime_checks(caplog):
    with pytest.raises(ParameterError):
        eval_fr(10, 5, 3)
    with caplog.at_level(logging.WARNING):
        eval_fr(10, 6, 3)
    assert "proven regime" in caplog.text


def test_params():
    p = ExtremalParams(17, 7, 3)
    assert (p.p, p.m, p.t, p.fr, p.fr_plus) == (3, 2, 3, 61, 61)
    assert list(p.s_range()) == [4, 5]


def test_hnka():
    g = build_hnka(14, 11, 3)
    assert len(g) == 46 and longest_graph_cycle(g).length == 10
    g = build_hnka(6, 6, 1)
    assert len(g) == 11 and longest_graph_cycle(g).length == 5
    with pytest.raises(ParameterError):
        build_hnka(14, 11, 6)


def test_construction41():
    h = build_construction41(ExtremalParams(12, 9, 3))
    assert len(h) == 66 and sorted(blocks(h.shadow_graph()).sizes()) == [5, 8]
    h = build_construction41(ExtremalParams(11, 7, 3))
    assert len(h) == 40 and sorted(blocks(h.shadow_graph()).sizes()) == [6, 6]
    with pytest.raises(ParameterError):
        build_construction41(ExtremalParams(12, 9, 3), [tuple(range(8)), (6, 7, 8, 9, 10)])


def test_construction42():
    h = build_construction42(ExtremalParams(17, 7, 3))
    assert len(h) == 61
    assert longest_berge(h).length == 6
    assert len(build_construction42(ExtremalParams(11, 7, 3))) == 40


def test_construction42_singleton_edge_error():
    params = ExtremalParams(18, 7, 3)
    base = default_spec42(params)
    spec = ConstructionSpec("C42", base.blocks, ((0, 1), (1, 2)), (((14, 15), (16,)), ((16,), (17,))))
    with pytest.raises(ParameterError, match="< r"):
        build_construction42(params, spec)


def test_construction63():
    m = build_construction63(ExtremalParams(18, 7, 3))
    assert len(m) == 63 and len(m.pair_edges) == 3
    m = build_construction63(ExtremalParams(11, 7, 3))
    assert len(m) == 40 and not m.pair_edges
    with pytest.raises(ParameterError):
        build_construction63(ExtremalParams(17, 7, 3), ["hyper"] * 4)


def test_spec_roundtrip():
    spec = default_spec42(ExtremalParams(18, 7, 3))
    back = ConstructionSpec.parse(spec.serialize())
    assert back == spec
    assert build_from_spec(back) == build_construction42(ExtremalParams(18, 7, 3))


def test_recognize_examples():
    rec = recognize_extremal(build_construction41(ExtremalParams(12, 9, 3)), 9)
    assert rec.verdict == "Construction41"
    rec = recognize_extremal(build_construction42(ExtremalParams(17, 7, 3)), 7)
    assert rec.verdict == "Construction42" and len(rec.cut_edges) == 1 and len(rec.signatures) == 1
    assert recognize_extremal(Hypergraph.complete(7, 3), 7).verdict == "Neither"


def test_recognize_rejects_one_edge_removed():
    h = build_extremal(ExtremalParams(12, 9, 3))
    assert recognize_extremal(h.without_edges([h.edges[0]]), 9).verdict == "Neither"


@pytest.mark.parametrize("n", range(7, 30))
def test_builder_counts_r3_k7(n):
    params = ExtremalParams(n, 7, 3)
    h = build_extremal(params)
    assert len(h) == params.fr
    assert recognize_extremal(h, 7).verdict in ("Construction41", "Construction42")
