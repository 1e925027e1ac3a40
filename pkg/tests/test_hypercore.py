import pytest

from longberge.extremal import ExtremalParams, build_construction41
from longberge.hypercore import (EdgeSetFamily, Hypergraph, MixedHypergraph, ParseError, binom, complement_shadow2,
                                 parse_hypergraph, parse_mixed, serialize_hypergraph, serialize_mixed, shadow)


def test_parse_basic():
    h = parse_hypergraph("6 3\n0 1 2\n3 4 5\n")
    assert (h.n, h.r, len(h)) == (6, 3, 2)


def test_parse_duplicate_edge_reports_line():
    with pytest.raises(ParseError) as ei:
        parse_hypergraph("4 3\n0 1 2\n0 1 2\n")
    assert ei.value.lineno == 3


@pytest.mark.parametrize("text", ["", "3\n", "4 3\n0 1\n", "4 3\n0 1 9\n", "4 3\n0 0 1\n", "4 3\n0 a 1\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_hypergraph(text)


def test_comments_ignored():
    h = parse_hypergraph("# hi\n5 3\n# edge\n0 1 2\n\n")
    assert h.edges == ((0, 1, 2),)


def test_roundtrip_construction41():
    h = build_construction41(ExtremalParams(12, 9, 3))
    assert len(h) == 66
    assert parse_hypergraph(serialize_hypergraph(h)) == h


def test_mixed_roundtrip_and_sperner():
    m = MixedHypergraph(6, 3, ((4, 5),), ((0, 1, 2),))
    assert parse_mixed(serialize_mixed(m)) == m
    with pytest.raises(ValueError):
        MixedHypergraph(4, 3, ((0, 1),), ((0, 1, 2),))
    with pytest.raises(ParseError):
        parse_mixed("4 2 3\nP 0 1\nH 0 1 2\n")


def test_shadow_examples():
    assert len(shadow(Hypergraph.complete(5, 3), 2)) == 10
    assert set(shadow(Hypergraph(3, 3, ((0, 1, 2),)), 2)) == {(0, 1), (0, 2), (1, 2)}
    h = build_construction41(ExtremalParams(12, 9, 3))
    assert len(shadow(h, 2)) == binom(8, 2) + binom(5, 2) == 38


def test_complement_shadow_examples():
    assert len(complement_shadow2(Hypergraph.complete(5, 3), 5)) == 0
    assert len(complement_shadow2(Hypergraph(4, 3, ()), 4)) == 6
    assert len(complement_shadow2(Hypergraph(6, 3, ((0, 1, 2),)), 6)) == 12


def test_bitset_roundtrip():
    h = Hypergraph(7, 3, ((0, 1, 2), (2, 5, 6), (1, 3, 4)))
    assert Hypergraph.from_bitset(7, 3, h.to_bitset()) == h


def test_edge_set_family_is_a_set():
    f = EdgeSetFamily(2, ((1, 0), (1, 2), (0, 1)))
    assert (0, 1) in f and len(f) == 2
    with pytest.raises(ValueError):
        EdgeSetFamily(2, ((0, 1, 2),))
