import pytest

from conftest import random_hypergraph
from longberge.hypercore import Hypergraph
from longberge.sdrp import Sdrp, brute_max_sdrp_size, hall_check, max_sdrp


def _covering(residual, S):
    return {e for e in residual.edges for p in S if set(p) <= set(e)}


def test_single_edge():
    sd = max_sdrp(Hypergraph(3, 3, ((0, 1, 2),)))
    assert sd.size == 1 and len(sd.residual) == 0


@pytest.mark.parametrize("n,size", [(4, 4), (5, 10)])
def test_complete(n, size):
    sd = max_sdrp(Hypergraph.complete(n, 3))
    assert sd.size == size and len(sd.residual) == 0


def test_complete_seven_has_none():
    # every pair lies in 5 triples but each triple covers only 3 pairs
    assert max_sdrp(Hypergraph.complete(7, 3)).size == 0


def test_hall_examples():
    assert hall_check(Hypergraph(3, 3, ())).ok
    res = hall_check(Hypergraph(3, 3, ((0, 1, 2),)))
    assert not res.ok and len(res.violator) == 1
    res = hall_check(Hypergraph(4, 3, ((0, 1, 3), (0, 2, 3))))
    assert not res.ok
    res_h = Hypergraph(4, 3, ((0, 1, 3), (0, 2, 3)))
    assert len(_covering(res_h, res.violator)) <= len(res.violator)


def test_hall_on_complete_residual():
    assert hall_check(Hypergraph.complete(6, 3)).ok


def test_serialize_roundtrip():
    sd = max_sdrp(Hypergraph.complete(5, 3))
    back = Sdrp.parse(sd.serialize())
    assert back.pairs == sd.pairs and back.representatives == sd.representatives and back.residual == sd.residual


def test_invalid_sdrp_rejected():
    h = Hypergraph(4, 3, ((0, 1, 3),))
    with pytest.raises(ValueError):
        Sdrp(((0, 1),), ((0, 1, 2),), h)


def test_max_matches_brute_force(rng):
    for _ in range(40):
        h = random_hypergraph(rng, rng.randint(4, 6), 3, rng.uniform(0.1, 0.5))
        if len(h) > 10:
            continue
        sd = max_sdrp(h)
        assert sd.size == brute_max_sdrp_size(h)
        assert hall_check(sd.residual).ok
