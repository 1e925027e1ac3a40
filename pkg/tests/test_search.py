import itertools
import json
import random

import pytest

from longberge.berge import SearchBudget
from longberge.extremal import eval_f_graph, eval_fr, recognize_extremal
from longberge.hypercore import Hypergraph
from longberge.search import (SCHEMA, ScanGrid, SearchRefused, brute_canonical_form, canonical_form, contains_hnka,
                              exact_eg_graph, exact_eg_hypergraph, exact_mixed, inequality_scan, random_hunt)
from longberge.search.enumerate import thresholds
from longberge.search.scan import check_family_partition, family_partition


def _random_family(rng, n):
    sizes = rng.choice([(2,), (3,), (2, 3), (4,)])
    pool = [e for s in sizes if s <= n for e in itertools.combinations(range(n), s)]
    k = rng.randint(0, min(len(pool), 6))
    return rng.sample(pool, k)


def test_canonical_forms_agree_on_random_instances():
    rng = random.Random(2024)
    ir_classes, brute_classes = {}, {}
    for i in range(10_000):
        n = rng.choice((3, 4, 5, 5, 6, 6, 7, 8))
        fam = _random_family(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        moved = [tuple(perm[v] for v in e) for e in fam]
        ir = canonical_form(n, fam)
        assert canonical_form(n, moved) == ir
        br = brute_canonical_form(n, fam)
        if i % 10 == 0:
            assert brute_canonical_form(n, moved) == br
        ir_classes.setdefault(ir, set()).add(br)
        brute_classes.setdefault(br, set()).add(ir)
    assert all(len(v) == 1 for v in ir_classes.values())
    assert all(len(v) == 1 for v in brute_classes.values())
    assert len(ir_classes) > 500


def test_canonical_form_edge_cases():
    assert canonical_form(0, []) == (0, ())
    assert canonical_form(3, []) == (3, ())
    assert canonical_form(4, [(2, 3)]) == canonical_form(4, [(0, 1)])
    assert canonical_form(4, [(0, 1), (2, 3)]) != canonical_form(4, [(0, 1), (1, 2)])


def test_thresholds_monotone():
    th = thresholds(9, 24, 3)
    assert th[9] == 24 and all(th[j] <= th[j + 1] for j in range(1, 9))


@pytest.mark.parametrize("n,k,want", [(5, 4, 6), (6, 5, 9), (9, 5, 15)])
def test_exact_graph_examples(n, k, want):
    res = exact_eg_graph(n, k)
    assert res.value == want == eval_f_graph(n, k) and res.exact


def test_exact_graph_small_extremal_shapes():
    res = exact_eg_graph(5, 4)
    assert len(res.extremal) == 1
    degrees = sorted(sum(x in e for e in res.extremal[0]) for x in range(5))
    assert degrees == [2, 2, 2, 2, 4]
    assert contains_hnka(exact_eg_graph(9, 5), 9, 5, 2)


def test_exact_graph_trivial_and_refusal():
    assert exact_eg_graph(5, 7).value == 10
    with pytest.raises(SearchRefused):
        exact_eg_graph(10, 5)


def test_exact_hypergraph_small():
    assert exact_eg_hypergraph(6, 7, 3).value == 20
    res = exact_eg_hypergraph(7, 7, 3)
    assert res.value == 21 == eval_fr(7, 7, 3)
    assert [recognize_extremal(Hypergraph(7, 3, f), 7).verdict for f in res.extremal] == ["Construction42"]
    with pytest.raises(SearchRefused):
        exact_eg_hypergraph(12, 7, 3)


def test_exact_budget_flags_inexact():
    res = exact_eg_hypergraph(8, 7, 3, budget=SearchBudget(max_nodes=50))
    assert not res.exact and res.value == eval_fr(8, 7, 3)


def test_exact_mixed_at_least_hypergraph():
    # EG_r <= m_r at desk scale
    assert exact_mixed(7, 7, 3).value >= exact_eg_hypergraph(7, 7, 3).value


def test_hunt_deterministic_and_thread_independent():
    a = random_hunt(9, 7, 3, 40, seed=7)
    b = random_hunt(9, 7, 3, 40, seed=7, threads=2)
    assert a.to_json() == b.to_json() and a.ok
    with pytest.raises(ValueError):
        random_hunt(9, 7, 3, 0)


def test_hunt_mixed_small():
    assert random_hunt(9, 7, 3, 50, seed=7, mixed=True).ok


def test_scan_examples():
    rep = inequality_scan(["family-count"], ScanGrid(r_max=3, k_max=10))
    assert rep.ok
    f0, f1, f2, f3 = family_partition(10, 3)
    assert len(f1) == 20 and len(f2) + len(f3) == 8 * 6
    assert len(f1) + len(f2) + len(f3) <= len(f0) == 84
    assert check_family_partition(16, 5) == ""
    rep = inequality_scan(["ur-shift"], ScanGrid(r_max=3, k_max=7, n_max=12))
    assert rep.ok and rep.checked > 0


def test_scan_skips_outside_regime():
    rep = inequality_scan(["ur-bound"], ScanGrid(r_min=2, r_max=3, k_min=6, k_max=8, n_max=20))
    assert rep.skipped > 0 and rep.ok


def test_scan_unknown_claim():
    with pytest.raises(ValueError):
        inequality_scan(["nope"])


def test_report_formats():
    rep = inequality_scan(["block-bound"], ScanGrid(r_max=4, k_max=12))
    doc = json.loads(rep.to_json())
    assert doc["schema"] == SCHEMA and doc["violations"] == []
    tsv = rep.to_tsv().splitlines()
    assert tsv[0].startswith("# " + SCHEMA) and tsv[1] == "claim\tr\tk\tchecked\tmin_slack"
