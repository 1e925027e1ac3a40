"""Seeded random counterexample hunts for the extremal bounds.

Plain mode: uniformly random r-graphs with f_r(n,k) + 1 edges must contain a Berge
cycle of length >= k.  Mixed mode: random Sperner (2,r) families with
f_r^+(n,k) + 1 members must have a cycle of length >= k in their 2-shadow.

Trial i draws from ``numpy.random.default_rng([seed, i])``, so results do not
depend on how trials are split across workers.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

import numpy as np

from ..berge import dp_longest_cycle, find_berge_cycle_at_least, graph_has_cycle_at_least, has_berge_cycle_at_least
from ..extremal import eval_fr, eval_fr_plus
from ..hypercore import Hypergraph, MixedHypergraph, serialize_hypergraph, serialize_mixed
from .report import ScanReport, Violation


def sample_hypergraph(n: int, r: int, size: int, rng: np.random.Generator) -> Hypergraph:
    pool = list(combinations(range(n), r))
    idx = rng.choice(len(pool), size=size, replace=False)
    return Hypergraph(n, r, tuple(pool[i] for i in sorted(idx)))


def sample_mixed(n: int, r: int, size: int, rng: np.random.Generator) -> MixedHypergraph:
    """Random Sperner family: scan a uniformly shuffled list of all pairs and r-sets,
    keeping each item compatible with those kept so far, until ``size`` are kept."""
    pool = list(combinations(range(n), 2)) + list(combinations(range(n), r))
    while True:
        order = rng.permutation(len(pool))
        pairs: set = set()
        covered: set = set()
        hyper: list = []
        for i in order:
            e = pool[i]
            if len(e) == 2:
                if e in covered:
                    continue
                pairs.add(e)
            else:
                sh = list(combinations(e, 2))
                if any(p in pairs for p in sh):
                    continue
                hyper.append(e)
                covered.update(sh)
            if len(pairs) + len(hyper) == size:
                return MixedHypergraph(n, r, tuple(pairs), tuple(hyper))


def _plain_trial(h: Hypergraph, k: int) -> bool:
    """True iff h has a Berge cycle of length >= k (exact)."""
    if find_berge_cycle_at_least(h, k) is not None:
        return True
    # an exact second opinion before declaring a counterexample
    if h.r == 3:
        return dp_longest_cycle(h) >= k
    return has_berge_cycle_at_least(h, k)


def _chunk(args) -> tuple[list[tuple], list]:
    n, k, r, seed, lo, hi, mixed = args
    rows, bad = [], []
    for i in range(lo, hi):
        rng = np.random.default_rng([seed, i])
        if mixed:
            m = sample_mixed(n, r, eval_fr_plus(n, k, r) + 1, rng)
            ok = graph_has_cycle_at_least(m.shadow_graph(), k)
            cert = serialize_mixed(m)
        else:
            h = sample_hypergraph(n, r, eval_fr(n, k, r) + 1, rng)
            ok = _plain_trial(h, k)
            cert = serialize_hypergraph(h)
        if not ok:
            bad.append((i, cert))
    return rows, bad


def random_hunt(n: int, k: int, r: int, trials: int, seed: int = 0, mixed: bool = False,
                threads: int = 1) -> ScanReport:
    if trials < 1:
        raise ValueError("trials must be at least 1")
    t0 = time.monotonic()
    claim = "hunt-mixed" if mixed else "hunt-plain"
    bound = eval_fr_plus(n, k, r) if mixed else eval_fr(n, k, r)
    rep = ScanReport(claim, {"n": n, "k": k, "r": r, "trials": trials, "seed": seed,
                             "mode": "mixed" if mixed else "plain", "size": bound + 1},
                     columns=("n", "k", "r", "mode", "size", "trials", "seed", "counterexamples"))
    chunks = _split(trials, max(1, threads) * 4 if threads > 1 else 1)
    jobs = [(n, k, r, seed, lo, hi, mixed) for lo, hi in chunks]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(_chunk, jobs))
    else:
        results = [_chunk(j) for j in jobs]
    for _, bad in results:
        for i, cert in bad:
            rep.violations.append(Violation((n, k, r, i), bound + 1, "no cycle >= k", cert))
    rep.checked = trials
    rep.rows.append((n, k, r, rep.grid["mode"], bound + 1, trials, seed, len(rep.violations)))
    rep.sort()
    rep.elapsed = time.monotonic() - t0
    return rep


def _split(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]
