"""Pointwise checks of the counting inequalities behind the upper bound, in exact
integer arithmetic.

Notation: t = floor((k-1)/2), valid s satisfy k-t <= s <= k-2, and
u_r(n,k,s) = max{C(s,2), C(s,r)} + (n-s) max{k-s, C(k-s,r-1)}.

Claims (identifier: statement, side conditions):

* ``ur-bound``: u_r(n,k,s) <= f_r(n,k) - C(r,2), n >= k.
* ``block-bound``: (k-2) max{k-s, C(k-s,r-1)} < C(k-1,r) - C(r,2).
* ``small-t-bound``: C(k-t,r) + (k-3) C(t,r-1) < C(k-1,r) - C(r,2), for 3 <= r < t.
* ``family-count``: C(k-t,r) + (k-2) C(t,r-1) <= C(k-1,r); for k <= 16 also the
  explicit families F1, F2, F3 inside F0 = C([k-1], r) are built and checked to be
  pairwise disjoint with the expected sizes.
* ``near-clique``: u_r(n,k,k-2) <= f_r(n,k) - C(r,2), for k <= n <= 2k-3.
* ``large-r``: u_r(n,k,k-t) < C(k-1,r) + (n-k+1) - C(r,2), for r >= t, k <= n <= 2k-t-3.
* ``small-r``: u_r(n,k,k-t) < C(k-1,r) - C(r,2), for r < t, k <= n <= 2k-t-3.
* ``ur-shift``: u_r(n,k,s) = u_r(n-k+2,k,s) + (k-2) max{k-s, C(k-s,r-1)}, n >= k-2+s.
* ``superadditive`` / ``superadditive-plus``: f(n1,k) + f(n2,k) <= f(n1+n2-1,k) for
  f = f_r resp. f_r^+, with equality at n2 = k-1, and f(1,k) = 0.

Points outside the regime (r < 3, k < r+4, n < k) are skipped and counted.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from itertools import combinations

import numpy as np

from ..extremal import eval_fr, eval_fr_plus, ur_value
from ..hypercore import binom
from .report import ScanReport, Violation

CLAIMS = ("ur-bound", "block-bound", "small-t-bound", "family-count", "near-clique", "large-r",
          "small-r", "ur-shift", "superadditive", "superadditive-plus")

ENUM_K_MAX = 16


@dataclass(frozen=True)
class ScanGrid:
    r_min: int = 3
    r_max: int = 10
    k_max: int = 40
    n_max: int = 300
    n12_min: int = 2
    n12_max: int = 300
    k_min: int | None = None  # default r + 4 for each r

    def cells(self):
        """(r, k, in_regime) over the (r, k) part of the grid."""
        for r in range(self.r_min, self.r_max + 1):
            lo = r + 4 if self.k_min is None else self.k_min
            for k in range(lo, self.k_max + 1):
                yield r, k, r >= 3 and k >= r + 4


def _mx(k: int, s: int, r: int) -> int:
    return max(k - s, binom(k - s, r - 1))


class _Cell:
    """Accumulates one report row per (r, k)."""

    def __init__(self, rep: ScanReport, claim: str, r: int, k: int):
        self.rep, self.claim, self.r, self.k = rep, claim, r, k
        self.checked = 0
        self.slack: int | None = None

    def check(self, params: tuple, lhs: int, rhs: int, strict: bool) -> None:
        self.checked += 1
        ok = lhs < rhs if strict else lhs <= rhs
        d = rhs - lhs
        self.slack = d if self.slack is None else min(self.slack, d)
        if not ok:
            self.rep.violations.append(Violation((self.claim,) + params, lhs, rhs))

    def equal(self, params: tuple, lhs: int, rhs: int) -> None:
        self.checked += 1
        if lhs != rhs:
            self.rep.violations.append(Violation((self.claim,) + params, lhs, rhs, "equality"))

    def close(self) -> None:
        self.rep.checked += self.checked
        if self.checked:
            self.rep.rows.append((self.claim, self.r, self.k, self.checked,
                                  "" if self.slack is None else self.slack))


def family_partition(k: int, r: int) -> tuple[set, set, set, set]:
    """F0, F1, F2, F3 on the vertex set {1, ..., k-1}."""
    t = (k - 1) // 2
    f0 = set(combinations(range(1, k), r))
    f1 = set(combinations(range(1, k - t + 1), r))
    f2 = {tuple(sorted(e + (i,))) for e in combinations(range(1, t + 1), r - 1) for i in range(k - t + 1, k)}
    f3 = {tuple(sorted(f + (j,))) for f in combinations(range(k - t, k), r - 1) for j in range(1, k - t)}
    return f0, f1, f2, f3


def check_family_partition(k: int, r: int) -> str:
    """Empty string when F1, F2, F3 are disjoint subfamilies of F0 of the expected sizes."""
    t = (k - 1) // 2
    f0, f1, f2, f3 = family_partition(k, r)
    want = (binom(k - 1, r), binom(k - t, r), (t - 1) * binom(t, r - 1), (k - t - 1) * binom(t, r - 1))
    got = (len(f0), len(f1), len(f2), len(f3))
    if got != want:
        return f"sizes {got} != {want}"
    if not (f1 | f2 | f3) <= f0:
        return "not inside F0"
    if f1 & f2 or f1 & f3 or f2 & f3:
        return "not disjoint"
    return ""


def _point_claims(rep: ScanReport, claim: str, grid: ScanGrid) -> None:
    for r, k, regime in grid.cells():
        if not regime:
            rep.skipped += 1
            continue
        t = (k - 1) // 2
        cell = _Cell(rep, claim, r, k)
        top = binom(k - 1, r) - binom(r, 2)
        svals = range(k - t, k - 1)
        if claim == "ur-bound":
            for n in range(k, grid.n_max + 1):
                bound = eval_fr(n, k, r) - binom(r, 2)
                for s in svals:
                    cell.check((r, k, n, s), ur_value(n, k, r, s), bound, False)
        elif claim == "block-bound":
            for s in svals:
                cell.check((r, k, s), (k - 2) * _mx(k, s, r), top, True)
        elif claim == "small-t-bound":
            if r < t:
                cell.check((r, k), binom(k - t, r) + (k - 3) * binom(t, r - 1), top, True)
            else:
                rep.skipped += 1
        elif claim == "family-count":
            cell.check((r, k), binom(k - t, r) + (k - 2) * binom(t, r - 1), binom(k - 1, r), False)
            if k <= ENUM_K_MAX:
                cell.checked += 1
                msg = check_family_partition(k, r)
                if msg:
                    rep.violations.append(Violation((claim, r, k), msg, "", "partition"))
        elif claim == "near-clique":
            for n in range(k, min(2 * k - 3, grid.n_max) + 1):
                cell.check((r, k, n), ur_value(n, k, r, k - 2), eval_fr(n, k, r) - binom(r, 2), False)
        elif claim in ("large-r", "small-r"):
            if (claim == "large-r") != (r >= t):
                rep.skipped += 1
            for n in range(k, min(2 * k - t - 3, grid.n_max) + 1):
                if claim == "large-r" and r >= t:
                    cell.check((r, k, n), ur_value(n, k, r, k - t), top + (n - k + 1), True)
                elif claim == "small-r" and r < t:
                    cell.check((r, k, n), ur_value(n, k, r, k - t), top, True)
        elif claim == "ur-shift":
            for s in svals:
                for n in range(max(k, k - 2 + s), grid.n_max + 1):
                    cell.equal((r, k, n, s), ur_value(n, k, r, s),
                               ur_value(n - k + 2, k, r, s) + (k - 2) * _mx(k, s, r))
        cell.close()


def _superadditive(rep: ScanReport, plus: bool, grid: ScanGrid) -> None:
    claim = "superadditive-plus" if plus else "superadditive"
    ev = eval_fr_plus if plus else eval_fr
    lo, hi = grid.n12_min, grid.n12_max
    for r, k, regime in grid.cells():
        if not regime:
            rep.skipped += 1
            continue
        table = np.array([0] + [ev(n, k, r) for n in range(1, 2 * hi)], dtype=np.int64)
        cell = _Cell(rep, claim, r, k)
        cell.equal((r, k, 1), int(table[1]), 0)
        ns = np.arange(lo, hi + 1)
        lhs = table[ns][:, None] + table[ns][None, :]
        rhs = table[ns[:, None] + ns[None, :] - 1]
        bad = np.argwhere(lhs > rhs)
        for i, j in bad[:100]:
            rep.violations.append(Violation((claim, r, k, int(ns[i]), int(ns[j])), int(lhs[i, j]), int(rhs[i, j])))
        cell.checked += lhs.size
        slack = int((rhs - lhs).min())
        cell.slack = slack if cell.slack is None else min(cell.slack, slack)
        if lo <= k - 1 <= hi:
            j = k - 1 - lo
            eq = lhs[:, j] == rhs[:, j]
            cell.checked += len(ns)
            for i in np.flatnonzero(~eq)[:100]:
                rep.violations.append(Violation((claim, r, k, int(ns[i]), k - 1), int(lhs[i, j]),
                                                int(rhs[i, j]), "equality"))
        cell.close()


def inequality_scan(claims=None, grid: ScanGrid | None = None) -> ScanReport:
    """Evaluate the selected claims (default: all) over ``grid``."""
    grid = grid or ScanGrid()
    claims = tuple(CLAIMS if claims is None else claims)
    unknown = [c for c in claims if c not in CLAIMS]
    if unknown:
        raise ValueError(f"unknown claims {unknown}; choose from {', '.join(CLAIMS)}")
    t0 = time.monotonic()
    rep = ScanReport(",".join(claims), asdict(grid), columns=("claim", "r", "k", "checked", "min_slack"))
    for c in claims:
        if c.startswith("superadditive"):
            _superadditive(rep, c.endswith("plus"), grid)
        else:
            _point_claims(rep, c, grid)
    rep.sort()
    rep.elapsed = time.monotonic() - t0
    return rep
