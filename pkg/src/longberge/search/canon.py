"""Canonical forms for small set systems (graphs, r-graphs, mixed families).

Two independent routes:

* ``canonical_form`` - individualisation/refinement: colour refinement on the
  incidence structure, branching on the first smallest non-singleton cell, twin
  vertices (whose transposition is an automorphism) explored once.  The form is
  the lexicographically least relabelled edge list over the leaves.
* ``brute_canonical_form`` - lexicographically least incidence bitstring over all
  n! vertex permutations (vectorised with numpy; n <= 8).

The two produce different strings but must induce the same isomorphism classes.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Sequence

import numpy as np

Edge = tuple[int, ...]
Form = tuple[int, tuple[Edge, ...]]


def _refine(n: int, inc: list[list[Edge]], colors: list[int]) -> list[int]:
    ncol = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            items = sorted((len(e), tuple(sorted(colors[u] for u in e if u != v))) for e in inc[v])
            sigs.append((colors[v], tuple(items)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[s] for s in sigs]
        if len(order) == ncol:
            return new
        colors, ncol = new, len(order)


def _twin_classes(n: int, edge_set: frozenset[Edge], cells: list[list[int]]) -> list[int]:
    """rep[v] = smallest u in v's cell such that swapping u and v fixes the edge set."""
    rep = list(range(n))
    for cell in cells:
        if len(cell) < 2:
            continue
        for i, v in enumerate(cell):
            if rep[v] != v:
                continue
            for w in cell[i + 1:]:
                if rep[w] != w:
                    continue
                if _swap_is_auto(edge_set, v, w):
                    rep[w] = v
    return rep


def _swap_is_auto(edge_set: frozenset[Edge], a: int, b: int) -> bool:
    for e in edge_set:
        ina, inb = a in e, b in e
        if ina == inb:
            continue
        moved = tuple(sorted(b if x == a else a if x == b else x for x in e))
        if moved not in edge_set:
            return False
    return True


def canonical_form(n: int, edges: Sequence[Sequence[int]]) -> Form:
    """Isomorphism-invariant form of a set system on ``0..n-1``."""
    es = [tuple(sorted(e)) for e in edges]
    inc: list[list[Edge]] = [[] for _ in range(n)]
    for e in es:
        for v in e:
            inc[v].append(e)
    colors = _refine(n, inc, [0] * n)
    edge_set = frozenset(es)
    best: list[tuple[Edge, ...] | None] = [None]
    twins: list[int] | None = None

    def leaf(cols: list[int]) -> None:
        cert = tuple(sorted(tuple(sorted(cols[v] for v in e)) for e in es))
        if best[0] is None or cert < best[0]:
            best[0] = cert

    def search(cols: list[int]) -> None:
        nonlocal twins
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(cols):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            leaf(cols)
            return
        if twins is None:
            twins = _twin_classes(n, edge_set, [c for c in cells.values()])
        target_color = min((c for c, vs in cells.items() if len(vs) > 1),
                           key=lambda c: (len(cells[c]), c))
        cell = cells[target_color]
        tried: set[int] = set()
        for v in cell:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            keyed = [(c, 0 if u == v else 1) if c == target_color else (c, 0) for u, c in enumerate(cols)]
            order = sorted(set(keyed))
            rank = {k: i for i, k in enumerate(order)}
            search(_refine(n, inc, [rank[k] for k in keyed]))

    search(colors)
    return (n, best[0] if best[0] is not None else ())


_PERM_CACHE: dict[int, np.ndarray] = {}


def _perms(n: int) -> np.ndarray:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return _PERM_CACHE[n]


_IMAGE_CACHE: dict[tuple[int, int], np.ndarray] = {}


def _subset_images(n: int, size: int) -> np.ndarray:
    """img[i, j] = rank of the image of the j-th ``size``-subset under permutation i."""
    key = (n, size)
    if key not in _IMAGE_CACHE:
        subs = list(combinations(range(n), size))
        rank = {s: j for j, s in enumerate(subs)}
        perms = _perms(n)
        img = np.empty((len(perms), len(subs)), dtype=np.int16)
        for j, s in enumerate(subs):
            mapped = np.sort(perms[:, list(s)], axis=1)
            codes = np.zeros(len(perms), dtype=np.int64)
            for c in range(size):
                codes = codes * n + mapped[:, c]
            table = np.zeros(n ** size, dtype=np.int16)
            for t, rk in rank.items():
                cc = 0
                for x in t:
                    cc = cc * n + x
                table[cc] = rk
            img[:, j] = table[codes]
        _IMAGE_CACHE[key] = img
    return _IMAGE_CACHE[key]


def brute_canonical_form(n: int, edges: Sequence[Sequence[int]]) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Least incidence bitstring over all vertex permutations (n <= 8).

    Positions are indexed by (size, lexicographic rank) of all subsets that occur as
    edge sizes; a family is mapped to the 0/1 vector over these positions and the
    lexicographically smallest image under relabelling is returned, tagged with n
    and the edge sizes.
    """
    if n > 8:
        raise ValueError("brute-force canonical form is limited to n <= 8")
    es = [tuple(sorted(e)) for e in edges]
    sizes = sorted({len(e) for e in es})
    perms = _perms(n)
    offset, width = {}, 0
    for p in sizes:
        offset[p] = width
        width += len(list(combinations(range(n), p)))
    images = np.zeros((len(perms), width), dtype=np.uint8)
    rows = np.arange(len(perms))
    for p in sizes:
        rank = {s: j for j, s in enumerate(combinations(range(n), p))}
        img = _subset_images(n, p)
        for e in es:
            if len(e) == p:
                images[rows, offset[p] + img[:, rank[e]]] = 1
    if width == 0:
        return (n, (), ())
    packed = np.packbits(images, axis=1)
    alive = np.arange(len(perms))
    for c in range(packed.shape[1]):
        col = packed[alive, c]
        alive = alive[col == col.min()]
        if len(alive) == 1:
            break
    return (n, tuple(sizes), tuple(int(x) for x in images[alive[0]]))


def relabel_to_form(form: Form) -> list[Edge]:
    """Edge list of the canonical representative."""
    return list(form[1])
