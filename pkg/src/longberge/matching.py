"""Bipartite matching by augmenting paths (Kuhn), with deterministic scan order."""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence


def max_matching(left: Sequence[Hashable], options: Mapping[Hashable, Sequence[Hashable]],
                 banned: Hashable | None = None) -> dict:
    """Maximum matching from ``left`` items into right items.

    ``options[x]`` lists the right items ``x`` may take, in preference order.  The
    right item ``banned`` is never used.  Returns ``{left: right}`` for matched items.
    """
    owner: dict = {}
    match: dict = {}

    def augment(x, seen: set) -> bool:
        for y in options.get(x, ()):
            if y == banned or y in seen:
                continue
            seen.add(y)
            if y not in owner or augment(owner[y], seen):
                owner[y] = x
                match[x] = y
                return True
        return False

    for x in left:
        augment(x, set())
    return match


def hall_violator(left: Sequence[Hashable], options: Mapping[Hashable, Sequence[Hashable]],
                  match: Mapping, banned: Hashable | None = None) -> list:
    """Left items reachable by alternating paths from an unmatched left item.

    For a maximum matching ``match`` that misses some left item this set S has
    ``|N(S)| < |S|`` (neighbourhood taken without ``banned``).  Returns [] if every
    left item is matched.
    """
    owner = {y: x for x, y in match.items()}
    free = [x for x in left if x not in match]
    if not free:
        return []
    reached = set(free)
    stack = list(free)
    while stack:
        x = stack.pop()
        for y in options.get(x, ()):
            if y == banned:
                continue
            z = owner.get(y)
            if z is not None and z not in reached:
                reached.add(z)
                stack.append(z)
    return [x for x in left if x in reached]
