"""Nice orderings of maximal stable sets.

An ordered maximal stable set s_1, ..., s_k is *nice* when for every
i >= 2 there is no induced four-vertex path t - a - b - s_i in which t
stands for the already-placed part: concretely, no pair a, b with

    a adjacent to some s_j with j < i,
    a and b adjacent,
    b adjacent to s_i,
    a not adjacent to s_i,
    b not adjacent to any s_j with j < i.

Such a pair is returned as a witness; it seeds the odd-path machinery in
the obstruction module.  The scan is cubic in the worst case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


class NotStableSetError(ValueError):
    """The given order contains an adjacent pair."""


class NotMaximalError(ValueError):
    """Some outside vertex has no neighbor in the set."""


@dataclass(frozen=True)
class NiceStableSetCert:
    """A maximal stable set in an order that passed nice_check."""

    order: tuple[int, ...]


@dataclass(frozen=True)
class NiceCheckWitness:
    """The pair (a, b) violating niceness at position `index` (1-based, >= 2)."""

    index: int
    a: int
    b: int


def prefix_adjacent(g: Graph, order, i: int, u: int) -> bool:
    """Is u adjacent to one of the first i vertices of `order`?"""
    return any(g.has_edge(u, s) for s in order[:i])


def nice_check(g: Graph, order) -> NiceCheckWitness | None:
    """Check an ordered stable set for niceness.

    Returns None if the order is nice, else the first witness in
    (index, a, b) lexicographic order.  Raises NotStableSetError or
    NotMaximalError (in that precedence) if the input is not a maximal
    stable set, and ValueError for out-of-range or repeated vertices.
    """
    s = tuple(order)
    n = g.n
    if len(set(s)) != len(s):
        raise ValueError("stable set entries must be distinct")
    for v in s:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range")
    for ii, u in enumerate(s):
        for w in s[ii + 1:]:
            if g.has_edge(u, w):
                raise NotStableSetError(f"adjacent pair {u}-{w} in stable set")
    in_s = [False] * n
    for v in s:
        in_s[v] = True
    # first_s[u]: 1-based position of the first member adjacent to u (0 if none)
    first_s = [0] * n
    for idx, sv in enumerate(s, start=1):
        for u in g.neighbors(sv):
            if first_s[u] == 0:
                first_s[u] = idx
    for u in range(n):
        if not in_s[u] and first_s[u] == 0:
            raise NotMaximalError(f"vertex {u} has no neighbor in the set")

    newly = [[] for _ in range(len(s) + 1)]
    for u in range(n):
        if 0 < first_s[u] <= len(s):
            newly[first_s[u]].append(u)
    for i in range(2, len(s) + 1):
        si = s[i - 1]
        bs = newly[i]
        if not bs:
            continue
        for a in range(n):
            if 0 < first_s[a] < i and not g.has_edge(a, si):
                for b in bs:
                    if g.has_edge(a, b):
                        return NiceCheckWitness(index=i, a=a, b=b)
    return None
