"""Small brute-force reference implementations.

These exist to cross-check the fast certifying pipeline on small
instances, so they trade speed for obviousness and share nothing with
it.  Each entry point guards its input size explicitly; the limits are
where exhaustive search stops being comfortable, not hard walls.
"""

from __future__ import annotations

from .graph import Graph, _bits


class OracleSizeError(ValueError):
    """Instance too large for the requested brute-force computation."""


def _guard(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise OracleSizeError(f"{what} is limited to {limit} vertices, got {g.n}")


def chromatic_bf(g: Graph) -> int:
    """Exact chromatic number by backtracking, up to 14 vertices."""
    _guard(g, 14, "chromatic_bf")
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(n), key=lambda v: -g.degree(v))
    col = [0] * n

    def fits(idx: int, k: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        forb = 0
        for u in g.neighbors(v):
            forb |= 1 << col[u]
        cap = min(k, used + 1)
        for c in range(1, cap + 1):
            if forb >> c & 1:
                continue
            col[v] = c
            if fits(idx + 1, k, max(used, c)):
                return True
            col[v] = 0
        return False

    for k in range(1, n + 1):
        if fits(0, k, 0):
            return k
    raise AssertionError("unreachable")


def omega_bf(g: Graph) -> int:
    """Exact clique number by branch and bound, up to 20 vertices."""
    _guard(g, 20, "omega_bf")
    if g.n == 0:
        return 0
    rows = [g.neighbor_mask(v) for v in range(g.n)]
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            bit = cand & -cand
            cand ^= bit
            expand(cand & rows[bit.bit_length() - 1], size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), up to 30 vertices."""
    _guard(g, 30, "maximal_cliques")
    if g.n == 0:
        return []
    rows = [g.neighbor_mask(v) for v in range(g.n)]
    out: list[tuple[int, ...]] = []

    def bk(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(tuple(_bits(r)))
            return
        pool = p | x
        piv = -1
        piv_deg = -1
        for u in _bits(pool):
            d = (p & rows[u]).bit_count()
            if d > piv_deg:
                piv, piv_deg = u, d
        ext = p & ~rows[piv]
        while ext:
            bit = ext & -ext
            ext ^= bit
            v = bit.bit_length() - 1
            bk(r | bit, p & rows[v], x & rows[v])
            p ^= bit
            x |= bit

    bk(0, (1 << g.n) - 1, 0)
    return out


def is_stable_set(g: Graph, verts) -> bool:
    vs = list(verts)
    if len(set(vs)) != len(vs):
        raise ValueError("repeated vertices")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return all(not g.has_edge(u, w) for i, u in enumerate(vs) for w in vs[i + 1:])


def is_strong_stable_set(g: Graph, verts) -> bool:
    """Does this stable set meet every maximal clique?  Up to 30 vertices.

    Raises ValueError when the input is not stable; an empty graph has
    no maximal cliques to meet, so the empty set qualifies there.
    """
    _guard(g, 30, "is_strong_stable_set")
    if not is_stable_set(g, verts):
        raise ValueError("input is not a stable set")
    smask = 0
    for v in verts:
        smask |= 1 << v
    for q in maximal_cliques(g):
        qmask = 0
        for v in q:
            qmask |= 1 << v
        if smask & qmask == 0:
            return False
    return True


def is_meyniel_bf(g: Graph) -> bool:
    """Does every odd cycle of length >= 5 carry at least two chords?

    Exhaustive cycle enumeration, up to 10 vertices.  Each cycle is
    visited once: smallest vertex first, oriented so the second entry is
    below the last.  A branch whose partial path already holds two
    chords is abandoned, since any cycle through it is fine.
    """
    _guard(g, 10, "is_meyniel_bf")
    n = g.n
    path = [0] * (n + 1)

    def extend(s: int, depth: int, chords: int) -> bool:
        # returns True when a bad cycle (odd >= 5, <= 1 chord) exists
        last = path[depth - 1]
        for u in g.neighbors(last):
            if u <= s or u in path[1:depth]:
                continue
            added = 0
            for t in range(1, depth - 1):
                if g.has_edge(u, path[t]):
                    added += 1
            # the edge back to the start is a closing edge for u but a
            # chord for every vertex placed beyond it
            prev_close = 1 if depth >= 3 and g.has_edge(s, last) else 0
            total = chords + added + prev_close
            if total >= 2:
                continue
            path[depth] = u
            if depth >= 4 and depth % 2 == 0 and g.has_edge(u, s) and path[1] < u:
                return True
            if extend(s, depth + 1, total):
                return True
        return False

    for s in range(n):
        path[0] = s
        if extend(s, 1, 0):
            return False
    return True
