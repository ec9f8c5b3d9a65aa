"""The coloring is checked against a slow dense replay of its own rules:
labels recomputed from scratch each step, lex-maximality verified by direct
vector comparison, colors by explicit mex.  No sparse labels, no partition."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from meyniel.graph import build, generate, GenSpec
from meyniel.lexcolor import (
    ColorTrace,
    ForcedOrderError,
    TieBreak,
    lex_color,
    lex_compare,
)

from conftest import graphs


def _revlex_dense(a, b):
    for c in range(max(len(a), len(b)) - 1, -1, -1):
        av = a[c] if c < len(a) else 0
        bv = b[c] if c < len(b) else 0
        if av != bv:
            return 1 if av > bv else -1
    return 0


def replay_and_check(g, trace, check_choice=True):
    n = g.n
    assert sorted(trace.order) == list(range(n))
    labels = [[0] * (n + 1) for _ in range(n)]
    colored = [False] * n
    for step, x in enumerate(trace.order, start=1):
        assert trace.step_of[x] == step
        if check_choice:
            for v in range(n):
                if colored[v] or v == x:
                    continue
                cmp = _revlex_dense(labels[x], labels[v])
                assert cmp >= 0, f"step {step}: {v} outranks chosen {x}"
                if cmp == 0:
                    assert x < v, f"step {step}: tie broken upward to {x} over {v}"
        nbr_cols = {trace.color_of[u] for u in g.neighbors(x) if colored[u]}
        mex = 1
        while mex in nbr_cols:
            mex += 1
        assert trace.color_of[x] == mex
        colored[x] = True
        for y in g.neighbors(x):
            c = trace.color_of[x]
            if not colored[y] and labels[y][c - 1] == 0:
                labels[y][c - 1] = n - step
    by_color = {}
    for x in trace.order:
        by_color.setdefault(trace.color_of[x], []).append(x)
    assert trace.num_colors == (max(by_color) if by_color else 0)
    assert trace.classes == tuple(
        tuple(by_color[c]) for c in range(1, trace.num_colors + 1)
    )


@given(graphs(max_n=10))
@settings(max_examples=300)
def test_default_run_matches_dense_replay(g):
    replay_and_check(g, lex_color(g))


@given(graphs(max_n=10), st.sampled_from(["naive", "refined"]))
def test_both_strategies_match_replay(g, strategy):
    replay_and_check(g, lex_color(g, strategy=strategy))


@given(graphs(max_n=14))
@settings(max_examples=300)
def test_strategies_agree(g):
    assert lex_color(g, strategy="naive") == lex_color(g, strategy="refined")


def test_forced_order_runs_and_errors():
    g = generate(GenSpec(family="builtin", name="p6bar"))
    trace = lex_color(g, TieBreak.forced((1, 4, 2, 0, 3, 5)))
    assert trace.order == (1, 4, 2, 0, 3, 5)
    replay_and_check(g, trace, check_choice=False)
    # u is a non-neighbor of v, so its label is still empty at step 2
    with pytest.raises(ForcedOrderError) as exc:
        lex_color(g, TieBreak.forced((1, 0, 2, 3, 4, 5)))
    assert exc.value.step == 2
    assert exc.value.vertex == 0
    assert exc.value.competitor == 3


def test_forced_order_must_be_permutation():
    g = build(3, [(0, 1)])
    with pytest.raises(ValueError):
        lex_color(g, TieBreak.forced((0, 1)))
    with pytest.raises(ValueError):
        lex_color(g, TieBreak.forced((0, 1, 1)))


@given(graphs(min_n=1, max_n=10), st.integers(0, 9))
def test_anchored_starts_at_anchor(g, v):
    if v >= g.n:
        return
    trace = lex_color(g, TieBreak.anchored(v))
    assert trace.order[0] == v
    assert trace.color_of[v] == 1
    replay_and_check(g, trace, check_choice=False)


def test_anchor_out_of_range():
    g = build(2, [])
    with pytest.raises(ValueError):
        lex_color(g, TieBreak.anchored(2))


def test_lex_compare_basics():
    assert lex_compare({}, {}) == 0
    assert lex_compare({3: 1}, {2: 9}) == 1
    assert lex_compare({2: 3}, {2: 5}) == -1
    assert lex_compare({3: 1}, {3: 1, 1: 4}) == -1
    assert lex_compare((0, 2), {2: 2}) == 0
    assert lex_compare((5, 0, 1), (4, 0, 1)) == 1


@given(
    st.dictionaries(st.integers(1, 6), st.integers(1, 50), max_size=6),
    st.dictionaries(st.integers(1, 6), st.integers(1, 50), max_size=6),
)
def test_lex_compare_matches_dense_reference(da, db):
    dense_a = [da.get(c, 0) for c in range(1, 7)]
    dense_b = [db.get(c, 0) for c in range(1, 7)]
    assert lex_compare(da, db) == _revlex_dense(dense_a, dense_b)
    assert lex_compare(dense_a, dense_b) == _revlex_dense(dense_a, dense_b)
    assert lex_compare(da, db) == -lex_compare(db, da)


def test_trace_class_of():
    g = build(3, [(0, 1)])
    trace = lex_color(g)
    assert isinstance(trace, ColorTrace)
    assert trace.class_of(1) == trace.classes[0]
    with pytest.raises(ValueError):
        trace.class_of(0)
    with pytest.raises(ValueError):
        trace.class_of(trace.num_colors + 1)
