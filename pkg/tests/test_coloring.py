"""Rainbow path search, the verifier, the exact oracle and cycle coloring."""
from __future__ import annotations

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowcc import (
    EXCEEDED,
    EdgeColoring,
    GraphError,
    build_graph,
    color_cycle,
    cycle_color_pattern,
    exists_rainbow_path,
    is_rainbow_connected,
    metrics,
    rc_exact,
)
from rainbowcc.factory import complete_graph, cycle_graph, path_graph, star_graph

from helpers import brute_rainbow_connected, random_connected_graph, random_tree


def colored(n, edges, colors):
    g = build_graph(n, edges)
    return EdgeColoring(g, dict(zip(map(tuple, edges), colors)))


def test_single_edge_is_its_own_rainbow_path():
    col = colored(2, [(0, 1)], [7])
    assert exists_rainbow_path(col, 0, 1) == (0, 1)


def test_repeated_color_blocks_two_edge_path():
    col = colored(3, [(0, 1), (1, 2)], [1, 1])
    assert exists_rainbow_path(col, 0, 2) is None


def test_alternating_square_connects_opposite_corners():
    col = colored(4, [(0, 1), (1, 2), (2, 3), (3, 0)], [1, 2, 1, 2])
    path = exists_rainbow_path(col, 0, 2)
    assert path is not None
    used = [col.color_of(a, b) for a, b in zip(path, path[1:])]
    assert sorted(used) == [1, 2]


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=50, deadline=None)
def test_rainbow_path_existence_is_symmetric(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n_max=7)
    col = EdgeColoring(g, {e: rng.randrange(4) for e in g.edges})
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert (exists_rainbow_path(col, u, v) is None) == (
                exists_rainbow_path(col, v, u) is None
            )


def test_any_coloring_of_complete_graph_verifies():
    rng = random.Random(5)
    g = complete_graph(5)
    col = EdgeColoring(g, {e: rng.randrange(3) for e in g.edges})
    assert is_rainbow_connected(col).rainbow_connected


def test_hexagon_optimal_scheme_verifies():
    g = cycle_graph(6)
    edges = [(i, (i + 1) % 6) for i in range(6)]
    col = EdgeColoring(g, dict(zip(map(lambda e: tuple(sorted(e)), edges), [1, 2, 3, 1, 2, 3])))
    assert is_rainbow_connected(col).rainbow_connected


def test_monochrome_hexagon_fails_with_lexmin_pair():
    g = cycle_graph(6)
    col = EdgeColoring(g, {e: 1 for e in g.edges})
    report = is_rainbow_connected(col)
    assert not report.rainbow_connected
    assert report.failing_pair == (0, 2)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=40, deadline=None)
def test_verifier_matches_brute_force(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n_max=6)
    col = EdgeColoring(g, {e: rng.randrange(3) for e in g.edges})
    assert is_rainbow_connected(col).rainbow_connected == brute_rainbow_connected(col)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=30, deadline=None)
def test_witness_paths_revalidate(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n_max=7)
    col = EdgeColoring(g, {e: rng.randrange(6) for e in g.edges})
    report = is_rainbow_connected(col, witnesses=True)
    if not report.rainbow_connected:
        return
    assert report.witness_paths is not None
    for (u, v), path in report.witness_paths.items():
        assert path[0] == u and path[-1] == v
        cs = []
        for a, b in zip(path, path[1:]):
            assert col.graph.has_edge(a, b)
            cs.append(col.color_of(a, b))
        assert len(cs) == len(set(cs))


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=25, deadline=None)
def test_verified_palette_is_at_least_diameter(seed):
    rng = random.Random(seed)
    g = random_connected_graph(rng, n_max=7)
    col = EdgeColoring(g, {e: rng.randrange(5) for e in g.edges})
    if is_rainbow_connected(col).rainbow_connected:
        assert col.palette_size >= metrics(g).diameter


def test_rc_exact_small_values():
    assert rc_exact(complete_graph(4)) == 1
    assert rc_exact(path_graph(4)) == 3
    assert rc_exact(cycle_graph(6)) == 3


def test_rc_exact_complete_graphs_are_one():
    for n in range(2, 7):
        assert rc_exact(complete_graph(n)) == 1


def test_rc_exact_trees_need_all_edges_distinct():
    assert rc_exact(star_graph(6)) == 5
    assert rc_exact(path_graph(6)) == 5
    rng = random.Random(11)
    for _ in range(4):
        t = random_tree(rng, rng.randint(3, 7))
        assert rc_exact(t) == t.n - 1


def test_rc_exact_cycles():
    for n in range(4, 9):
        assert rc_exact(cycle_graph(n)) == math.ceil(n / 2)
    assert rc_exact(cycle_graph(3)) == 1


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=20, deadline=None)
def test_rc_exact_at_least_diameter(seed):
    g = random_connected_graph(random.Random(seed), n_max=7)
    value = rc_exact(g)
    assert value is not EXCEEDED
    assert value >= metrics(g).diameter


def test_rc_exact_budget_and_work_cap():
    g = cycle_graph(8)
    # a budget below rc is a definitive negative, not an inconclusive cap hit
    with pytest.raises(GraphError):
        rc_exact(g, budget=3)
    assert rc_exact(g, work_cap=1) is EXCEEDED


def test_cycle_pattern_uses_exactly_half_rounded_up():
    for length in range(3, 31):
        pattern = cycle_color_pattern(length)
        assert len(pattern) == length
        assert len(set(pattern)) == math.ceil(length / 2)


def test_color_cycle_hexagon():
    g = cycle_graph(6)
    col = color_cycle(g, list(range(6)))
    assert [col.color_of(i, (i + 1) % 6) for i in range(6)] == [0, 1, 2, 0, 1, 2]
    assert is_rainbow_connected(col).rainbow_connected


def test_color_cycle_triangle_and_pentagon():
    g3 = cycle_graph(3)
    col3 = color_cycle(g3, [0, 1, 2])
    # cyclic repetition of the 2-color palette
    assert [col3.color_of(0, 1), col3.color_of(1, 2), col3.color_of(2, 0)] == [0, 1, 0]
    assert col3.palette_size == 2
    assert is_rainbow_connected(col3).rainbow_connected

    g5 = cycle_graph(5)
    col5 = color_cycle(g5, list(range(5)))
    assert [col5.color_of(i, (i + 1) % 5) for i in range(5)] == [0, 1, 2, 0, 1]
    assert is_rainbow_connected(col5).rainbow_connected


def test_color_cycle_rejects_non_cycles():
    g = path_graph(4)
    with pytest.raises(GraphError):
        color_cycle(g, [0, 1, 2, 3])


def test_partial_coloring_refuses_verification():
    g = cycle_graph(4)
    col = EdgeColoring(g)
    col.assign(0, 1, 0)
    with pytest.raises(GraphError):
        is_rainbow_connected(col)


def test_palette_cap_is_enforced():
    g = path_graph(130)
    col = EdgeColoring(g, {e: i for i, e in enumerate(sorted(g.edges))})
    with pytest.raises(GraphError):
        is_rainbow_connected(col)
