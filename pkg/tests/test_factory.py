"""Instance generators: towers, stacked triangulations, reference graphs."""
from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowcc import (
    GraphError,
    PlanarEmbedding,
    faces,
    metrics,
    validate_maximal_planar,
    vertex_connectivity,
)
from rainbowcc.factory import (
    SplitMix64,
    clique_tower,
    icosahedron,
    named,
    octahedron,
    petersen,
    stacked_triangulation,
)


def test_prism():
    g = clique_tower(3, 1)
    assert g.n == 6
    assert vertex_connectivity(g) == 3
    assert metrics(g).diameter == 2


def test_k4_tower():
    g = clique_tower(4, 1)
    assert g.n == 8
    assert vertex_connectivity(g) == 4


def test_long_k3_tower():
    g = clique_tower(3, 10)
    assert g.n == 33
    assert metrics(g).diameter == 11


@given(st.integers(min_value=3, max_value=5), st.integers(min_value=1, max_value=8))
@settings(max_examples=20, deadline=None)
def test_tower_diameter_formula(kappa, layers):
    g = clique_tower(kappa, layers)
    assert g.n == kappa * (layers + 1)
    assert metrics(g).diameter == layers + 1
    assert vertex_connectivity(g) == kappa


def test_splitmix64_reference_sequence():
    """Known-answer vectors for the stated 64-bit generator constants."""
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]
    rng = SplitMix64(1234567)
    assert [rng.next_u64() for _ in range(2)] == [
        0x599ED017FB08FC85,
        0x2C73F08458540FA5,
    ]


def test_below_is_uniform_over_range():
    rng = SplitMix64(42)
    draws = [rng.below(7) for _ in range(500)]
    assert set(draws) == set(range(7))


def test_stacked_minimum_is_k4():
    emb = stacked_triangulation(4)
    assert emb.graph.n == 4
    assert emb.graph.edge_count() == 6
    assert len(faces(emb)) == 4
    validate_maximal_planar(emb)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=30, deadline=None)
def test_stacked_five_vertices(seed):
    emb = stacked_triangulation(5, seed)
    assert emb.graph.n == 5
    assert emb.graph.edge_count() == 9
    assert len(faces(emb)) == 6


def test_stacked_fifty_seed_seven():
    emb = stacked_triangulation(50, 7)
    validate_maximal_planar(emb)
    assert emb.graph.edge_count() == 144  # 3n - 6


@given(st.integers(min_value=4, max_value=120), st.integers(min_value=0, max_value=10**6))
@settings(max_examples=30, deadline=None)
def test_stacked_is_maximal_planar_and_3_connected(n, seed):
    emb = stacked_triangulation(n, seed)
    validate_maximal_planar(emb)
    assert emb.graph.edge_count() == 3 * n - 6
    assert vertex_connectivity(emb.graph) >= 3


def test_stacked_is_seed_deterministic():
    a = stacked_triangulation(30, 12345)
    b = stacked_triangulation(30, 12345)
    assert a.graph == b.graph
    assert a.rotation == b.rotation
    c = stacked_triangulation(30, 54321)
    assert c.graph != a.graph or c.rotation != a.rotation


def test_stacked_rejects_tiny():
    with pytest.raises(GraphError):
        stacked_triangulation(3)


def test_octahedron_reference_values():
    emb = octahedron()
    assert emb.graph.n == 6
    assert emb.graph.edge_count() == 12
    assert vertex_connectivity(emb.graph) == 4
    validate_maximal_planar(emb)


def test_icosahedron_reference_values():
    emb = icosahedron()
    assert emb.graph.n == 12
    assert emb.graph.edge_count() == 30
    assert vertex_connectivity(emb.graph) == 5
    validate_maximal_planar(emb)


def test_petersen_reference_values():
    g = petersen()
    assert g.n == 10
    assert g.edge_count() == 15
    assert metrics(g).girth == 5


def test_named_lookup():
    assert named("K4").edge_count() == 6
    assert named("K7").n == 7
    assert named("P5").edge_count() == 4
    assert named("C9").n == 9
    assert named("star6").edge_count() == 5
    assert named("petersen").n == 10
    assert isinstance(named("octahedron"), PlanarEmbedding)
    assert isinstance(named("icosahedron"), PlanarEmbedding)


def test_named_rejects_unknown():
    with pytest.raises(GraphError, match="unknown instance"):
        named("dodecahedron")
    with pytest.raises(GraphError):
        named("Kx")
