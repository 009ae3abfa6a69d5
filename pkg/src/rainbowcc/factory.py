"""Instance generators: clique towers, stacked triangulations, classics.

The planar generators return embeddings (graph + rotation system) since the
planar pipeline needs faces, not just edges.
"""
from __future__ import annotations

import math

from .graphs import Graph, GraphError, build_graph, metrics
from .connectivity import vertex_connectivity
from .planar import PlanarEmbedding, build_embedding, validate_maximal_planar


def clique_tower(kappa: int, layers: int) -> Graph:
    """A ladder of complete columns: layers+1 copies of K_kappa joined by
    identity matchings.  Connectivity is exactly kappa and the diameter is
    layers+1, so the diameter deficit n/kappa - diam is zero.
    """
    if kappa < 2:
        raise GraphError("columns need at least 2 vertices")
    if layers < 1:
        raise GraphError("need at least one matching between columns")
    cols = layers + 1
    edges = []
    for c in range(cols):
        first = c * kappa
        for i in range(kappa):
            for j in range(i + 1, kappa):
                edges.append((first + i, first + j))
        if c + 1 < cols:
            for i in range(kappa):
                edges.append((first + i, first + kappa + i))
    g = build_graph(kappa * cols, edges)
    met = metrics(g)
    assert met.diameter == layers + 1
    assert vertex_connectivity(g) == kappa
    return g


class SplitMix64:
    """Tiny deterministic PRNG (splitmix64) so instances are reproducible
    across platforms and library versions."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n


def stacked_triangulation(n: int, seed: int = 0) -> PlanarEmbedding:
    """Random maximal planar graph built from the tetrahedron by repeatedly
    dropping a new vertex into a face and wiring it to the three corners.

    Every instance is maximal planar with connectivity at least 3.
    """
    if n < 4:
        raise GraphError("stacked triangulations start from the tetrahedron")
    rng = SplitMix64(seed)
    rot: dict[int, list[int]] = {0: [1, 2], 1: [2, 0], 2: [0, 1]}
    faces = [(0, 1, 2), (0, 2, 1)]  # the two sides of the starting triangle
    edges = [(0, 1), (0, 2), (1, 2)]
    for w in range(3, n):
        # vertex 3 completes the tetrahedron; later picks are seed-driven
        a, b, c = faces.pop(0 if w == 3 else rng.below(len(faces)))
        # new corner fans: a keeps ...c,w,b..., the face (a,b,c) splits in 3
        rot[a].insert(rot[a].index(b), w)
        rot[b].insert(rot[b].index(c), w)
        rot[c].insert(rot[c].index(a), w)
        rot[w] = [b, a, c]
        faces.extend([(a, b, w), (b, c, w), (c, a, w)])
        edges.extend([(w, a), (w, b), (w, c)])
    g = build_graph(n, edges)
    emb = build_embedding(g, [tuple(rot[v]) for v in range(n)])
    validate_maximal_planar(emb)
    assert vertex_connectivity(g) >= 3
    return emb


def _embedding_from_coordinates(
    points: list[tuple[float, float, float]],
    edges: list[tuple[int, int]],
) -> PlanarEmbedding:
    """Embed a convex polyhedron given vertex coordinates on a sphere.

    Each vertex's neighbors are sorted by angle in its tangent plane, which
    yields a consistent orientation of the whole sphere.
    """
    g = build_graph(len(points), edges)
    rotation = []
    for v in g.vertices():
        px, py, pz = points[v]
        norm = math.sqrt(px * px + py * py + pz * pz)
        vx, vy, vz = px / norm, py / norm, pz / norm
        # any reference direction not parallel to v
        rx, ry, rz = (1.0, 0.0, 0.0) if abs(vx) < 0.9 else (0.0, 1.0, 0.0)
        d = rx * vx + ry * vy + rz * vz
        e1 = (rx - d * vx, ry - d * vy, rz - d * vz)
        n1 = math.sqrt(sum(t * t for t in e1))
        e1 = (e1[0] / n1, e1[1] / n1, e1[2] / n1)
        e2 = (
            vy * e1[2] - vz * e1[1],
            vz * e1[0] - vx * e1[2],
            vx * e1[1] - vy * e1[0],
        )
        def angle(w: int) -> float:
            wx, wy, wz = points[w]
            dx, dy, dz = wx - px, wy - py, wz - pz
            return math.atan2(
                dx * e2[0] + dy * e2[1] + dz * e2[2],
                dx * e1[0] + dy * e1[1] + dz * e1[2],
            )
        rotation.append(tuple(sorted(g.adjacency(v), key=angle)))
    return build_embedding(g, rotation)


def octahedron() -> PlanarEmbedding:
    pts = [
        (1.0, 0.0, 0.0), (-1.0, 0.0, 0.0),
        (0.0, 1.0, 0.0), (0.0, -1.0, 0.0),
        (0.0, 0.0, 1.0), (0.0, 0.0, -1.0),
    ]
    edges = []
    for i in range(6):
        for j in range(i + 1, 6):
            dot = sum(pts[i][k] * pts[j][k] for k in range(3))
            if dot > -0.5:  # everything except the antipode
                edges.append((i, j))
    emb = _embedding_from_coordinates(pts, edges)
    validate_maximal_planar(emb)
    return emb


def icosahedron() -> PlanarEmbedding:
    phi = (1 + math.sqrt(5)) / 2
    pts = []
    for a in (-1.0, 1.0):
        for b in (-phi, phi):
            pts.extend([(0.0, a, b), (a, b, 0.0), (b, 0.0, a)])
    pts.sort()
    edges = []
    for i in range(12):
        for j in range(i + 1, 12):
            d2 = sum((pts[i][k] - pts[j][k]) ** 2 for k in range(3))
            if d2 < 4.1:  # neighbors sit at squared distance 4
                edges.append((i, j))
    emb = _embedding_from_coordinates(pts, edges)
    validate_maximal_planar(emb)
    return emb


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, edges)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return build_graph(n, [(0, i) for i in range(1, n)])


def named(name: str) -> Graph | PlanarEmbedding:
    """Reference instances by name: K<n>, P<n>, C<n>, star<n>, petersen,
    octahedron, icosahedron.  The planar solids come back with their
    embeddings; everything else is a bare graph."""
    fixed = {"petersen": petersen, "octahedron": octahedron, "icosahedron": icosahedron}
    if name in fixed:
        return fixed[name]()
    families = (
        ("star", star_graph),
        ("K", complete_graph),
        ("P", path_graph),
        ("C", cycle_graph),
    )
    for prefix, build in families:
        suffix = name[len(prefix) :]
        if name.startswith(prefix) and suffix.isdigit():
            return build(int(suffix))
    raise GraphError(
        f"unknown instance {name!r}; use K<n>, P<n>, C<n>, star<n>, "
        "petersen, octahedron or icosahedron"
    )
