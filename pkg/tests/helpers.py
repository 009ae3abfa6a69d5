"""Shared oracles: deliberately naive reimplementations used to cross-check
the real algorithms.  Nothing here may import from the modules it checks
beyond the Graph container itself.
"""
from __future__ import annotations

import itertools
import random
from collections import deque

from rainbowcc import Graph, build_graph


def adjacency_sets(g: Graph) -> list[set[int]]:
    return [set(g.adjacency(v)) for v in g.vertices()]


def components_of(n: int, adj: list[set[int]], alive: set[int]) -> list[set[int]]:
    """Connected components of the subgraph induced on `alive`, by plain BFS."""
    seen: set[int] = set()
    out: list[set[int]] = []
    for start in sorted(alive):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w in alive and w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(comp)
    return out


def brute_min_vertex_cut(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects the graph; n-1 when no
    cut exists (complete graphs)."""
    n = g.n
    adj = adjacency_sets(g)
    if all(len(adj[v]) == n - 1 for v in range(n)):
        return n - 1
    for size in range(n - 1):
        for cut in itertools.combinations(range(n), size):
            alive = set(range(n)) - set(cut)
            if len(alive) >= 2 and len(components_of(n, adj, alive)) > 1:
                return size
    return n - 1


def brute_is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(components_of(g.n, adjacency_sets(g), set(range(g.n)))) == 1


def random_connected_graph(rng: random.Random, n_max: int, n_min: int = 2) -> Graph:
    """Labeled Erdos-Renyi graph, resampled until connected."""
    n = rng.randint(n_min, n_max)
    while True:
        p = rng.uniform(0.25, 0.9)
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
        ]
        g = build_graph(n, edges)
        if brute_is_connected(g):
            return g


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return build_graph(n, edges)


def check_path_system(g: Graph, u1: int, u2: int, paths) -> None:
    """Independent validity check: endpoints, adjacency, simplicity and
    pairwise disjoint interiors."""
    seen_interior: set[int] = set()
    for path in paths:
        assert path[0] == u1 and path[-1] == u2
        assert len(set(path)) == len(path)
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b)
        interior = set(path[1:-1])
        assert not interior & {u1, u2}
        assert not interior & seen_interior
        seen_interior |= interior


def brute_rainbow_connected(col) -> bool:
    """Exponential all-simple-paths check, for tiny graphs only."""
    g = col.graph
    assert g.n <= 8, "oracle is exponential; keep it tiny"

    def rainbow_between(u: int, v: int) -> bool:
        stack = [(u, frozenset(), (u,))]
        while stack:
            at, used, path = stack.pop()
            if at == v:
                return True
            for w in g.adjacency(at):
                if w in path:
                    continue
                c = col.color_of(at, w)
                if c in used:
                    continue
                stack.append((w, used | {c}, path + (w,)))
        return False

    return all(
        rainbow_between(u, v) for u in range(g.n) for v in range(u + 1, g.n)
    )
