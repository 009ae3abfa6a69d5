"""Immutable simple graphs with dense integer vertex ids, plus the basic
metric and quotient operations everything else builds on."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or operations on unsuitable inputs."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    """Normalised undirected edge representation (min, max)."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Instances are immutable after construction; adjacency lists are kept
    sorted so every traversal in the package is deterministic.
    """

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], _validated: bool = False):
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not _validated:
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
                if u == v:
                    raise GraphError(f"self-loop at vertex {u}")
                if edge_key(u, v) in seen:
                    raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(edge_key(u, v))
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self._adj = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        self._edges = frozenset(seen)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def edge_count(self) -> int:
        return len(self._edges)

    def adjacency(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._edges

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self._edges)})"


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validating constructor: rejects out-of-range endpoints, self-loops and
    duplicate edges (in either orientation)."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    return Graph(n, edge_list)


@dataclass(frozen=True)
class GraphMetrics:
    diameter: int | None
    radius: int | None
    girth: float  # math.inf on forests
    min_degree: int
    connected: bool


def bfs_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Multi-source BFS; unreachable vertices get -1."""
    dist = [-1] * g.n
    q: deque[int] = deque()
    for s in sorted(set(sources)):
        dist[s] = 0
        q.append(s)
    while q:
        v = q.popleft()
        for w in g.adjacency(v):
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                q.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return min(bfs_distances(g, [0])) >= 0


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components as frozensets, ordered by their smallest vertex."""
    seen = [False] * g.n
    comps: list[frozenset[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        q = deque([s])
        seen[s] = True
        while q:
            v = q.popleft()
            comp.append(v)
            for w in g.adjacency(v):
                if not seen[w]:
                    seen[w] = True
                    q.append(w)
        comps.append(frozenset(comp))
    return comps


def metrics(g: Graph) -> GraphMetrics:
    """Diameter, radius, girth and minimum degree via all-pairs BFS.

    On a disconnected graph `connected` is False and diameter/radius are
    None.  Girth is math.inf when the graph is a forest.
    """
    if g.n == 0:
        return GraphMetrics(None, None, math.inf, 0, True)
    min_deg = min(g.degree(v) for v in g.vertices())
    ecc: list[int] = []
    connected = True
    girth = math.inf
    for s in g.vertices():
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for w in g.adjacency(v):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
                elif w != parent[v]:
                    # non-tree edge closes a cycle through s of this length
                    girth = min(girth, dist[v] + dist[w] + 1)
        far = max(dist)
        if min(dist) < 0:
            connected = False
        else:
            ecc.append(far)
    if not connected:
        return GraphMetrics(None, None, girth, min_deg, False)
    return GraphMetrics(max(ecc), min(ecc), girth, min_deg, True)


def l_step_neighborhood(g: Graph, x: Iterable[int], steps: int, mode: str = "open") -> set[int]:
    """Vertices at distance exactly `steps` from the set x ("open") or at
    distance at most `steps` ("closed")."""
    xs = set(x)
    if not xs:
        raise GraphError("neighborhood of an empty set is undefined")
    for v in xs:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    if steps < 0:
        raise GraphError("step count must be non-negative")
    if mode not in ("open", "closed"):
        raise GraphError(f"unknown neighborhood mode {mode!r}")
    dist = bfs_distances(g, xs)
    if mode == "open":
        return {v for v in g.vertices() if dist[v] == steps}
    return {v for v in g.vertices() if 0 <= dist[v] <= steps}


@dataclass(frozen=True)
class Subgraph:
    """Induced subgraph together with the id remap in both directions."""

    graph: Graph
    to_sub: dict[int, int]
    to_orig: tuple[int, ...]


def induced_subgraph(g: Graph, x: Iterable[int]) -> Subgraph:
    keep = sorted(set(x))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    to_sub = {v: i for i, v in enumerate(keep)}
    edges = [
        (to_sub[u], to_sub[v])
        for (u, v) in g.sorted_edges()
        if u in to_sub and v in to_sub
    ]
    return Subgraph(Graph(len(keep), edges, _validated=True), to_sub, tuple(keep))


@dataclass(frozen=True)
class ContractionMap:
    """Quotient graph where each requested part collapsed to one vertex.

    origin[q] is the set of original vertices behind quotient vertex q;
    uncontracted vertices appear as singletons.  Parallel edges produced by
    the contraction are collapsed, internal edges vanish.
    """

    quotient: Graph
    origin: tuple[frozenset[int], ...]
    vertex_map: tuple[int, ...]  # original id -> quotient id

    def quotient_of(self, v: int) -> int:
        return self.vertex_map[v]


def contract_components(g: Graph, parts: Sequence[Iterable[int]]) -> ContractionMap:
    """Contract each part (which must induce a connected subgraph) to a
    single vertex.  Quotient ids are dense, ordered by smallest original
    member."""
    part_sets = [frozenset(p) for p in parts]
    claimed: set[int] = set()
    for p in part_sets:
        if not p:
            raise GraphError("cannot contract an empty part")
        for v in p:
            if not 0 <= v < g.n:
                raise GraphError(f"vertex {v} out of range")
            if v in claimed:
                raise GraphError(f"vertex {v} appears in two parts")
        claimed |= p
        sub = induced_subgraph(g, p)
        if not is_connected(sub.graph):
            raise GraphError(f"part {sorted(p)} does not induce a connected subgraph")
    groups = list(part_sets) + [frozenset([v]) for v in g.vertices() if v not in claimed]
    groups.sort(key=min)
    vmap = [0] * g.n
    for q, grp in enumerate(groups):
        for v in grp:
            vmap[v] = q
    edges = {edge_key(vmap[u], vmap[v]) for (u, v) in g.edges if vmap[u] != vmap[v]}
    quotient = Graph(len(groups), sorted(edges), _validated=True)
    return ContractionMap(quotient, tuple(groups), tuple(vmap))


def spanning_tree_edges(g: Graph, root: int) -> list[tuple[int, int]]:
    """Edges of the BFS tree from root within root's component, in discovery
    order (deterministic via sorted adjacency)."""
    seen = {root}
    out: list[tuple[int, int]] = []
    q = deque([root])
    while q:
        v = q.popleft()
        for w in g.adjacency(v):
            if w not in seen:
                seen.add(w)
                out.append((v, w))
                q.append(w)
    return out
