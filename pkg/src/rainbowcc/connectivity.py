"""Vertex connectivity and internally disjoint path extraction.

The engine is a unit-capacity max-flow on the split-vertex digraph (each
vertex becomes an in/out pair), which simultaneously yields the local
connectivity value and an explicit system of internally disjoint paths.
Augmentation scans neighbours in sorted order, so results are deterministic.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError, bfs_distances, edge_key, induced_subgraph, is_connected


@dataclass(frozen=True)
class PathSystem:
    """Internally disjoint source->target paths, shortest first."""

    source: int
    target: int
    paths: tuple[tuple[int, ...], ...]

    def interiors(self) -> list[tuple[int, ...]]:
        return [p[1:-1] for p in self.paths]

    def covered_vertices(self) -> set[int]:
        out: set[int] = set()
        for p in self.paths:
            out.update(p)
        return out

    def edge_set(self) -> set[tuple[int, int]]:
        out: set[tuple[int, int]] = set()
        for p in self.paths:
            out.update(edge_key(a, b) for a, b in zip(p, p[1:]))
        return out


def validate_path_system(g: Graph, ps: PathSystem) -> None:
    """Independent structural check: every path really is a path of g from
    source to target, no repeats, interiors pairwise disjoint."""
    if ps.source == ps.target:
        raise GraphError("source and target coincide")
    seen_interior: set[int] = set()
    for p in ps.paths:
        if len(p) < 2 or p[0] != ps.source or p[-1] != ps.target:
            raise GraphError(f"path {p} does not run source -> target")
        if len(set(p)) != len(p):
            raise GraphError(f"path {p} repeats a vertex")
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"({a}, {b}) on path {p} is not an edge")
        inner = set(p[1:-1])
        if inner & seen_interior:
            raise GraphError("path interiors are not disjoint")
        if ps.source in inner or ps.target in inner:
            raise GraphError("endpoint appears in a path interior")
        seen_interior |= inner


class _SplitFlow:
    """Unit-capacity flow network on the in/out split of a graph.

    Node 2v is the "in" copy of v, 2v+1 the "out" copy.  Each vertex carries
    an internal in->out arc of capacity 1 (lifted for the terminals), each
    undirected edge becomes two directed out->in arcs of capacity 1.
    """

    def __init__(self, g: Graph, s: int, t: int):
        self.g = g
        self.s_node = 2 * s + 1  # flow leaves from s's out-copy
        self.t_node = 2 * t      # and arrives at t's in-copy
        self.cap: dict[tuple[int, int], int] = {}
        big = g.n + 1
        for v in g.vertices():
            self.cap[(2 * v, 2 * v + 1)] = big if v in (s, t) else 1
        for u, v in g.sorted_edges():
            self.cap[(2 * u + 1, 2 * v)] = 1
            self.cap[(2 * v + 1, 2 * u)] = 1
        self.adj: dict[int, list[int]] = {}
        for a, b in self.cap:
            self.adj.setdefault(a, []).append(b)
            self.adj.setdefault(b, []).append(a)  # residual direction
        for a in self.adj:
            self.adj[a] = sorted(set(self.adj[a]))
        self.flow: dict[tuple[int, int], int] = {}

    def _residual(self, a: int, b: int) -> int:
        return self.cap.get((a, b), 0) - self.flow.get((a, b), 0) + self.flow.get((b, a), 0)

    def _augment_once(self) -> bool:
        parent: dict[int, int] = {self.s_node: self.s_node}
        q = deque([self.s_node])
        while q:
            a = q.popleft()
            if a == self.t_node:
                break
            for b in self.adj.get(a, ()):
                if b not in parent and self._residual(a, b) > 0:
                    parent[b] = a
                    q.append(b)
        if self.t_node not in parent:
            return False
        b = self.t_node
        while b != self.s_node:
            a = parent[b]
            back = self.flow.get((b, a), 0)
            if back > 0:
                self.flow[(b, a)] = back - 1
            else:
                self.flow[(a, b)] = self.flow.get((a, b), 0) + 1
            b = a
        return True

    def max_flow(self, limit: int | None = None) -> int:
        value = 0
        while limit is None or value < limit:
            if not self._augment_once():
                break
            value += 1
        return value

    def extract_paths(self, k: int) -> list[tuple[int, ...]]:
        """Decompose k units of flow into vertex paths (any flow cycles are
        simply never reached)."""
        flow = {e: f for e, f in self.flow.items() if f > 0}
        paths: list[tuple[int, ...]] = []
        for _ in range(k):
            node = self.s_node
            nodes = [node]
            while node != self.t_node:
                nxt = None
                for b in self.adj.get(node, ()):
                    if flow.get((node, b), 0) > 0:
                        nxt = b
                        break
                if nxt is None:
                    raise GraphError("flow decomposition failed")  # pragma: no cover
                flow[(node, nxt)] -= 1
                nodes.append(nxt)
                node = nxt
            verts: list[int] = []
            for nd in nodes:
                orig = nd // 2
                if not verts or verts[-1] != orig:
                    verts.append(orig)
            paths.append(tuple(verts))
        return paths


def local_connectivity(g: Graph, s: int, t: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint s-t paths."""
    if s == t:
        raise GraphError("local connectivity needs distinct endpoints")
    return _SplitFlow(g, s, t).max_flow(limit)


def vertex_connectivity(g: Graph) -> int:
    """Global vertex connectivity.

    Complete graphs return n-1 by convention; disconnected graphs return 0.
    Otherwise the minimum cut either misses some minimum-degree vertex v
    (probe v against its non-neighbours) or contains v (probe pairs of
    non-adjacent neighbours of v), so probing those pairs suffices.
    """
    n = g.n
    if n <= 1:
        return 0
    if len(g.edges) == n * (n - 1) // 2:
        return n - 1
    if not is_connected(g):
        return 0
    v = min(g.vertices(), key=lambda u: (g.degree(u), u))
    best = g.degree(v)
    nbrs = set(g.adjacency(v))
    for t in g.vertices():
        if t != v and t not in nbrs:
            best = min(best, local_connectivity(g, v, t, limit=best))
    nb = sorted(nbrs)
    for i, x in enumerate(nb):
        for y in nb[i + 1:]:
            if not g.has_edge(x, y):
                best = min(best, local_connectivity(g, x, y, limit=best))
    return best


def disjoint_paths(g: Graph, u1: int, u2: int, k: int) -> PathSystem:
    """Exactly k internally disjoint u1-u2 paths, sorted by (length, lex).

    Raises GraphError when fewer than k disjoint paths exist.
    """
    if u1 == u2:
        raise GraphError("endpoints must be distinct")
    if k < 1:
        raise GraphError("k must be positive")
    net = _SplitFlow(g, u1, u2)
    if net.max_flow(limit=k) < k:
        raise GraphError(f"only {net.max_flow()} disjoint paths exist, {k} requested")
    paths = net.extract_paths(k)
    paths.sort(key=lambda p: (len(p), p))
    ps = PathSystem(u1, u2, tuple(paths))
    validate_path_system(g, ps)
    return ps


def _is_chordless(g: Graph, path: tuple[int, ...]) -> bool:
    for i in range(len(path)):
        for j in range(i + 2, len(path)):
            if g.has_edge(path[i], path[j]):
                return False
    return True


def _shortest_within(g: Graph, path: tuple[int, ...], forbid_direct: bool) -> tuple[int, ...]:
    """Shortest path between the endpoints inside the path's own vertex set,
    optionally ignoring the direct endpoint edge."""
    sub = induced_subgraph(g, path)
    s, t = sub.to_sub[path[0]], sub.to_sub[path[-1]]
    banned = {edge_key(s, t)} if forbid_direct else set()
    dist = {s: 0}
    parent: dict[int, int] = {}
    q = deque([s])
    while q:
        a = q.popleft()
        for b in sub.graph.adjacency(a):
            if edge_key(a, b) in banned or b in dist:
                continue
            dist[b] = dist[a] + 1
            parent[b] = a
            q.append(b)
    if t not in dist:
        return path  # cannot improve; keep as-is
    rev = [t]
    while rev[-1] != s:
        rev.append(parent[rev[-1]])
    return tuple(sub.to_orig[x] for x in reversed(rev))


def make_induced(g: Graph, ps: PathSystem) -> PathSystem:
    """Shortcut every path to a chordless one inside its own vertex set.

    Already-chordless paths are returned untouched, which makes the
    operation idempotent.  Shortcutting only ever removes vertices, so
    internal disjointness is preserved.
    """
    new_paths = []
    for p in ps.paths:
        if _is_chordless(g, p):
            new_paths.append(p)
        else:
            new_paths.append(_shortest_within(g, p, forbid_direct=False))
    new_paths.sort(key=lambda p: (len(p), p))
    out = PathSystem(ps.source, ps.target, tuple(new_paths))
    validate_path_system(g, out)
    return out


def shortcut_keeping_distinct(g: Graph, ps: PathSystem) -> PathSystem:
    """Builder variant of make_induced: a path of length >= 2 never collapses
    onto the direct endpoint edge, so at most one path of the system realises
    that edge.  Interior chords are still removed."""
    new_paths = []
    for p in ps.paths:
        if len(p) == 2 or _is_chordless(g, p):
            new_paths.append(p)
            continue
        q = _shortest_within(g, p, forbid_direct=g.has_edge(ps.source, ps.target))
        new_paths.append(q)
    new_paths.sort(key=lambda p: (len(p), p))
    out = PathSystem(ps.source, ps.target, tuple(new_paths))
    validate_path_system(g, out)
    return out


def bridges(g: Graph) -> set[tuple[int, int]]:
    """All bridges, via iterative lowpoint computation."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in g.vertices():
        if disc[root] >= 0:
            continue
        stack: list[tuple[int, int, int]] = [(root, -1, 0)]
        while stack:
            v, parent_v, idx = stack.pop()
            if idx == 0:
                disc[v] = low[v] = timer
                timer += 1
            nbrs = g.adjacency(v)
            resumed = False
            for i in range(idx, len(nbrs)):
                w = nbrs[i]
                if w == parent_v:
                    continue
                if disc[w] < 0:
                    stack.append((v, parent_v, i + 1))
                    stack.append((w, v, 0))
                    resumed = True
                    break
                low[v] = min(low[v], disc[w])
            if not resumed and parent_v >= 0:
                low[parent_v] = min(low[parent_v], low[v])
                if low[v] > disc[parent_v]:
                    out.add(edge_key(parent_v, v))
    return out


def distance(g: Graph, u: int, v: int) -> int:
    d = bfs_distances(g, [u])[v]
    if d < 0:
        raise GraphError(f"{u} and {v} are in different components")
    return d
