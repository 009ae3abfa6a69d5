"""Edge colorings, the rainbow-connectivity verifier, and an exact oracle.

A path is rainbow when its edge colors are pairwise distinct; a colored
graph is rainbow connected when every vertex pair has a rainbow path.  The
verifier walks (vertex, used-color-set) states with subset dominance
pruning, so color sets are kept as bitmasks; palettes are capped at
PALETTE_CAP colors throughout the package.
"""
from __future__ import annotations

import math
import os
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import Graph, GraphError, edge_key, is_connected, metrics, spanning_tree_edges
from .connectivity import bridges

PALETTE_CAP = 128

WORK_CAP_ENV = "RAINBOWCC_WORK_CAP"
DEFAULT_WORK_CAP = 10**8


class _Exceeded:
    """Distinguished rc_exact result when the work cap is hit."""

    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover
        return "EXCEEDED"


EXCEEDED = _Exceeded()


class EdgeColoring:
    """Assignment of non-negative integer colors to edges of a fixed graph.

    May be partial while under construction; verification demands totality.
    """

    __slots__ = ("graph", "_colors")

    def __init__(self, graph: Graph, colors: Mapping[tuple[int, int], int] | None = None):
        self.graph = graph
        self._colors: dict[tuple[int, int], int] = {}
        if colors:
            for (u, v), c in colors.items():
                self.assign(u, v, c)

    def assign(self, u: int, v: int, color: int) -> None:
        if not self.graph.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of the graph")
        if color < 0:
            raise GraphError("colors are non-negative integers")
        self._colors[edge_key(u, v)] = color

    def color_of(self, u: int, v: int) -> int | None:
        return self._colors.get(edge_key(u, v))

    def items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._colors.items())

    @property
    def is_total(self) -> bool:
        return len(self._colors) == self.graph.edge_count()

    @property
    def palette_size(self) -> int:
        return len(set(self._colors.values()))

    def used_colors(self) -> list[int]:
        return sorted(set(self._colors.values()))

    def copy(self) -> "EdgeColoring":
        out = EdgeColoring(self.graph)
        out._colors = dict(self._colors)
        return out


@dataclass(frozen=True)
class VerificationReport:
    rainbow_connected: bool
    failing_pair: tuple[int, int] | None = None
    witness_paths: dict[tuple[int, int], tuple[int, ...]] | None = None


def _indexed_adjacency(col: EdgeColoring) -> list[list[tuple[int, int]]]:
    """adjacency as (neighbor, color-bit) with colors densely re-indexed."""
    used = col.used_colors()
    if len(used) > PALETTE_CAP:
        raise GraphError(f"palette exceeds the {PALETTE_CAP}-color cap")
    bit = {c: 1 << i for i, c in enumerate(used)}
    g = col.graph
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for (u, v), c in col._colors.items():
        adj[u].append((v, bit[c]))
        adj[v].append((u, bit[c]))
    for v in range(g.n):
        adj[v].sort()
    return adj


def _rainbow_sweep(
    adj: list[list[tuple[int, int]]],
    n: int,
    source: int,
    want_witness: bool,
    stop_at: int | None = None,
) -> tuple[set[int], dict[int, tuple[int, ...]]]:
    """All vertices rainbow-reachable from source (shortest witnesses first).

    States are (vertex, color mask); a state is expanded only if no kept
    mask at that vertex is a subset of it.  The walk stops as soon as every
    vertex is reached (or `stop_at` is, if given) since only reachability is
    reported.
    """
    fronts: list[list[int]] = [[] for _ in range(n)]
    fronts[source].append(0)
    reached = {source}
    witness: dict[int, tuple[int, ...]] = {source: (source,)}
    queue: deque[tuple[int, int, tuple[int, ...]]] = deque()
    queue.append((source, 0, (source,) if want_witness else ()))
    while queue:
        v, mask, trail = queue.popleft()
        for w, b in adj[v]:
            if mask & b:
                continue
            nm = mask | b
            kept = fronts[w]
            if any(old & nm == old for old in kept):
                continue
            fronts[w] = [old for old in kept if old & nm != nm] + [nm]
            ntrail = trail + (w,) if want_witness else ()
            if w not in reached:
                reached.add(w)
                if want_witness:
                    witness[w] = ntrail
                if stop_at is not None and w == stop_at:
                    return reached, witness
                if len(reached) == n:
                    return reached, witness
            queue.append((w, nm, ntrail))
    return reached, witness


def exists_rainbow_path(col: EdgeColoring, u: int, v: int) -> tuple[int, ...] | None:
    """A rainbow u-v path under col, or None.  Requires a total coloring."""
    if not col.is_total:
        raise GraphError("coloring is partial; color every edge first")
    if u == v:
        return (u,)
    adj = _indexed_adjacency(col)
    reached, witness = _rainbow_sweep(adj, col.graph.n, u, want_witness=True, stop_at=v)
    return witness.get(v)


def is_rainbow_connected(col: EdgeColoring, witnesses: bool = False) -> VerificationReport:
    """Check every vertex pair for a rainbow path.

    The reported failing pair is the lexicographic minimum.  Witness paths
    (shortest-first discovery order) are recorded only on request.
    """
    g = col.graph
    if not is_connected(g):
        raise GraphError("graph is disconnected; rainbow connectivity is undefined")
    if not col.is_total:
        raise GraphError("coloring is partial; color every edge first")
    adj = _indexed_adjacency(col)
    all_witness: dict[tuple[int, int], tuple[int, ...]] | None = {} if witnesses else None
    for u in range(g.n):
        reached, wit = _rainbow_sweep(adj, g.n, u, want_witness=witnesses)
        missing = [v for v in range(u + 1, g.n) if v not in reached]
        if missing:
            return VerificationReport(False, (u, missing[0]), None)
        if all_witness is not None:
            for v in range(u + 1, g.n):
                all_witness[(u, v)] = wit[v]
    return VerificationReport(True, None, all_witness)


def cycle_color_pattern(length: int) -> list[int]:
    """Color indices 0..ceil(L/2)-1 assigned cyclically around a cycle of
    `length` edges; any two cycle vertices then see a rainbow arc."""
    if length < 3:
        raise GraphError("a cycle has at least 3 edges")
    m = math.ceil(length / 2)
    return [j % m for j in range(length)]


def color_cycle(g: Graph, cycle: Sequence[int]) -> EdgeColoring:
    """Partial coloring of the edges along `cycle` using exactly
    ceil(len/2) colors (ids 0..), rainbow-connecting the cycle."""
    L = len(cycle)
    if L < 3:
        raise GraphError("cycle needs at least 3 vertices")
    if len(set(cycle)) != L:
        raise GraphError("cycle repeats a vertex")
    col = EdgeColoring(g)
    pattern = cycle_color_pattern(L)
    for j in range(L):
        a, b = cycle[j], cycle[(j + 1) % L]
        if not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge; sequence is not a cycle")
        col.assign(a, b, pattern[j])
    return col


class ColorRegistry:
    """Lazily numbered palette keyed by hashable names.

    Construction code asks for colors by role (e.g. a path family index);
    a name gets an integer id the first time it is requested, so roles that
    never fire cost nothing.
    """

    __slots__ = ("_ids",)

    def __init__(self) -> None:
        self._ids: dict[object, int] = {}

    def get(self, name: object) -> int:
        if name not in self._ids:
            self._ids[name] = len(self._ids)
        return self._ids[name]

    def peek(self, name: object) -> int | None:
        return self._ids.get(name)

    def __len__(self) -> int:
        return len(self._ids)

    def names(self) -> list[object]:
        return list(self._ids)


def _default_work_cap() -> int:
    raw = os.environ.get(WORK_CAP_ENV)
    if raw is None:
        return DEFAULT_WORK_CAP
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{WORK_CAP_ENV} must be an integer, got {raw!r}")


def rc_exact(
    g: Graph,
    budget: int | None = None,
    work_cap: int | None = None,
) -> int | _Exceeded:
    """Smallest k admitting a rainbow coloring with k colors, by canonical
    backtracking.

    Colors of a connected graph can always be made pairwise distinct, so k
    is searched from max(1, diameter) up to `budget` (default: the edge
    count, which always succeeds).  Each k is first probed with a bounded,
    deterministically seeded batch of random colorings — a verified hit is
    exact because all smaller k were refuted — before falling back to
    canonical backtracking with edges ordered spanning-tree first and
    bridges at the front (bridges are forced pairwise distinct, which under
    canonical numbering pins them immediately).  Returns EXCEEDED when
    `work_cap` elementary steps are spent (default from RAINBOWCC_WORK_CAP,
    else 10**8).
    """
    if not is_connected(g):
        raise GraphError("rc is undefined on disconnected graphs")
    if g.n <= 1:
        return 0
    m = g.edge_count()
    cap = work_cap if work_cap is not None else _default_work_cap()
    met = metrics(g)
    assert met.diameter is not None
    low = max(1, met.diameter)
    high = budget if budget is not None else m
    br = bridges(g)
    tree = [edge_key(a, b) for a, b in spanning_tree_edges(g, 0)]
    order = (
        [e for e in tree if e in br]
        + [e for e in tree if e not in br]
        + sorted(g.edges - set(tree))
    )
    bridge_idx = {i for i, e in enumerate(order) if e in br}
    steps = 0

    adj_template: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    edge_pos = {}
    for i, (u, v) in enumerate(order):
        edge_pos[(u, v)] = i
        adj_template[u].append((v, i))
        adj_template[v].append((u, i))
    for v in range(g.n):
        adj_template[v].sort()

    def verify(colors: list[int]) -> bool:
        adj = [[(w, 1 << colors[i]) for (w, i) in adj_template[v]] for v in range(g.n)]
        for u in range(g.n - 1):
            reached, _ = _rainbow_sweep(adj, g.n, u, want_witness=False)
            if any(v not in reached for v in range(u + 1, g.n)):
                return False
        return True

    colors = [0] * m
    prng = random.Random(0x5DEECE66D ^ (g.n << 20) ^ (m << 10))

    def probe(k: int) -> bool | _Exceeded:
        # Randomized pre-pass.  A verified hit at the current k settles it —
        # every smaller k was already refuted exhaustively — and on dense
        # graphs a hit lands long before the canonical search would reach
        # one.  A miss proves nothing and falls through to the full search.
        nonlocal steps
        for _ in range(2000):
            steps += g.n
            if steps > cap:
                return EXCEEDED
            for i in range(m):
                colors[i] = prng.randrange(k)
            if verify(colors):
                return True
        return False

    def search(k: int) -> bool | _Exceeded:
        nonlocal steps
        stack: list[tuple[int, int, int, int]] = [(0, 0, 0, 0)]
        # frames: (edge index, next color to try, max color used before, bridge color mask)
        while stack:
            i, c, mx, bmask = stack.pop()
            if i == m:
                steps += g.n
                if steps > cap:
                    return EXCEEDED
                if verify(colors):
                    return True
                continue
            limit = min(k - 1, mx + 1 if i > 0 else 0)
            while c <= limit:
                if i in bridge_idx and (bmask >> c) & 1:
                    c += 1
                    continue
                steps += 1
                if steps > cap:
                    return EXCEEDED
                colors[i] = c
                stack.append((i, c + 1, mx, bmask))
                stack.append((
                    i + 1,
                    0,
                    max(mx, c),
                    bmask | (1 << c) if i in bridge_idx else bmask,
                ))
                break
            else:
                continue
        return False

    for k in range(low, high + 1):
        if k < len(br):
            continue  # bridges alone already need more colors
        res = probe(k)
        if res is False:
            res = search(k)
        if res is EXCEEDED:
            return EXCEEDED
        if res:
            return k
    raise GraphError(f"no rainbow coloring found with at most {high} colors")
