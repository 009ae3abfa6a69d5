"""Spine-based rainbow colorings for 3- and 4-connected graphs.

Strategy: pick a farthest vertex pair, pull internally disjoint induced
paths between them, rainbow color those spines from one shared color
family, and hang every remaining vertex off the spines by short escape
chains whose colors stay clear of the spine family.  Components away from
the spines are contracted to single vertices first and re-expanded at the
end with fresh per-edge tree colors.

Every returned coloring has been checked by the verifier; a construction
that cannot certify itself raises ConstructionError instead of returning.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    Graph,
    GraphError,
    bfs_distances,
    connected_components,
    contract_components,
    edge_key,
    induced_subgraph,
    metrics,
    spanning_tree_edges,
)
from .connectivity import (
    PathSystem,
    disjoint_paths,
    shortcut_keeping_distinct,
    validate_path_system,
    vertex_connectivity,
)
from .coloring import (
    ColorRegistry,
    EdgeColoring,
    cycle_color_pattern,
    is_rainbow_connected,
)


class ConstructionError(GraphError):
    """A construction step failed its own invariant or verification."""

    def __init__(self, message: str, details: dict | None = None):
        super().__init__(message)
        self.details = details or {}


def diametral_pair(g: Graph) -> tuple[int, int]:
    """Lexicographically smallest vertex pair realizing the diameter."""
    met = metrics(g)
    if not met.connected:
        raise GraphError("diametral pair needs a connected graph")
    assert met.diameter is not None
    for u in g.vertices():
        dist = bfs_distances(g, [u])
        for v in range(u + 1, g.n):
            if dist[v] == met.diameter:
                return (u, v)
    raise GraphError("no diametral pair found")  # pragma: no cover


@dataclass(frozen=True)
class DominationTable:
    """Escape chains: every domain vertex walks parent links to the base.

    depth[v] counts chain edges to the base; parents always sit one level
    closer, so following them spells out the chain.
    """

    depths: dict[int, int]
    parents: dict[int, int]
    max_depth: int

    def chain(self, v: int) -> tuple[int, ...]:
        out = [v]
        while out[-1] in self.parents:
            out.append(self.parents[out[-1]])
        return tuple(out)


def constrained_domination(
    g: Graph,
    base: set[int],
    domain: set[int],
    restricted_edges: frozenset[tuple[int, int]] = frozenset(),
    counted_edges: frozenset[tuple[int, int]] = frozenset(),
) -> DominationTable:
    """Grow shortest escape chains from `base` through `domain` only.

    No chain may use two restricted edges in a row; subject to that, parents
    prefer avoiding counted edges, then avoiding restricted edges, then the
    smallest vertex id.  Raises ConstructionError if some domain vertex
    cannot be hooked up under these rules.
    """
    if base & domain:
        raise GraphError("base and domain overlap")
    depths: dict[int, int] = {}
    parents: dict[int, int] = {}
    # flag: the parent edge of this vertex is restricted (base edges are not)
    flag = {b: False for b in base}
    level = {b: 0 for b in base}
    remaining = set(domain)
    r = 0
    while remaining:
        r += 1
        snapshot = dict(level)
        assigned_now = []
        for v in sorted(remaining):
            best = None
            for w in g.adjacency(v):
                if w not in snapshot:
                    continue
                e = edge_key(v, w)
                if e in restricted_edges and flag[w]:
                    continue  # two restricted edges in a row
                key = (snapshot[w], e in counted_edges, e in restricted_edges, w)
                if best is None or key < best[0]:
                    best = (key, w)
            if best is not None:
                w = best[1]
                depths[v] = snapshot[w] + 1
                parents[v] = w
                flag[v] = edge_key(v, w) in restricted_edges
                level[v] = depths[v]
                assigned_now.append(v)
        if not assigned_now:
            raise ConstructionError(
                "escape chains cannot reach every vertex",
                {"stranded": sorted(remaining)},
            )
        remaining.difference_update(assigned_now)
    return DominationTable(depths, parents, max(depths.values(), default=0))


@dataclass(frozen=True)
class DiameterConstruction:
    """A verified spine coloring together with its bookkeeping."""

    graph: Graph
    kappa: int
    endpoints: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]
    coloring: EdgeColoring
    palette: int
    diameter: int
    deficit: Fraction  # n/kappa minus the diameter
    bound: int
    verified: bool
    spine_palette: int  # size of the shared color family on the spines
    family_depths: tuple[int, ...]  # deepest escape chain per spine family
    zone_sizes: tuple[int, ...]  # per-family counts of captive components (4-connected only)
    contracted_palette: int
    component_count: int  # off-spine components before expansion
    component_total: int  # vertices inside those components

    @property
    def max_chain_depth(self) -> int:
        return max(self.family_depths, default=0)


def _off_spine_parts(g: Graph, covered: set[int]) -> list[frozenset[int]]:
    rest = [v for v in g.vertices() if v not in covered]
    if not rest:
        return []
    sub = induced_subgraph(g, rest)
    return [
        frozenset(sub.to_orig[v] for v in comp)
        for comp in connected_components(sub.graph)
    ]


def _expand_to_graph(
    g: Graph,
    cmap,
    parts: list[frozenset[int]],
    quotient_coloring: EdgeColoring,
    reg: ColorRegistry,
) -> EdgeColoring:
    """Lift a quotient coloring back to g.

    Cross edges inherit the color of their quotient image.  Inside each
    contracted component a spanning tree gets globally fresh colors (one per
    edge), and leftover internal edges reuse an existing color; a rainbow
    route entering and leaving the component travels its tree.
    """
    full = EdgeColoring(g)
    internal: set[tuple[int, int]] = set()
    tree_idx = 0
    for part in sorted(parts, key=min):
        members = sorted(part)
        sub = induced_subgraph(g, members)
        tree = {
            edge_key(sub.to_orig[a], sub.to_orig[b])
            for a, b in spanning_tree_edges(sub.graph, 0)
        }
        for a in members:
            for b in g.adjacency(a):
                if b in part and a < b:
                    e = edge_key(a, b)
                    internal.add(e)
                    if e in tree:
                        full.assign(a, b, reg.get(("tree", tree_idx)))
                        tree_idx += 1
                    else:
                        full.assign(a, b, reg.get(("c", 1)))
    for a, b in g.sorted_edges():
        if (a, b) in internal:
            continue
        qa, qb = cmap.quotient_of(a), cmap.quotient_of(b)
        color = quotient_coloring.color_of(qa, qb)
        assert color is not None
        full.assign(a, b, color)
    return full


def _sorted_spines(g: Graph, u1: int, u2: int, k: int) -> list[tuple[int, ...]]:
    raw = disjoint_paths(g, u1, u2, k)
    slim = shortcut_keeping_distinct(g, raw)
    return sorted(slim.paths, key=lambda p: (len(p), p))


def _interior_edges(qpath: list[int], interior: set[int]) -> frozenset[tuple[int, int]]:
    return frozenset(
        edge_key(qpath[j], qpath[j + 1])
        for j in range(len(qpath) - 1)
        if qpath[j] in interior and qpath[j + 1] in interior
    )


def _path_edges(qpath: list[int]) -> frozenset[tuple[int, int]]:
    return frozenset(edge_key(qpath[j], qpath[j + 1]) for j in range(len(qpath) - 1))


def _finish(
    g: Graph,
    kappa: int,
    endpoints: tuple[int, int],
    paths,
    cmap,
    parts,
    colq: EdgeColoring,
    reg: ColorRegistry,
    diam: int,
    spine_palette: int,
    family_depths: tuple[int, ...],
    zone_sizes: tuple[int, ...],
) -> DiameterConstruction:
    repq = is_rainbow_connected(colq)
    if not repq.rainbow_connected:
        raise ConstructionError(
            "contracted coloring is not rainbow connected",
            {"failing_pair": repq.failing_pair},
        )
    col = _expand_to_graph(g, cmap, parts, colq, reg)
    rep = is_rainbow_connected(col)
    if not rep.rainbow_connected:
        raise ConstructionError(
            "expanded coloring is not rainbow connected",
            {"failing_pair": rep.failing_pair},
        )
    slack, offset = (11, 6) if kappa == 3 else (15, 18)
    deficit = Fraction(g.n, kappa) - diam
    bound = math.ceil(Fraction(g.n, kappa) + slack * deficit + offset)
    palette = col.palette_size
    if palette > bound:
        raise ConstructionError(
            "palette exceeds the claimed bound",
            {"palette": palette, "bound": bound},
        )
    return DiameterConstruction(
        graph=g,
        kappa=kappa,
        endpoints=endpoints,
        paths=tuple(tuple(p) for p in paths),
        coloring=col,
        palette=palette,
        diameter=diam,
        deficit=deficit,
        bound=bound,
        verified=True,
        spine_palette=spine_palette,
        family_depths=family_depths,
        zone_sizes=zone_sizes,
        contracted_palette=colq.palette_size,
        component_count=len(parts),
        component_total=sum(len(p) for p in parts),
    )


def _three_connected_coloring(g: Graph) -> DiameterConstruction:
    met = metrics(g)
    diam = met.diameter
    assert diam is not None
    u1, u2 = diametral_pair(g)
    paths = _sorted_spines(g, u1, u2, 3)
    p1, p2, p3 = paths
    e1, e2, e3 = len(p1) - 1, len(p2) - 1, len(p3) - 1

    covered = set(p1) | set(p2) | set(p3)
    parts = _off_spine_parts(g, covered)
    cmap = contract_components(g, parts)
    gq = cmap.quotient
    qof = cmap.quotient_of
    y_set = {qof(min(part)) for part in parts}
    q1 = [qof(v) for v in p1]
    q2 = [qof(v) for v in p2]
    q3 = [qof(v) for v in p3]
    x2 = set(q2[1:-1])
    base = set(q1) | set(q3)  # both spines of the cycle plus the endpoints
    domain = x2 | y_set

    reg = ColorRegistry()
    colq = EdgeColoring(gq)
    # the two outer spines close into a cycle; color it cyclically
    cycle_seq = q1 + q3[-2:0:-1]
    pattern = cycle_color_pattern(e1 + e3)
    for j, color in enumerate(pattern):
        a, b = cycle_seq[j], cycle_seq[(j + 1) % len(cycle_seq)]
        colq.assign(a, b, reg.get(("c", color + 1)))
    # middle spine shares the same family, indexed from one end
    for j in range(e2):
        colq.assign(q2[j], q2[j + 1], reg.get(("c", j + 1)))
    spine_m = max(math.ceil((e1 + e3) / 2), e2)

    dom = constrained_domination(
        gq,
        base,
        domain,
        restricted_edges=_interior_edges(q2, x2),
        counted_edges=_path_edges(q2),
    )
    special: set[tuple[int, int]] = set()
    for v in sorted(domain, key=lambda v: (dom.depths[v], v)):
        e = edge_key(v, dom.parents[v])
        name = ("cd", dom.depths[v]) if v in x2 else ("ch", v)
        colq.assign(*e, reg.get(name))  # may recolor a middle-spine edge
        special.add(e)
    for a, b in gq.sorted_edges():
        if colq.color_of(a, b) is not None:
            continue
        if a in y_set or b in y_set:
            other = b if a in y_set else a
            name = ("pe",) if other in x2 else ("pd",)
        elif a in x2 or b in x2:
            name = ("pe",)
        else:
            name = ("c", 1)  # chord between the two outer spines
        colq.assign(a, b, reg.get(name))

    max_l = dom.max_depth
    if max_l > 3 * len(y_set) + 2:
        raise ConstructionError(
            "escape chain deeper than the component budget allows",
            {"max_depth": max_l, "components": len(y_set)},
        )
    if colq.palette_size > spine_m + max_l + len(y_set) + 2:
        raise ConstructionError(
            "contracted palette exceeds its accounting",
            {"palette": colq.palette_size},
        )
    return _finish(
        g, 3, (u1, u2), paths, cmap, parts, colq, reg, diam,
        spine_m, (max_l,), (),
    )


def _four_connected_coloring(g: Graph) -> DiameterConstruction:
    met = metrics(g)
    diam = met.diameter
    assert diam is not None
    u1, u2 = diametral_pair(g)
    paths = _sorted_spines(g, u1, u2, 4)
    lengths = [len(p) - 1 for p in paths]

    covered = set().union(*map(set, paths))
    parts = _off_spine_parts(g, covered)
    cmap = contract_components(g, parts)
    gq = cmap.quotient
    qof = cmap.quotient_of
    y_set = {qof(min(part)) for part in parts}
    qpaths = [[qof(v) for v in p] for p in paths]
    interiors = [set(qp[1:-1]) for qp in qpaths]
    qu1, qu2 = qof(u1), qof(u2)

    reg = ColorRegistry()
    colq = EdgeColoring(gq)
    # outer families run forward, inner families run backward, all sharing
    # one color family so opposite orientations cannot both collide
    for fam, qp in enumerate(qpaths, start=1):
        seq = qp if fam in (1, 4) else qp[::-1]
        for j in range(len(seq) - 1):
            colq.assign(seq[j], seq[j + 1], reg.get(("c", j + 1)))
    spine_m = max(lengths)

    # captive components: every neighbor on a single spine family
    zones: list[set[int]] = [set() for _ in range(4)]
    for y in sorted(y_set):
        for i in range(4):
            if all(w in interiors[i] for w in gq.adjacency(y)):
                zones[i].add(y)
                break

    special: set[tuple[int, int]] = set()
    family_depths = []
    for i in range(4):
        domain = interiors[i] | zones[i]
        base = set(gq.vertices()) - domain
        dom = constrained_domination(
            gq,
            base,
            domain,
            restricted_edges=_interior_edges(qpaths[i], interiors[i]),
            counted_edges=_path_edges(qpaths[i]),
        )
        family_depths.append(dom.max_depth)
        if dom.max_depth > 3 * len(zones[i]) + 2:
            raise ConstructionError(
                "escape chain deeper than the captive budget allows",
                {"family": i + 1, "max_depth": dom.max_depth},
            )
        for v in sorted(domain, key=lambda v: (dom.depths[v], v)):
            e = edge_key(v, dom.parents[v])
            if e in special:
                continue  # a chain from an earlier family owns this edge
            name = ("cd", i + 1, dom.depths[v]) if v in interiors[i] else ("ch", i + 1, v)
            colq.assign(*e, reg.get(name))
            special.add(e)

    fam_of = {}
    for i in range(4):
        for v in interiors[i]:
            fam_of[v] = i + 1
    for a, b in gq.sorted_edges():
        if colq.color_of(a, b) is not None:
            continue
        if a in y_set or b in y_set:
            other = b if a in y_set else a
            name = ("pd", fam_of[other]) if other in fam_of else ("c", 1)
        elif a in fam_of and b in fam_of and fam_of[a] != fam_of[b]:
            name = ("pe", min(fam_of[a], fam_of[b]), max(fam_of[a], fam_of[b]))
        else:
            name = ("c", 1)  # chords into the endpoints
        colq.assign(a, b, reg.get(name))

    budget = spine_m + sum(family_depths) + sum(len(z) for z in zones) + 4 + 6
    if colq.palette_size > budget:
        raise ConstructionError(
            "contracted palette exceeds its accounting",
            {"palette": colq.palette_size, "budget": budget},
        )
    return _finish(
        g, 4, (u1, u2), paths, cmap, parts, colq, reg, diam,
        spine_m, tuple(family_depths), tuple(len(z) for z in zones),
    )


def diameter_coloring(g: Graph, kappa: int | None = None) -> DiameterConstruction:
    """Verified rainbow coloring for a 3- or 4-connected graph.

    `kappa` selects the construction (3 or 4 spines); by default it is the
    graph's vertex connectivity, which must then be exactly 3 or 4.  Forcing
    kappa=3 on a more highly connected graph is allowed.
    """
    measured = vertex_connectivity(g)
    if kappa is None:
        kappa = measured
    if kappa not in (3, 4):
        raise ConstructionError(
            f"spine construction needs connectivity 3 or 4, got {kappa}"
        )
    if measured < kappa:
        raise ConstructionError(
            f"graph is only {measured}-connected; {kappa} spines do not exist"
        )
    if kappa == 3:
        return _three_connected_coloring(g)
    return _four_connected_coloring(g)
