"""On-disk formats: edge lists, rotation systems, coloring JSON, DOT export
and the report dictionaries the command line prints."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .coloring import EdgeColoring, is_rainbow_connected
from .diameter import DiameterConstruction
from .graphs import Graph, GraphError, build_graph, edge_key, metrics
from .planar import PlanarConstruction, PlanarEmbedding, build_embedding


class FormatError(ValueError):
    """Malformed input file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _significant_lines(text: str) -> list[tuple[int, str]]:
    """(line number, stripped content) for every non-blank line."""
    out = []
    for i, raw in enumerate(text.splitlines()):
        stripped = raw.strip()
        if stripped:
            out.append((i + 1, stripped))
    return out


# ---------------------------------------------------------------------------
# edge lists: line 1 "n m", then m lines "u v", 0-based vertex ids
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    rows = _significant_lines(text)
    if not rows:
        raise FormatError("empty input, expected an 'n m' header", line=1)
    line_no, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise FormatError(f"header must be 'n m', got {header!r}", line=line_no)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError(f"header must hold two integers, got {header!r}", line=line_no) from None
    if n < 0 or m < 0:
        raise FormatError("vertex and edge counts must be non-negative", line=line_no)
    body = rows[1:]
    if len(body) != m:
        where = body[-1][0] if body else line_no
        raise FormatError(f"expected {m} edge lines, found {len(body)}", line=where)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, row in body:
        parts = row.split()
        if len(parts) != 2:
            raise FormatError(f"edge line must be 'u v', got {row!r}", line=line_no)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"edge endpoints must be integers, got {row!r}", line=line_no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range 0..{n - 1} in {row!r}", line=line_no)
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", line=line_no)
        if edge_key(u, v) in seen:
            raise FormatError(f"duplicate edge {row!r}", line=line_no)
        seen.add(edge_key(u, v))
        edges.append((u, v))
    return build_graph(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# rotation systems: line 1 "n", then n lines "v: w1 w2 ... wd"
# (neighbors in counterclockwise order)
# ---------------------------------------------------------------------------


def parse_rotation_system(text: str) -> PlanarEmbedding:
    rows = _significant_lines(text)
    if not rows:
        raise FormatError("empty input, expected a vertex count", line=1)
    line_no, header = rows[0]
    try:
        n = int(header)
    except ValueError:
        raise FormatError(f"first line must be the vertex count, got {header!r}", line=line_no) from None
    if n < 0:
        raise FormatError("vertex count must be non-negative", line=line_no)
    body = rows[1:]
    if len(body) != n:
        where = body[-1][0] if body else line_no
        raise FormatError(f"expected {n} rotation lines, found {len(body)}", line=where)
    rotation: dict[int, list[int]] = {}
    for line_no, row in body:
        head, sep, rest = row.partition(":")
        if not sep:
            raise FormatError(f"rotation line must be 'v: w1 w2 ...', got {row!r}", line=line_no)
        try:
            v = int(head)
            nbrs = [int(tok) for tok in rest.split()]
        except ValueError:
            raise FormatError(f"rotation entries must be integers in {row!r}", line=line_no) from None
        if not 0 <= v < n:
            raise FormatError(f"vertex {v} out of range 0..{n - 1}", line=line_no)
        if v in rotation:
            raise FormatError(f"vertex {v} listed twice", line=line_no)
        seen: set[int] = set()
        for w in nbrs:
            if not 0 <= w < n:
                raise FormatError(f"neighbor {w} out of range 0..{n - 1}", line=line_no)
            if w == v:
                raise FormatError(f"vertex {v} lists itself as a neighbor", line=line_no)
            if w in seen:
                raise FormatError(f"vertex {v} lists neighbor {w} twice", line=line_no)
            seen.add(w)
        rotation[v] = nbrs
    edges = sorted({edge_key(v, w) for v, nbrs in rotation.items() for w in nbrs})
    for u, v in edges:
        if u not in rotation[v] or v not in rotation[u]:
            raise FormatError(f"edge ({u}, {v}) appears in only one rotation row")
    g = build_graph(n, edges)
    try:
        return build_embedding(g, [rotation[v] for v in range(n)])
    except GraphError as exc:  # pragma: no cover - guarded by the checks above
        raise FormatError(str(exc)) from exc


def emit_rotation_system(emb: PlanarEmbedding) -> str:
    lines = [str(emb.graph.n)]
    for v in emb.graph.vertices():
        nbrs = " ".join(str(w) for w in emb.rotation[v])
        lines.append(f"{v}: {nbrs}" if nbrs else f"{v}:")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# coloring JSON: {"n": int, "colors": int, "edges": [{"u","v","c"}]}
# Emission is canonical (sorted keys, edges sorted by endpoints), so
# emit . parse . emit is byte-identical.
# ---------------------------------------------------------------------------


def coloring_to_json(col: EdgeColoring) -> str:
    if not col.is_total:
        raise GraphError("coloring is partial; color every edge before emitting")
    edges = [{"c": c, "u": u, "v": v} for (u, v), c in col.items()]
    payload = {"colors": col.palette_size, "edges": edges, "n": col.graph.n}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def coloring_from_json(text: str, graph: Graph | None = None) -> EdgeColoring:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", line=exc.lineno) from None
    if not isinstance(payload, dict):
        raise FormatError("top level must be a JSON object")
    for field in ("n", "colors", "edges"):
        if field not in payload:
            raise FormatError(f"missing field {field!r}")
    n, colors, records = payload["n"], payload["colors"], payload["edges"]
    if not isinstance(n, int) or not isinstance(colors, int) or not isinstance(records, list):
        raise FormatError("'n' and 'colors' must be integers and 'edges' a list")
    edges: list[tuple[int, int]] = []
    assignment: dict[tuple[int, int], int] = {}
    for idx, rec in enumerate(records):
        if not isinstance(rec, dict) or not {"u", "v", "c"} <= set(rec):
            raise FormatError(f"edge record {idx} must be an object with u, v and c")
        u, v, c = rec["u"], rec["v"], rec["c"]
        if not all(isinstance(x, int) for x in (u, v, c)):
            raise FormatError(f"edge record {idx} must hold integers")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge record {idx} endpoint out of range 0..{n - 1}")
        if c < 0:
            raise FormatError(f"edge record {idx} has a negative color")
        key = edge_key(u, v)
        if key in assignment:
            raise FormatError(f"edge record {idx} repeats edge {key}")
        assignment[key] = c
        edges.append(key)
    if graph is None:
        graph = build_graph(n, edges)
    else:
        if graph.n != n:
            raise FormatError(f"coloring is for n={n}, graph has n={graph.n}")
        if graph.edges != frozenset(edges):
            raise FormatError("coloring edges do not match the graph's edge set")
    col = EdgeColoring(graph, assignment)
    if col.palette_size != colors:
        raise FormatError(
            f"'colors' field says {colors} but {col.palette_size} distinct colors appear"
        )
    return col


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

# fixed visual palette; edge colors cycle through it by color id
DOT_PALETTE = (
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "saddlebrown",
    "deeppink",
    "gray40",
    "olive",
    "cadetblue",
    "goldenrod",
    "black",
)


def coloring_to_dot(col: EdgeColoring, name: str = "rainbow") -> str:
    if not col.is_total:
        raise GraphError("coloring is partial; color every edge before emitting")
    lines = [f"graph {name} {{"]
    for v in col.graph.vertices():
        lines.append(f"  {v};")
    for (u, v), c in col.items():
        visual = DOT_PALETTE[c % len(DOT_PALETTE)]
        lines.append(f'  {u} -- {v} [label="{c}", color="{visual}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# report dictionaries (serialized by the CLI)
# ---------------------------------------------------------------------------


def _fraction_fields(c: Fraction) -> dict[str, Any]:
    return {"c": str(c), "c_decimal": float(c)}


def diameter_report(cons: DiameterConstruction) -> dict[str, Any]:
    report: dict[str, Any] = {
        "kappa": cons.kappa,
        "n": cons.graph.n,
        "diam": cons.diameter,
        "bound": cons.bound,
        "palette": cons.palette,
        "verified": cons.verified,
    }
    report.update(_fraction_fields(cons.deficit))
    return report


def planar_report(cons: PlanarConstruction) -> dict[str, Any]:
    g = cons.graph
    diam = metrics(g).diameter
    deficit = Fraction(g.n, cons.kappa) - diam
    report: dict[str, Any] = {
        "kappa": cons.kappa,
        "n": g.n,
        "diam": diam,
        "bound": min(cons.bound_quadratic, cons.bound_flat),
        "bound_quadratic": cons.bound_quadratic,
        "bound_flat": cons.bound_flat,
        "palette": cons.palette,
        "verified": cons.verified,
        "t": cons.depth,
        "layer_sizes": list(cons.layer_sizes),
        "A": list(cons.selected),
        "bound_met": cons.bound_met,
    }
    report.update(_fraction_fields(deficit))
    return report


def verification_report(col: EdgeColoring) -> dict[str, Any]:
    outcome = is_rainbow_connected(col)
    report: dict[str, Any] = {
        "n": col.graph.n,
        "m": col.graph.edge_count(),
        "colors": col.palette_size,
        "verified": outcome.rainbow_connected,
    }
    if outcome.failing_pair is not None:
        report["failing_pair"] = list(outcome.failing_pair)
    return report
