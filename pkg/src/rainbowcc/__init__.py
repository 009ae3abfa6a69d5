"""Rainbow-connection colorings for highly connected and planar graphs."""

from .graphs import (
    ContractionMap,
    Graph,
    GraphError,
    GraphMetrics,
    Subgraph,
    bfs_distances,
    build_graph,
    connected_components,
    contract_components,
    edge_key,
    induced_subgraph,
    is_connected,
    l_step_neighborhood,
    metrics,
    spanning_tree_edges,
)
from .connectivity import (
    PathSystem,
    bridges,
    disjoint_paths,
    distance,
    local_connectivity,
    make_induced,
    shortcut_keeping_distinct,
    validate_path_system,
    vertex_connectivity,
)
from .coloring import (
    DEFAULT_WORK_CAP,
    EXCEEDED,
    PALETTE_CAP,
    ColorRegistry,
    EdgeColoring,
    VerificationReport,
    color_cycle,
    cycle_color_pattern,
    exists_rainbow_path,
    is_rainbow_connected,
    rc_exact,
)
from .diameter import (
    ConstructionError,
    DiameterConstruction,
    DominationTable,
    constrained_domination,
    diameter_coloring,
    diametral_pair,
)
from .planar import (
    DominatingPlan,
    LayerDecomposition,
    PlanarConstruction,
    PlanarEmbedding,
    build_dominating_plan,
    build_embedding,
    color_dominating_set,
    extend_coloring,
    faces,
    layer_cycles,
    layer_decomposition,
    neighbor_cycle,
    planar_coloring,
    restrict_coloring,
    validate_maximal_planar,
)
from .factory import (
    clique_tower,
    complete_graph,
    cycle_graph,
    icosahedron,
    named,
    octahedron,
    path_graph,
    petersen,
    stacked_triangulation,
    star_graph,
)

__all__ = [
    "ContractionMap",
    "Graph",
    "GraphError",
    "GraphMetrics",
    "Subgraph",
    "bfs_distances",
    "build_graph",
    "connected_components",
    "contract_components",
    "edge_key",
    "induced_subgraph",
    "is_connected",
    "l_step_neighborhood",
    "metrics",
    "spanning_tree_edges",
    "PathSystem",
    "bridges",
    "disjoint_paths",
    "distance",
    "local_connectivity",
    "make_induced",
    "shortcut_keeping_distinct",
    "validate_path_system",
    "vertex_connectivity",
    "DEFAULT_WORK_CAP",
    "EXCEEDED",
    "PALETTE_CAP",
    "ColorRegistry",
    "EdgeColoring",
    "VerificationReport",
    "color_cycle",
    "cycle_color_pattern",
    "exists_rainbow_path",
    "is_rainbow_connected",
    "rc_exact",
    "ConstructionError",
    "DiameterConstruction",
    "DominationTable",
    "constrained_domination",
    "diameter_coloring",
    "diametral_pair",
    "DominatingPlan",
    "LayerDecomposition",
    "PlanarConstruction",
    "PlanarEmbedding",
    "build_dominating_plan",
    "build_embedding",
    "color_dominating_set",
    "extend_coloring",
    "faces",
    "layer_cycles",
    "layer_decomposition",
    "neighbor_cycle",
    "planar_coloring",
    "restrict_coloring",
    "validate_maximal_planar",
    "clique_tower",
    "complete_graph",
    "cycle_graph",
    "icosahedron",
    "named",
    "octahedron",
    "path_graph",
    "petersen",
    "stacked_triangulation",
    "star_graph",
]

__version__ = "0.1.0"
