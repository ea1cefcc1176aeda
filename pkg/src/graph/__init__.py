from .graph import Graph, BuildReport, build_graph, degree, induced_subgraph
from .traversal import (
    UNREACHABLE,
    PathLengthSummary,
    bfs_distances,
    average_path_length,
    component_sizes,
    giant_component_fraction,
)

__all__ = [
    "Graph",
    "BuildReport",
    "build_graph",
    "degree",
    "induced_subgraph",
    "UNREACHABLE",
    "PathLengthSummary",
    "bfs_distances",
    "average_path_length",
    "component_sizes",
    "giant_component_fraction",
]
