"""Breadth-first traversal primitives: hop distances, path lengths, components."""
from typing import Optional

import numpy as np
from pydantic import BaseModel, Field
from scipy.sparse.csgraph import connected_components, shortest_path

from config import PATH_BLOCK_SIZE
from src.utils.errors import GraphConstructionError
from .graph import Graph

UNREACHABLE = -1


class PathLengthSummary(BaseModel):
    mean: Optional[float] = Field(None, description="Mean hops over connected unordered pairs; None when no pair is connected")
    connected_pairs: int = Field(..., description="Unordered pairs with a finite distance")
    disconnected_pairs: int = Field(..., description="Unordered pairs with no path")


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop count from ``source`` to every node; UNREACHABLE (-1) where no path exists."""
    g._check_node(source)
    dist = shortest_path(g.to_csr(), directed=False, unweighted=True, indices=int(source))
    out = np.full(g.node_count, UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(dist)
    out[finite] = dist[finite].astype(np.int64)
    return out


def average_path_length(g: Graph, block_size: int = PATH_BLOCK_SIZE) -> PathLengthSummary:
    if g.node_count < 2:
        raise GraphConstructionError("average_path_length needs at least 2 nodes")

    csr = g.to_csr()
    total = 0.0
    ordered = 0
    # all-pairs BFS in source blocks keeps memory at block_size * N
    for start in range(0, g.node_count, block_size):
        sources = np.arange(start, min(start + block_size, g.node_count))
        dist = shortest_path(csr, directed=False, unweighted=True, indices=sources)
        reach = np.isfinite(dist) & (dist > 0)
        total += float(dist[reach].sum())
        ordered += int(reach.sum())

    connected = ordered // 2
    all_pairs = g.node_count * (g.node_count - 1) // 2
    mean = total / ordered if ordered else None
    return PathLengthSummary(mean=mean, connected_pairs=connected, disconnected_pairs=all_pairs - connected)


def component_sizes(g: Graph) -> np.ndarray:
    """Connected component sizes, largest first."""
    _, labels = connected_components(g.to_csr(), directed=False)
    return np.sort(np.bincount(labels))[::-1]


def giant_component_fraction(g: Graph) -> float:
    return float(component_sizes(g)[0]) / g.node_count
