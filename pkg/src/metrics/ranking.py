"""Degree ranking of nodes."""
import math
from dataclasses import dataclass

import numpy as np

from src.graph import Graph

# guards floor(r * N) against 0.1 * 30 == 2.9999999999999996
_CUTOFF_EPS = 1e-9


def club_size(r: float, node_count: int) -> int:
    """Number of top-ranked nodes selected by a normalized rank cutoff r."""
    return int(math.floor(r * node_count + _CUTOFF_EPS))


@dataclass(frozen=True, eq=False)
class RankedNodes:
    """Nodes sorted by decreasing degree, ties broken by ascending id.

    ``order[p]`` is the node at 0-based position p (rank r = (p + 1) / N),
    ``degrees[p]`` its degree and ``position[u]`` the inverse permutation.
    """

    order: np.ndarray
    degrees: np.ndarray
    position: np.ndarray

    @property
    def node_count(self) -> int:
        return int(self.order.shape[0])

    @property
    def normalized_rank(self) -> np.ndarray:
        return np.arange(1, self.node_count + 1) / self.node_count

    def club(self, n: int) -> np.ndarray:
        return self.order[:n]

    def tie_boundaries(self) -> np.ndarray:
        """Club sizes n at which no equal-degree group is split."""
        change = np.flatnonzero(self.degrees[1:] != self.degrees[:-1]) + 1
        return np.append(change, self.node_count)


def rank_nodes(g: Graph) -> RankedNodes:
    deg = g.degrees()
    order = np.lexsort((np.arange(g.node_count), -deg))
    position = np.empty(g.node_count, dtype=np.int64)
    position[order] = np.arange(g.node_count)
    for arr in (order, position):
        arr.setflags(write=False)
    return RankedNodes(order=order, degrees=deg[order], position=position)


def edge_positions(g: Graph, ranks: RankedNodes) -> np.ndarray:
    """(L, 2) rank positions of each edge's endpoints, better-ranked endpoint first."""
    pos = ranks.position[g.edges()]
    return np.sort(pos, axis=1)
