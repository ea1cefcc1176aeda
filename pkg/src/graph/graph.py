"""Immutable simple undirected graph stored in CSR form."""
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.sparse import csr_matrix

from src.utils.errors import GraphConstructionError, InvalidEdgeError, InvalidNodeError


class BuildReport(BaseModel):
    self_loops: int = Field(0, description="Self-loop pairs dropped")
    duplicates: int = Field(0, description="Repeated pairs dropped (either orientation)")


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph on nodes 0..node_count-1.

    Neighbors of node u are ``indices[indptr[u]:indptr[u + 1]]``, sorted
    ascending. Both arrays are read-only.
    """

    node_count: int
    indptr: np.ndarray
    indices: np.ndarray

    @property
    def edge_count(self) -> int:
        return int(self.indices.shape[0] // 2)

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def adjacency(self, u: int) -> np.ndarray:
        self._check_node(u)
        return self.indices[self.indptr[u]:self.indptr[u + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency(u)
        self._check_node(v)
        pos = int(np.searchsorted(nbrs, v))
        return pos < nbrs.shape[0] and int(nbrs[pos]) == v

    def edges(self) -> np.ndarray:
        """(L, 2) array of (u, v) pairs with u < v, lexicographically sorted."""
        sources = np.repeat(np.arange(self.node_count, dtype=np.int64), self.degrees())
        mask = sources < self.indices
        return np.column_stack((sources[mask], self.indices[mask]))

    def to_csr(self) -> csr_matrix:
        data = np.ones(self.indices.shape[0], dtype=np.int8)
        return csr_matrix((data, self.indices, self.indptr), shape=(self.node_count, self.node_count))

    def _check_node(self, u) -> None:
        if not 0 <= int(u) < self.node_count:
            raise InvalidNodeError(f"Node {u} is not in [0, {self.node_count})")


def build_graph(node_count: int, edges: Iterable[Tuple[int, int]]) -> Tuple[Graph, BuildReport]:
    """Build a simple graph, dropping self-loops and duplicate pairs.

    Raises InvalidEdgeError naming the first edge with an out-of-range endpoint.
    """
    if node_count < 1:
        raise GraphConstructionError(f"node_count must be positive, got {node_count}")

    pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    if pairs.size == 0:
        pairs = pairs.reshape(0, 2)
    if pairs.ndim != 2 or pairs.shape[1] != 2:
        raise GraphConstructionError("edges must be a sequence of (u, v) pairs")

    bad = np.flatnonzero(((pairs < 0) | (pairs >= node_count)).any(axis=1))
    if bad.size:
        raise InvalidEdgeError(pairs[bad[0]], node_count)

    loops = pairs[:, 0] == pairs[:, 1]
    kept = pairs[~loops]
    lo = np.minimum(kept[:, 0], kept[:, 1])
    hi = np.maximum(kept[:, 0], kept[:, 1])
    keys = np.unique(lo * node_count + hi)
    report = BuildReport(self_loops=int(loops.sum()), duplicates=int(kept.shape[0] - keys.shape[0]))
    if report.self_loops or report.duplicates:
        logger.warning(f"Dropped {report.self_loops} self-loops and {report.duplicates} duplicate edges")

    lo, hi = keys // node_count, keys % node_count
    src = np.concatenate((lo, hi))
    dst = np.concatenate((hi, lo))
    order = np.lexsort((dst, src))
    counts = np.bincount(src, minlength=node_count)
    indptr = np.zeros(node_count + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])

    graph = Graph(node_count=int(node_count), indptr=_frozen(indptr), indices=_frozen(dst[order].astype(np.int64)))
    logger.debug(f"Built graph N={graph.node_count} L={graph.edge_count}")
    return graph, report


def degree(g: Graph, u: int) -> int:
    g._check_node(u)
    return int(g.indptr[u + 1] - g.indptr[u])


def induced_subgraph(g: Graph, members: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Subgraph on ``members``; new ids follow ascending old ids.

    Returns the subgraph and the old -> new id mapping.
    """
    ids = np.unique(np.asarray(list(members), dtype=np.int64))
    if ids.size == 0:
        raise GraphConstructionError("induced_subgraph needs at least one member")
    if ids[0] < 0 or ids[-1] >= g.node_count:
        offender = ids[0] if ids[0] < 0 else ids[-1]
        raise InvalidNodeError(f"Member {offender} is not in [0, {g.node_count})")

    new_id = np.full(g.node_count, -1, dtype=np.int64)
    new_id[ids] = np.arange(ids.size)
    edges = g.edges()
    keep = (new_id[edges[:, 0]] >= 0) & (new_id[edges[:, 1]] >= 0)
    sub, _ = build_graph(int(ids.size), new_id[edges[keep]])
    return sub, {int(old): i for i, old in enumerate(ids)}
