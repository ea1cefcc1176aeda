"""Node–node link distribution l(r_i, r_j) over rank bins."""
from dataclasses import dataclass

import numpy as np

from config import DEFAULT_BIN_WIDTH
from src.graph import Graph
from src.utils.errors import BinningError
from .ranking import RankedNodes, edge_positions


@dataclass(frozen=True, eq=False)
class LinkMatrix:
    """Upper-triangular link counts; ``counts[i, j]`` (i <= j) joins rank bin i to bin j."""

    bin_width: float
    counts: np.ndarray

    @property
    def bins(self) -> int:
        return int(self.counts.shape[0])

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def upper_bounds(self) -> np.ndarray:
        return np.arange(1, self.bins + 1) / self.bins

    def mirrored(self) -> np.ndarray:
        """Symmetric presentation: off-diagonal cells copied below the diagonal."""
        return self.counts + np.triu(self.counts, k=1).T


def bin_count(bin_width: float) -> int:
    if not 0.0 < bin_width <= 1.0:
        raise BinningError(f"bin_width must lie in (0, 1], got {bin_width}")
    bins = int(round(1.0 / bin_width))
    if abs(bins * bin_width - 1.0) > 1e-9:
        raise BinningError(f"1 / bin_width must be an integer, got {1.0 / bin_width}")
    return bins


def link_distribution_matrix(g: Graph, ranks: RankedNodes, bin_width: float = DEFAULT_BIN_WIDTH) -> LinkMatrix:
    bins = bin_count(bin_width)
    n = g.node_count
    # 1-based position p falls in bin ceil(p * bins / N) - 1
    p = edge_positions(g, ranks) + 1
    cell = (p * bins + n - 1) // n - 1
    flat = np.bincount(cell[:, 0] * bins + cell[:, 1], minlength=bins * bins)
    return LinkMatrix(bin_width=bin_width, counts=flat.reshape(bins, bins).astype(np.int64))
