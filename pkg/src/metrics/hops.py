"""Intra-club hop distances and degree structure."""
import math
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field
from scipy.stats import binom

from src.graph import Graph, average_path_length, induced_subgraph
from src.utils.errors import EstimateUndefinedError, RichClubError
from .ranking import RankedNodes
from .richclub import default_r_grid, rich_club_connectivity


class HopDistanceReport(BaseModel):
    r: float
    club_size: int
    phi: float
    estimated_mean: Optional[float] = Field(None, description="ln(n) / ln(φ(n-1)/2) for a random club")
    estimate_error: Optional[str] = None
    measured_mean: Optional[float] = Field(None, description="Mean BFS hops over connected intra-club pairs")
    connected_pairs: int
    disconnected_pairs: int


class ClubDegreeReport(BaseModel):
    r: float
    club_size: int
    phi: float
    degrees: List[int] = Field(..., description="Support 0..n-1")
    observed: List[int] = Field(..., description="Club members with each intra-club degree")
    reference: List[float] = Field(..., description="Binomial(n-1, φ) probability at each degree")
    total_variation: float


def estimate_hop_distance(n: int, phi: float) -> float:
    """Mean hop distance of a random graph with n nodes and mean degree φ(n-1)/2."""
    if n < 2:
        raise RichClubError(f"Club size must be >= 2, got {n}")
    mean_degree = phi * (n - 1) / 2
    if mean_degree <= 1.0:
        raise EstimateUndefinedError(f"Estimate undefined: φ(n-1)/2 = {mean_degree:.4f} <= 1")
    return math.log(n) / math.log(mean_degree)


def club_hop_distance(g: Graph, ranks: RankedNodes, r_max: float) -> HopDistanceReport:
    point = rich_club_connectivity(g, ranks, r_max)
    club, _ = induced_subgraph(g, ranks.club(point.club_size))
    paths = average_path_length(club)
    estimate, reason = None, None
    try:
        estimate = estimate_hop_distance(point.club_size, point.phi)
    except EstimateUndefinedError as e:
        reason = str(e)
    return HopDistanceReport(r=r_max, club_size=point.club_size, phi=point.phi, estimated_mean=estimate,
                             estimate_error=reason, measured_mean=paths.mean,
                             connected_pairs=paths.connected_pairs, disconnected_pairs=paths.disconnected_pairs)


def largest_club_within_hops(g: Graph, ranks: RankedNodes, max_mean_hops: float,
                             r_values: Optional[Sequence[float]] = None) -> Optional[HopDistanceReport]:
    """Largest club, growing along ``r_values``, whose measured mean hop distance stays <= the limit."""
    best = None
    for r in r_values or default_r_grid(g.node_count):
        report = club_hop_distance(g, ranks, r)
        if report.measured_mean is None or report.disconnected_pairs or report.measured_mean > max_mean_hops:
            break
        best = report
    return best


def club_degree_distribution(g: Graph, ranks: RankedNodes, r_max: float) -> ClubDegreeReport:
    point = rich_club_connectivity(g, ranks, r_max)
    n = point.club_size
    club, _ = induced_subgraph(g, ranks.club(n))
    observed = np.bincount(club.degrees(), minlength=n)
    support = np.arange(n)
    reference = binom.pmf(support, n - 1, point.phi)
    tv = 0.5 * float(np.abs(observed / n - reference).sum())
    return ClubDegreeReport(r=r_max, club_size=n, phi=point.phi, degrees=support.tolist(),
                            observed=observed.tolist(), reference=reference.tolist(), total_variation=tv)
