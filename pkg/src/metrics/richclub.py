"""Rich-club connectivity φ(r) and top-group link shares."""
from typing import List, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field

from config import CURVE_POINTS
from src.graph import Graph
from src.utils.errors import ClubTooSmallError, RichClubError
from .ranking import RankedNodes, club_size, edge_positions


class RichClubPoint(BaseModel):
    r: float = Field(..., description="Normalized rank cutoff")
    club_size: int = Field(..., description="n, number of club members")
    intra_club_links: int = Field(..., description="Links with both endpoints in the club")
    phi: float = Field(..., description="intra_club_links / (n(n-1)/2)")


class CurvePointError(BaseModel):
    r: float
    reason: str


class RichClubCurve(BaseModel):
    points: List[RichClubPoint] = Field(default_factory=list)
    errors: List[CurvePointError] = Field(default_factory=list)


class TopShare(BaseModel):
    top_size: int
    touching: int = Field(..., description="Links with at least one endpoint in the top group")
    within: int = Field(..., description="Links with both endpoints in the top group")


def _point(r: float, n: int, links: int) -> RichClubPoint:
    return RichClubPoint(r=r, club_size=n, intra_club_links=links, phi=links / (n * (n - 1) / 2))


def rich_club_connectivity(g: Graph, ranks: RankedNodes, r_max: float) -> RichClubPoint:
    n = club_size(r_max, g.node_count)
    if n < 2:
        raise ClubTooSmallError(r_max, n)
    if n > g.node_count:
        raise RichClubError(f"Cutoff r={r_max} exceeds 1")
    links = int((edge_positions(g, ranks)[:, 1] < n).sum())
    return _point(r_max, n, links)


def default_r_grid(node_count: int, points: int = CURVE_POINTS) -> List[float]:
    """Log-spaced cutoffs from 1/N to 1, clamped to clubs of at least 2 nodes."""
    raw = np.logspace(np.log10(1.0 / node_count), 0.0, points)
    sizes = sorted({max(2, club_size(r, node_count)) for r in raw})
    return [n / node_count for n in sizes if n <= node_count]


def _snap(n: int, boundaries: np.ndarray) -> int:
    candidates = boundaries[boundaries >= 2]
    if candidates.size == 0:
        return n
    return int(candidates[np.argmin(np.abs(candidates - n))])


def rich_club_curve(g: Graph, ranks: RankedNodes, r_values: Optional[Sequence[float]] = None,
                    snap_to_ties: bool = False) -> RichClubCurve:
    """φ at every cutoff; invalid cutoffs are recorded in ``errors``.

    With ``snap_to_ties`` the club size moves to the nearest boundary between
    equal-degree groups and r is reported as n / N.
    """
    if r_values is None:
        r_values = default_r_grid(g.node_count)
    if any(b <= a for a, b in zip(r_values, r_values[1:])):
        raise RichClubError("r_values must be strictly increasing")

    # sorted worse-endpoint positions: links inside the top n = count below n
    worst = np.sort(edge_positions(g, ranks)[:, 1])
    boundaries = ranks.tie_boundaries()
    curve = RichClubCurve()
    for r in r_values:
        n = club_size(r, g.node_count)
        if not 0.0 < r <= 1.0:
            curve.errors.append(CurvePointError(r=r, reason=f"cutoff must lie in (0, 1], got {r}"))
            continue
        if snap_to_ties:
            n = _snap(n, boundaries)
            r = n / g.node_count
        if n < 2:
            curve.errors.append(CurvePointError(r=r, reason=str(ClubTooSmallError(r, n))))
            continue
        curve.points.append(_point(r, n, int(np.searchsorted(worst, n, side="left"))))
    return curve


def top_share_links(g: Graph, ranks: RankedNodes, r_cut: float) -> TopShare:
    n = club_size(r_cut, g.node_count)
    if n < 1:
        raise ClubTooSmallError(r_cut, n, minimum=1)
    pos = edge_positions(g, ranks)
    return TopShare(top_size=min(n, g.node_count), touching=int((pos[:, 0] < n).sum()), within=int((pos[:, 1] < n).sum()))
