"""Per-graph summary statistics in the layout of the four-network comparison table."""
from typing import Literal, Optional, Union

from loguru import logger
from pydantic import BaseModel, Field

from config import DEFAULT_FIT_METHOD, DEFAULT_K_MIN, DEFAULT_R_CUT, DEFAULT_R_MAX
from src.graph import Graph
from src.utils.errors import RichClubError
from .powerlaw import degree_distribution, fit_power_law_exponent
from .ranking import RankedNodes, rank_nodes
from .richclub import rich_club_connectivity, top_share_links


class SummaryReport(BaseModel):
    node_count: int
    link_count: int
    r_cut: float
    links_touching_top5: Optional[int] = Field(None, description="l(r_i <= r_cut, r_j)")
    links_within_top5: Optional[int] = Field(None, description="l(r_i <= r_cut, r_j <= r_cut)")
    top_share_error: Optional[str] = None
    max_degree: int
    avg_degree: float = Field(..., description="2L / N")
    fitted_exponent: Optional[float] = None
    fit_method: str
    fit_k_min: Union[int, Literal["auto"]] = Field(..., description="Tail cutoff used; \"auto\" only when the scan failed")
    fit_ks_distance: Optional[float] = None
    fit_r_squared: Optional[float] = None
    fit_log_likelihood: Optional[float] = None
    fit_error: Optional[str] = None
    rich_club_r: float
    rich_club_phi: Optional[float] = None
    rich_club_error: Optional[str] = None


def summary_table(g: Graph, ranks: Optional[RankedNodes] = None, r_cut: float = DEFAULT_R_CUT,
                  k_min: Union[int, Literal["auto"]] = DEFAULT_K_MIN, method: str = DEFAULT_FIT_METHOD,
                  r_max: float = DEFAULT_R_MAX) -> SummaryReport:
    if g.node_count < 2:
        raise RichClubError("summary_table needs at least 2 nodes")
    ranks = ranks or rank_nodes(g)
    deg = g.degrees()
    fields = dict(node_count=g.node_count, link_count=g.edge_count, r_cut=r_cut, max_degree=int(deg.max()),
                  avg_degree=2 * g.edge_count / g.node_count, fit_method=method, fit_k_min=k_min, rich_club_r=r_max)

    try:
        share = top_share_links(g, ranks, r_cut)
        fields.update(links_touching_top5=share.touching, links_within_top5=share.within)
    except RichClubError as e:
        fields["top_share_error"] = str(e)

    try:
        fit = fit_power_law_exponent(degree_distribution(g), k_min=k_min, method=method)
        fields.update(fitted_exponent=fit.exponent, fit_k_min=fit.k_min, fit_r_squared=fit.r_squared,
                      fit_log_likelihood=fit.log_likelihood, fit_ks_distance=fit.ks_distance)
    except RichClubError as e:
        fields["fit_error"] = str(e)

    try:
        fields["rich_club_phi"] = rich_club_connectivity(g, ranks, r_max).phi
    except RichClubError as e:
        fields["rich_club_error"] = str(e)

    report = SummaryReport(**fields)
    logger.info(f"Summary N={report.node_count} L={report.link_count} max_k={report.max_degree} y={report.fitted_exponent}")
    return report
