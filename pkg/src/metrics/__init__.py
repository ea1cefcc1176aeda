from .ranking import RankedNodes, rank_nodes, club_size, edge_positions
from .richclub import (
    RichClubPoint,
    RichClubCurve,
    CurvePointError,
    TopShare,
    rich_club_connectivity,
    rich_club_curve,
    default_r_grid,
    top_share_links,
)
from .link_matrix import LinkMatrix, link_distribution_matrix
from .powerlaw import DegreeDistribution, PowerLawFit, degree_distribution, fit_power_law_exponent, select_k_min
from .hops import (
    HopDistanceReport,
    ClubDegreeReport,
    estimate_hop_distance,
    club_hop_distance,
    largest_club_within_hops,
    club_degree_distribution,
)
from .summary import SummaryReport, summary_table

__all__ = [
    "RankedNodes",
    "rank_nodes",
    "club_size",
    "edge_positions",
    "RichClubPoint",
    "RichClubCurve",
    "CurvePointError",
    "TopShare",
    "rich_club_connectivity",
    "rich_club_curve",
    "default_r_grid",
    "top_share_links",
    "LinkMatrix",
    "link_distribution_matrix",
    "DegreeDistribution",
    "PowerLawFit",
    "degree_distribution",
    "fit_power_law_exponent",
    "select_k_min",
    "HopDistanceReport",
    "ClubDegreeReport",
    "estimate_hop_distance",
    "club_hop_distance",
    "largest_club_within_hops",
    "club_degree_distribution",
    "SummaryReport",
    "summary_table",
]
