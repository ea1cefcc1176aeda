from .edgelist import ParseReport, ParsedEdgeList, parse_edge_list, write_edge_list
from .writers import (
    write_phi_csv,
    write_compare_csv,
    write_matrix_csv,
    write_club_degree_csv,
    write_summary_json,
    write_json,
)
from .store import ArtifactStore

__all__ = [
    "ParseReport",
    "ParsedEdgeList",
    "parse_edge_list",
    "write_edge_list",
    "write_phi_csv",
    "write_compare_csv",
    "write_matrix_csv",
    "write_club_degree_csv",
    "write_summary_json",
    "write_json",
    "ArtifactStore",
]
