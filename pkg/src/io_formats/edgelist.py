"""Whitespace edge-list reader and writer."""
from typing import Iterable, List, NamedTuple, Optional, Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field

from src.graph import Graph, build_graph
from src.utils.errors import EdgeListParseError


class ParseReport(BaseModel):
    total_lines: int = 0
    comment_lines: int = Field(0, description="Comment and blank lines")
    accepted: int = Field(0, description="Lines that produced a graph edge")
    duplicates: int = 0
    self_loops: int = 0
    malformed: int = Field(0, description="One-token lines skipped in lenient mode")
    extra_token_lines: int = Field(0, description="Lines with more than two tokens (extras ignored)")


class ParsedEdgeList(NamedTuple):
    graph: Graph
    labels: List[str]
    report: ParseReport


def parse_edge_list(lines: Iterable[str], strict: bool = True) -> ParsedEdgeList:
    """Parse "u v" lines; labels are opaque tokens mapped to dense ids in first-seen order.

    ``labels[i]`` is the original label of node i. A one-token line raises
    EdgeListParseError unless ``strict`` is False, in which case it is counted
    as malformed and skipped.
    """
    ids = {}
    labels: List[str] = []
    pairs = []
    report = ParseReport()

    def node(label: str) -> int:
        if label not in ids:
            ids[label] = len(labels)
            labels.append(label)
        return ids[label]

    for number, line in enumerate(lines, start=1):
        report.total_lines += 1
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            report.comment_lines += 1
            continue
        if len(tokens) == 1:
            if strict:
                raise EdgeListParseError(number, line.rstrip("\n"), "expected two endpoints")
            report.malformed += 1
            continue
        if len(tokens) > 2:
            report.extra_token_lines += 1
        pairs.append((node(tokens[0]), node(tokens[1])))

    if not labels:
        raise EdgeListParseError(report.total_lines, "", "no edges found")
    graph, built = build_graph(len(labels), pairs)
    report.duplicates = built.duplicates
    report.self_loops = built.self_loops
    report.accepted = len(pairs) - built.duplicates - built.self_loops
    logger.info(f"Parsed edge list: N={graph.node_count} L={graph.edge_count} "
                f"({report.duplicates} duplicates, {report.self_loops} self-loops, {report.malformed} malformed)")
    return ParsedEdgeList(graph, labels, report)


def write_edge_list(g: Graph, labels: Optional[Sequence[str]] = None, keep_isolated: bool = True) -> str:
    """One "u v" line per edge, lower id first, lines ordered by (u, v) id.

    A node without links is written as a "u u" line in its id slot, which the
    parser registers as a node and drops as a self-loop, so N survives a
    write/parse round trip. With ``keep_isolated=False`` only edges are written.
    """
    name = (lambda i: labels[i]) if labels is not None else str
    pairs = g.edges()
    if keep_isolated:
        isolated = np.flatnonzero(g.degrees() == 0)
        pairs = np.vstack((pairs, np.column_stack((isolated, isolated)))).astype(np.int64)
        pairs = pairs[np.lexsort((pairs[:, 1], pairs[:, 0]))]
    return "".join(f"{name(int(u))} {name(int(v))}\n" for u, v in pairs)
