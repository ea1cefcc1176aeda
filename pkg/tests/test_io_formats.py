import csv
import io
import json
import os

import numpy as np
import pytest
from hypothesis import given, settings

from src.generators import GeneratorConfig, generate
from src.graph import build_graph
from src.io_formats import (
    ArtifactStore,
    parse_edge_list,
    write_club_degree_csv,
    write_compare_csv,
    write_edge_list,
    write_json,
    write_matrix_csv,
    write_phi_csv,
    write_summary_json,
)
from src.metrics import (
    RichClubCurve,
    club_degree_distribution,
    link_distribution_matrix,
    rank_nodes,
    rich_club_curve,
    summary_table,
)
from src.utils.errors import EdgeListParseError
from tests.graphs import ba, complete, edge_set, graphs


def parse(text, **kwargs):
    return parse_edge_list(io.StringIO(text), **kwargs)


# --- edge list parsing ---------------------------------------------------------

def test_parse_path():
    g, labels, report = parse("1 2\n2 3\n")
    assert (g.node_count, g.edge_count) == (3, 2)
    assert labels == ["1", "2", "3"]
    assert report.accepted == 2


def test_parse_counts_duplicates_and_self_loops():
    g, _, report = parse("# hdr\n1 2\n1 2\n3 3\n")
    assert g.edge_count == 1
    assert g.node_count == 3
    assert (report.duplicates, report.self_loops, report.comment_lines) == (1, 1, 1)
    assert report.accepted + report.duplicates + report.self_loops + report.malformed == 3


def test_parse_ignores_extra_tokens():
    g, _, report = parse("a b 17\nb c\n")
    assert g.edge_count == 2
    assert report.extra_token_lines == 1


def test_parse_rejects_single_token_line():
    with pytest.raises(EdgeListParseError) as err:
        parse("1 2\n\n7\n")
    assert err.value.line_number == 3
    assert "Line 3" in str(err.value)


def test_lenient_parse_skips_single_token_line():
    g, _, report = parse("1 2\n7\n2 3\n", strict=False)
    assert g.edge_count == 2
    assert report.malformed == 1
    assert report.accepted + report.malformed == report.total_lines


def test_parse_rejects_input_without_edges():
    with pytest.raises(EdgeListParseError):
        parse("# nothing here\n\n")


def test_parse_matches_in_memory_construction():
    rng = np.random.default_rng(12)
    pairs = rng.integers(0, 2000, size=(10_000, 2)).tolist()
    text = "".join(f"{u} {v}\n" for u, v in pairs)
    g, labels, report = parse(text)
    ids = {label: i for i, label in enumerate(labels)}
    expected, built = build_graph(len(labels), [(ids[str(u)], ids[str(v)]) for u, v in pairs])
    assert edge_set(g) == edge_set(expected)
    assert (report.duplicates, report.self_loops) == (built.duplicates, built.self_loops)


# --- edge list writing -------------------------------------------------------------

def test_write_complete_triangle():
    assert write_edge_list(complete(3)) == "0 1\n0 2\n1 2\n"


def test_write_edgeless_graph_lists_its_nodes():
    g = build_graph(4, [])[0]
    assert write_edge_list(g) == "0 0\n1 1\n2 2\n3 3\n"
    assert write_edge_list(g, keep_isolated=False) == ""


def test_write_places_isolated_nodes_in_id_order():
    g = build_graph(5, [(0, 3), (3, 4)])[0]
    assert write_edge_list(g) == "0 3\n1 1\n2 2\n3 4\n"


def test_write_uses_labels():
    g, labels, _ = parse("x y\ny z\n")
    assert write_edge_list(g, labels) == "x y\ny z\n"


def test_round_trip_is_isomorphic():
    g = ba(300, 2, seed=5)
    parsed, labels, _ = parse(write_edge_list(g))
    relabel = {i: int(label) for i, label in enumerate(labels)}
    assert {tuple(sorted((relabel[u], relabel[v]))) for u, v in edge_set(parsed)} == edge_set(g)
    assert write_edge_list(g) == write_edge_list(g)


@settings(max_examples=100)
@given(graphs())
def test_round_trip_keeps_every_node(g):
    parsed, labels, report = parse(write_edge_list(g))
    relabel = [int(label) for label in labels]
    assert parsed.node_count == g.node_count
    assert sorted(relabel) == list(range(g.node_count))
    assert {tuple(sorted((relabel[u], relabel[v]))) for u, v in edge_set(parsed)} == edge_set(g)
    assert report.self_loops == int((g.degrees() == 0).sum())


# --- CSV / JSON emitters --------------------------------------------------------------

def test_phi_csv_for_k4():
    g = complete(4)
    text = write_phi_csv(rich_club_curve(g, rank_nodes(g), [1.0]))
    assert text == "r,n,intra_links,phi\n1.000000,4,6,1.000000\n"


def test_phi_csv_of_empty_curve():
    assert write_phi_csv(RichClubCurve()) == "r,n,intra_links,phi\n"


def test_phi_csv_reparses():
    g = ba(2000, 3, seed=1)
    curve = rich_club_curve(g, rank_nodes(g))
    rows = list(csv.DictReader(io.StringIO(write_phi_csv(curve))))
    assert len(rows) == len(curve.points)
    assert [float(r["r"]) for r in rows] == sorted(float(r["r"]) for r in rows)


def test_compare_csv_is_long_format(k5):
    curve = rich_club_curve(k5, rank_nodes(k5), [0.4, 1.0])
    rows = list(csv.reader(io.StringIO(write_compare_csv([("a", curve), ("b", curve)]))))
    assert rows[0] == ["network", "r", "n", "intra_links", "phi"]
    assert [r[0] for r in rows[1:]] == ["a", "a", "b", "b"]


def test_matrix_csv_mirrors_off_diagonal():
    g, _ = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    m = link_distribution_matrix(g, rank_nodes(g), 0.5)
    assert write_matrix_csv(m) == "0.500000,1.000000\n1,2\n2,0\n"


def test_matrix_csv_of_edgeless_graph():
    g, _ = build_graph(4, [])
    assert write_matrix_csv(link_distribution_matrix(g, rank_nodes(g), 0.5)) == "0.500000,1.000000\n0,0\n0,0\n"


def test_matrix_csv_reparsed_upper_triangle_sums_to_links():
    g = generate(GeneratorConfig(model="fitness_ba", node_count=1000, m=3, seed=3))
    rows = list(csv.reader(io.StringIO(write_matrix_csv(link_distribution_matrix(g, rank_nodes(g))))))
    grid = np.array(rows[1:], dtype=np.int64)
    assert grid.shape == (20, 20)
    assert np.array_equal(grid, grid.T)
    assert np.triu(grid).sum() == g.edge_count


def test_club_degree_csv(k5):
    text = write_club_degree_csv(club_degree_distribution(k5, rank_nodes(k5), 1.0))
    assert text.splitlines()[0] == "k,observed,reference"
    assert text.splitlines()[-1] == "4,5,1.000000"


def test_summary_json_of_complete_graph(k10):
    doc = write_summary_json(summary_table(k10))
    assert '"node_count": 10' in doc
    assert '"link_count": 45' in doc
    data = json.loads(doc)
    assert data["fitted_exponent"] is None
    assert data["fit_error"]
    assert list(data)[:2] == ["node_count", "link_count"]
    assert doc == write_summary_json(summary_table(k10))


def test_write_json_accepts_plain_mapping():
    assert write_json({"b": 1, "a": [1, 2]}) == '{\n  "b": 1,\n  "a": [\n    1,\n    2\n  ]\n}\n'


# --- artifact store -----------------------------------------------------------------

def test_store_writes_nothing_before_commit(tmp_path):
    store = ArtifactStore(str(tmp_path / "run"))
    store.add("phi.csv", "r,n,intra_links,phi\n")
    assert not (tmp_path / "run").exists()
    paths = store.commit()
    assert [p.name for p in paths] == ["phi.csv"]
    assert (tmp_path / "run" / "phi.csv").read_text() == "r,n,intra_links,phi\n"
    assert store.names() == []
    assert not [f for f in os.listdir(tmp_path / "run") if f.endswith(".tmp")]


# --- golden fixture ------------------------------------------------------------------

@pytest.fixture
def golden(fixtures_dir):
    with open(os.path.join(fixtures_dir, "golden12.txt"), encoding="utf-8") as f:
        return parse_edge_list(f)


def test_golden_parse(golden):
    g, labels, report = golden
    assert (g.node_count, g.edge_count) == (12, 15)
    assert labels[:3] == ["701", "1239", "3356"]
    assert (report.total_lines, report.comment_lines, report.accepted, report.duplicates) == (23, 7, 15, 1)


def test_golden_summary(golden):
    g = golden.graph
    s = summary_table(g, r_cut=0.25, r_max=0.25)
    assert (s.links_touching_top5, s.links_within_top5) == (12, 3)
    assert (s.max_degree, s.avg_degree) == (6, 2.5)
    assert s.rich_club_phi == 1.0
    assert s.fitted_exponent is not None


def test_golden_ranking_and_matrix(golden):
    g = golden.graph
    ranks = rank_nodes(g)
    assert [golden.labels[u] for u in ranks.club(3)] == ["701", "1239", "3356"]
    m = link_distribution_matrix(g, ranks, 0.25)
    assert m.counts.tolist() == [
        [3, 4, 3, 2],
        [0, 1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 0, 0],
    ]
