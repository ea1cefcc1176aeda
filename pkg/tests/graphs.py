"""Small graph builders, hypothesis strategies and brute-force oracles for the tests."""
import itertools

import networkx as nx
import numpy as np
from hypothesis import strategies as st

from src.generators import GeneratorConfig, generate
from src.graph import Graph, build_graph


def complete(n: int) -> Graph:
    return build_graph(n, list(itertools.combinations(range(n), 2)))[0]


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])[0]


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])[0]


def er(n: int, p: float, seed: int) -> Graph:
    return generate(GeneratorConfig(model="er_random", node_count=n, edge_probability=p, seed=seed))


def ba(n: int, m: int, seed: int) -> Graph:
    return generate(GeneratorConfig(model="ba", node_count=n, m=m, seed=seed))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges().tolist())
    return h


def edge_set(g: Graph) -> set:
    return {tuple(e) for e in g.edges().tolist()}


@st.composite
def graphs(draw, max_nodes: int = 30):
    n = draw(st.integers(min_value=1, max_value=max_nodes))
    pairs = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=3 * n))
    return build_graph(n, pairs)[0]


def mixed_small_graphs(count: int = 200):
    """Deterministic mix of ER and BA graphs with N <= 50."""
    rng = np.random.default_rng(2003)
    out = []
    for i in range(count):
        n = int(rng.integers(6, 51))
        if i % 2:
            out.append(er(n, float(rng.uniform(0.05, 0.5)), seed=i))
        else:
            out.append(ba(n, int(rng.integers(1, 4)), seed=i))
    return out


# --- brute-force oracles -------------------------------------------------

def naive_order(g: Graph) -> list:
    deg = [len(g.adjacency(u)) for u in range(g.node_count)]
    return sorted(range(g.node_count), key=lambda u: (-deg[u], u))


def naive_intra_links(g: Graph, members) -> int:
    members = set(members)
    return sum(1 for u, v in g.edges().tolist() if u in members and v in members)


def naive_phi(g: Graph, n: int) -> float:
    club = naive_order(g)[:n]
    return naive_intra_links(g, club) / (n * (n - 1) / 2)


def naive_link_matrix(g: Graph, bins: int) -> np.ndarray:
    order = naive_order(g)
    n = g.node_count
    bin_of = {}
    for p, u in enumerate(order, start=1):
        r = p / n
        b = 0
        while (b + 1) / bins < r - 1e-12:
            b += 1
        bin_of[u] = b
    counts = np.zeros((bins, bins), dtype=np.int64)
    for u, v in g.edges().tolist():
        i, j = sorted((bin_of[u], bin_of[v]))
        counts[i, j] += 1
    return counts


def naive_top_share(g: Graph, top: int):
    group = set(naive_order(g)[:top])
    touching = within = 0
    for u, v in g.edges().tolist():
        hits = (u in group) + (v in group)
        touching += hits >= 1
        within += hits == 2
    return touching, within


def floyd_warshall(g: Graph) -> np.ndarray:
    n = g.node_count
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0)
    for u, v in g.edges().tolist():
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def union_find_giant(g: Graph) -> int:
    parent = list(range(g.node_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges().tolist():
        parent[find(u)] = find(v)
    roots = [find(u) for u in range(g.node_count)]
    return max(roots.count(r) for r in set(roots))
