"""Simplified Inet-like generator.

Degree targets come from a truncated discrete power law. Nodes with a target
above one form a uniformly random spanning tree, degree-one nodes hang off
tree nodes with linear preference, and the remaining free stubs are paired
highest-degree-first. Stubs that cannot be paired are discarded.
"""
import heapq
from typing import List, Sequence, Set, Tuple

import numpy as np
from loguru import logger

from src.graph import Graph, build_graph
from src.utils.errors import GeneratorError
from .sampling import WeightTree, make_rng, sample_power_law_degrees
from .settings import GenerationReport, GeneratorConfig


def _prufer_tree(size: int, rng: np.random.Generator) -> List[Tuple[int, int]]:
    """Edges of a uniformly random labelled tree on 0..size-1."""
    if size == 2:
        return [(0, 1)]
    seq = rng.integers(0, size, size=size - 2).tolist()
    remaining = [1] * size
    for x in seq:
        remaining[x] += 1
    leaves = [i for i in range(size) if remaining[i] == 1]
    heapq.heapify(leaves)
    pairs = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        pairs.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    pairs.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return pairs


def _wire(targets: np.ndarray, rng: np.random.Generator, preference: str):
    n = targets.shape[0]
    tree_nodes = np.flatnonzero(targets > 1)
    if tree_nodes.size < 2:
        raise GeneratorError(f"Need at least 2 nodes with target degree > 1 for a spanning tree, got {tree_nodes.size}")

    free = targets.tolist()
    degree = [0] * n
    neighbors: List[Set[int]] = [set() for _ in range(n)]
    edges: List[Tuple[int, int]] = []
    offset = 1.0 if preference == "degree_plus_one" else 0.0
    hosts = WeightTree(n)

    def link(u: int, v: int) -> None:
        neighbors[u].add(v)
        neighbors[v].add(u)
        edges.append((u, v))
        for x in (u, v):
            degree[x] += 1
            free[x] -= 1

    # 1) spanning tree over every node that wants more than one link
    ids = tree_nodes.tolist()
    for a, b in _prufer_tree(len(ids), rng):
        link(ids[a], ids[b])
    for u in ids:
        hosts.set(u, degree[u] + offset)

    # 2) degree-one nodes attach to tree nodes with linear preference
    for leaf in np.flatnonzero(targets == 1).tolist():
        host = hosts.sample(rng)
        link(leaf, host)
        hosts.set(host, degree[host] + offset)

    # 3) pair the remaining free stubs, richest nodes first
    pending = sorted((u for u in ids if free[u] > 0), key=lambda u: (-int(targets[u]), u))
    for i, u in enumerate(pending):
        for v in pending[i + 1:]:
            if free[u] <= 0:
                break
            if free[v] > 0 and v not in neighbors[u]:
                link(u, v)
    discarded = sum(max(free[u], 0) for u in pending)
    return edges, discarded, len(ids)


def inet_from_degree_targets(targets: Sequence[int], seed: int, preference: str = "degree") -> Tuple[Graph, GenerationReport]:
    """Run the tree / attachment / pairing steps on an explicit degree-target sequence."""
    targets = np.asarray(targets, dtype=np.int64)
    if targets.size < 2 or targets.min() < 1:
        raise GeneratorError("Degree targets must be >= 1 for at least 2 nodes")
    rng = make_rng(seed)[0]
    return _build(targets, rng, preference, seed)


def _build(targets: np.ndarray, rng: np.random.Generator, preference: str, seed: int) -> Tuple[Graph, GenerationReport]:
    edges, discarded, tree_size = _wire(targets, rng, preference)
    if discarded:
        logger.warning(f"Discarded {discarded} unmatched stubs")
    graph, _ = build_graph(int(targets.size), edges)
    report = GenerationReport(model="inet_like", seed=seed, node_count=graph.node_count, link_count=graph.edge_count,
                              discarded_stubs=discarded, tree_nodes=tree_size)
    return graph, report


def grow_inet_like(config: GeneratorConfig) -> Tuple[Graph, GenerationReport]:
    rng = make_rng(config.seed)[0]
    k_max = config.k_max or config.node_count - 1
    targets = sample_power_law_degrees(rng, config.node_count, config.exponent, 1, k_max)
    graph, report = _build(targets, rng, config.preference, config.seed)
    logger.info(f"Generated inet_like graph N={graph.node_count} L={graph.edge_count} "
                f"(y={config.exponent}, target stubs={int(targets.sum())}, discarded={report.discarded_stubs})")
    return graph, report


def generate_inet_like(config: GeneratorConfig) -> Graph:
    if config.model != "inet_like":
        raise GeneratorError(f"Expected an inet_like configuration, got {config.model}")
    return grow_inet_like(config)[0]
