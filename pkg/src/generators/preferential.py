"""Growth models with preferential attachment: BA, Fitness BA and the rich-club BA variant.

All three share one growth loop. Starting from a complete graph on m+1
nodes, each new node attaches to m distinct existing nodes drawn with
probability proportional to fitness * degree (fitness 1 for plain BA),
sequentially without replacement. The rich-club variant first adds c links
between existing nodes, both endpoints chosen preferentially.
"""
from typing import List, Set, Tuple

import numpy as np
from loguru import logger

from src.graph import Graph, build_graph
from src.utils.errors import GeneratorError
from .sampling import WeightTree, make_rng
from .settings import GenerationReport, GeneratorConfig


def _grow(node_count: int, m: int, fitness: np.ndarray, extra_links: int,
          retries: int, rng: np.random.Generator) -> Tuple[List[Tuple[int, int]], int]:
    neighbors: List[Set[int]] = [set() for _ in range(node_count)]
    degree = [0] * node_count
    edges: List[Tuple[int, int]] = []
    tree = WeightTree(node_count)
    eta = fitness.tolist()

    def link(u: int, v: int) -> None:
        neighbors[u].add(v)
        neighbors[v].add(u)
        edges.append((u, v))
        for x in (u, v):
            degree[x] += 1
            tree.set(x, eta[x] * degree[x])

    for u in range(m + 1):
        for v in range(u + 1, m + 1):
            link(u, v)

    skipped = 0
    for new in range(m + 1, node_count):
        for _ in range(extra_links):
            if not _add_internal_link(tree, neighbors, link, retries, rng):
                skipped += 1
        for target in tree.sample_distinct(m, rng):
            link(new, target)
    return edges, skipped


def _add_internal_link(tree: WeightTree, neighbors, link, retries: int, rng) -> bool:
    for _ in range(retries):
        u = tree.sample(rng)
        w = tree.weight(u)
        tree.set(u, 0.0)
        try:
            v = tree.sample(rng)
        finally:
            tree.set(u, w)
        if v not in neighbors[u]:
            link(u, v)
            return True
    return False


def _fitness(config: GeneratorConfig, rng: np.random.Generator) -> np.ndarray:
    if config.model != "fitness_ba" or config.fitness == "constant":
        return np.ones(config.node_count)
    # (0, 1] so that no node is unreachable by attachment
    return 1.0 - rng.random(config.node_count)


def grow_preferential(config: GeneratorConfig) -> Tuple[Graph, GenerationReport]:
    attach_rng, fitness_rng = make_rng(config.seed, streams=2)
    fitness = _fitness(config, fitness_rng)
    extra = config.extra_links or 0
    edges, skipped = _grow(config.node_count, config.m, fitness, extra, config.extra_link_retries, attach_rng)
    if skipped:
        logger.warning(f"Skipped {skipped} extra links after {config.extra_link_retries} retries each")

    graph, _ = build_graph(config.node_count, edges)
    logger.info(f"Generated {config.model} graph N={graph.node_count} L={graph.edge_count} (m={config.m}, c={extra}, seed={config.seed})")
    report = GenerationReport(model=config.model, seed=config.seed, node_count=graph.node_count,
                              link_count=graph.edge_count, skipped_extra_links=skipped)
    return graph, report


def _expect(config: GeneratorConfig, model: str) -> None:
    if config.model != model:
        raise GeneratorError(f"Expected a {model} configuration, got {config.model}")


def generate_ba(config: GeneratorConfig) -> Graph:
    _expect(config, "ba")
    return grow_preferential(config)[0]


def generate_fitness_ba(config: GeneratorConfig) -> Graph:
    _expect(config, "fitness_ba")
    return grow_preferential(config)[0]


def generate_rich_club_ba(config: GeneratorConfig) -> Graph:
    _expect(config, "rich_club_ba")
    return grow_preferential(config)[0]
