"""Erdős–Rényi baselines G(N, p) and G(N, L)."""
from typing import Tuple

import numpy as np
from loguru import logger

from src.graph import Graph, build_graph
from src.utils.errors import GeneratorError
from .sampling import make_rng
from .settings import GenerationReport, GeneratorConfig


def pair_from_index(index: np.ndarray, n: int) -> np.ndarray:
    """Decode row-major indices of the strict upper triangle of an n x n matrix into (i, j) pairs."""
    k = np.asarray(index, dtype=np.int64)
    total = n * (n - 1) // 2
    i = n - 2 - np.floor(np.sqrt(-8.0 * k + 4.0 * n * (n - 1) - 7) / 2.0 - 0.5).astype(np.int64)
    j = k + i + 1 - total + (n - i) * (n - i - 1) // 2
    return np.column_stack((i, j))


def grow_er(config: GeneratorConfig) -> Tuple[Graph, GenerationReport]:
    rng = make_rng(config.seed)[0]
    n = config.node_count
    all_pairs = n * (n - 1) // 2
    if config.target_links is not None:
        links = config.target_links
    else:
        # independent inclusion of every pair == binomial count + uniform pair set
        links = int(rng.binomial(all_pairs, config.edge_probability))
    picked = np.sort(rng.choice(all_pairs, size=links, replace=False)) if links else np.empty(0, dtype=np.int64)
    graph, _ = build_graph(n, pair_from_index(picked, n))
    logger.info(f"Generated er_random graph N={n} L={graph.edge_count} (seed={config.seed})")
    return graph, GenerationReport(model="er_random", seed=config.seed, node_count=n, link_count=graph.edge_count)


def generate_er(config: GeneratorConfig) -> Graph:
    if config.model != "er_random":
        raise GeneratorError(f"Expected an er_random configuration, got {config.model}")
    return grow_er(config)[0]
