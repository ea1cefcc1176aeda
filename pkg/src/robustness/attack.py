"""Node-removal experiments: targeted attack on the richest nodes versus random failure."""
from typing import Dict, Iterable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from tqdm import tqdm

from config import SHOW_PROGRESS
from src.generators.sampling import make_rng
from src.graph import Graph, average_path_length, component_sizes, induced_subgraph
from src.metrics.ranking import RankedNodes, club_size
from src.utils.errors import AttackError, InvalidNodeError


class RobustnessReport(BaseModel):
    removal_mode: Literal["targeted_by_rank", "uniform_random"]
    removed_fraction: float
    removed_node_count: int
    surviving_node_count: int
    giant_component_size: int
    giant_component_fraction_after: float = Field(..., description="Giant component size / surviving nodes")
    giant_component_fraction_of_original: float = Field(..., description="Giant component size / original N")
    average_path_length_after: Optional[float] = Field(None, description="Mean hops over connected surviving pairs")
    connected_pairs: Optional[int] = None
    disconnected_pairs: Optional[int] = None
    seed: Optional[int] = None


class AttackComparison(BaseModel):
    fraction: float
    targeted: RobustnessReport
    random: List[RobustnessReport]
    mean_random_giant_fraction: float
    giant_fraction_delta: float = Field(..., description="mean random minus targeted giant fraction")
    targeted_worse_in: int = Field(..., description="Random trials whose giant fraction exceeds the targeted one")


def remove_nodes(g: Graph, victims: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Graph on the surviving nodes with every incident edge removed; returns the old -> new id mapping."""
    gone = np.zeros(g.node_count, dtype=bool)
    victims = np.asarray(list(victims), dtype=np.int64)
    if victims.size and (victims.min() < 0 or victims.max() >= g.node_count):
        bad = victims[(victims < 0) | (victims >= g.node_count)][0]
        raise InvalidNodeError(f"Victim {bad} is not in [0, {g.node_count})")
    gone[victims] = True
    survivors = np.flatnonzero(~gone)
    if survivors.size == 0:
        raise AttackError("Removing every node leaves no graph")
    return induced_subgraph(g, survivors)


def _victim_count(g: Graph, fraction: float) -> int:
    if not 0.0 < fraction < 1.0:
        raise AttackError(f"Removal fraction must lie in (0, 1), got {fraction}")
    k = club_size(fraction, g.node_count)
    if k < 1:
        raise AttackError(f"Fraction {fraction} removes no node from N={g.node_count}")
    return k


def _measure(g: Graph, victims: Sequence[int], mode: str, fraction: float,
             seed: Optional[int], measure_paths: bool) -> RobustnessReport:
    remaining, _ = remove_nodes(g, victims)
    giant = int(component_sizes(remaining)[0])
    fields = dict(removal_mode=mode, removed_fraction=fraction, removed_node_count=len(victims),
                  surviving_node_count=remaining.node_count, giant_component_size=giant,
                  giant_component_fraction_after=giant / remaining.node_count,
                  giant_component_fraction_of_original=giant / g.node_count, seed=seed)
    if measure_paths and remaining.node_count >= 2:
        paths = average_path_length(remaining)
        fields.update(average_path_length_after=paths.mean, connected_pairs=paths.connected_pairs,
                      disconnected_pairs=paths.disconnected_pairs)
    return RobustnessReport(**fields)


def targeted_attack(g: Graph, ranks: RankedNodes, fraction: float, measure_paths: bool = True) -> RobustnessReport:
    """Remove the top floor(f N) ranked nodes at once, using the original ranking."""
    k = _victim_count(g, fraction)
    report = _measure(g, ranks.club(k).tolist(), "targeted_by_rank", fraction, None, measure_paths)
    logger.info(f"Targeted attack f={fraction}: giant fraction {report.giant_component_fraction_after:.4f}")
    return report


def random_failure(g: Graph, fraction: float, seed: int, measure_paths: bool = True) -> RobustnessReport:
    k = _victim_count(g, fraction)
    rng = make_rng(seed)[0]
    victims = np.sort(rng.choice(g.node_count, size=k, replace=False)).tolist()
    report = _measure(g, victims, "uniform_random", fraction, seed, measure_paths)
    logger.debug(f"Random failure f={fraction} seed={seed}: giant fraction {report.giant_component_fraction_after:.4f}")
    return report


def attack_comparison(g: Graph, ranks: RankedNodes, fraction: float, seeds: Sequence[int],
                      measure_paths: bool = True) -> AttackComparison:
    if not seeds:
        raise AttackError("attack_comparison needs at least one random-failure seed")
    targeted = targeted_attack(g, ranks, fraction, measure_paths)
    randoms = [random_failure(g, fraction, s, measure_paths)
               for s in tqdm(seeds, desc="Random failures", disable=not SHOW_PROGRESS)]
    mean_random = float(np.mean([r.giant_component_fraction_after for r in randoms]))
    worse = sum(r.giant_component_fraction_after > targeted.giant_component_fraction_after for r in randoms)
    return AttackComparison(fraction=fraction, targeted=targeted, random=randoms,
                            mean_random_giant_fraction=mean_random,
                            giant_fraction_delta=mean_random - targeted.giant_component_fraction_after,
                            targeted_worse_in=worse)
