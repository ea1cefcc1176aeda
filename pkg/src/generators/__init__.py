from typing import Tuple

from src.graph import Graph
from .settings import GeneratorConfig, GenerationReport
from .sampling import WeightTree, make_rng, sample_power_law_degrees
from .preferential import generate_ba, generate_fitness_ba, generate_rich_club_ba, grow_preferential
from .inet import generate_inet_like, grow_inet_like, inet_from_degree_targets
from .random_graph import generate_er, grow_er

_BUILDERS = {
    "ba": grow_preferential,
    "fitness_ba": grow_preferential,
    "rich_club_ba": grow_preferential,
    "inet_like": grow_inet_like,
    "er_random": grow_er,
}


def generate_with_report(config: GeneratorConfig) -> Tuple[Graph, GenerationReport]:
    return _BUILDERS[config.model](config)


def generate(config: GeneratorConfig) -> Graph:
    return generate_with_report(config)[0]


__all__ = [
    "GeneratorConfig",
    "GenerationReport",
    "WeightTree",
    "make_rng",
    "sample_power_law_degrees",
    "generate",
    "generate_with_report",
    "generate_ba",
    "generate_fitness_ba",
    "generate_rich_club_ba",
    "generate_inet_like",
    "inet_from_degree_targets",
    "generate_er",
]
