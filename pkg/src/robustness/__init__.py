from .attack import (
    RobustnessReport,
    AttackComparison,
    remove_nodes,
    targeted_attack,
    random_failure,
    attack_comparison,
)

__all__ = [
    "RobustnessReport",
    "AttackComparison",
    "remove_nodes",
    "targeted_attack",
    "random_failure",
    "attack_comparison",
]
