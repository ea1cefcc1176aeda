"""Utilities package."""
from .logger import setup_logging
from .errors import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_DATA,
    RichClubError,
    InvalidNodeError,
    InvalidEdgeError,
    GraphConstructionError,
    GeneratorError,
    ClubTooSmallError,
    EstimateUndefinedError,
    BinningError,
    FitError,
    AttackError,
    EdgeListParseError,
)

__all__ = [
    'setup_logging',
    'EXIT_OK',
    'EXIT_USAGE',
    'EXIT_DATA',
    'RichClubError',
    'InvalidNodeError',
    'InvalidEdgeError',
    'GraphConstructionError',
    'GeneratorError',
    'ClubTooSmallError',
    'EstimateUndefinedError',
    'BinningError',
    'FitError',
    'AttackError',
    'EdgeListParseError',
]
