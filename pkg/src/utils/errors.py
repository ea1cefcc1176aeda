"""Exception hierarchy and CLI exit codes."""

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3


class RichClubError(ValueError):
    """Base class for every rejection raised by the toolkit."""


class InvalidNodeError(RichClubError):
    pass


class InvalidEdgeError(RichClubError):
    def __init__(self, edge, node_count: int):
        self.edge = tuple(int(x) for x in edge)
        super().__init__(f"Edge {self.edge} has an endpoint outside [0, {node_count})")


class GraphConstructionError(RichClubError):
    pass


class GeneratorError(RichClubError):
    pass


class ClubTooSmallError(RichClubError):
    def __init__(self, r: float, club_size: int, minimum: int = 2):
        self.r = r
        self.club_size = club_size
        super().__init__(f"Club too small for connectivity: r={r} gives n={club_size} (need n >= {minimum})")


class EstimateUndefinedError(RichClubError):
    pass


class BinningError(RichClubError):
    pass


class FitError(RichClubError):
    pass


class AttackError(RichClubError):
    pass


class EdgeListParseError(RichClubError):
    def __init__(self, line_number: int, line: str, reason: str):
        self.line_number = line_number
        self.line = line
        super().__init__(f"Line {line_number}: {reason}: {line!r}")
