"""Exception types shared across the library."""


class ToggleLabError(Exception):
    """Base class for all library-specific errors."""


class CycleError(ToggleLabError):
    """The input cover relation contains a directed cycle."""


class NotReducedError(ToggleLabError):
    """A cover pair is implied by the others (input was not a Hasse diagram)."""


class UnknownElementError(ToggleLabError):
    """An element identifier does not belong to the poset."""


class SizeCapError(ToggleLabError):
    """An exhaustive operation was asked to run beyond its configured cap."""


class NotGradedError(ToggleLabError):
    """A rank-based operation was applied to a poset with no rank function."""


class RankRangeError(ToggleLabError):
    """A rank index lies outside 0..r for the poset at hand."""


class KindError(ToggleLabError):
    """A state or word of the wrong kind was passed to an operation."""


class MembershipError(ToggleLabError):
    """A labeling does not belong to the space an operation requires."""


class SpaceMismatchError(ToggleLabError):
    """An action and a state live over different posets or spaces."""


class TruncatedOrbitError(ToggleLabError):
    """An exact per-orbit quantity was requested from a truncated orbit."""


class ParseError(ToggleLabError):
    """Malformed textual input (poset file, state literal, statistic)."""
