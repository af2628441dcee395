"""Exception hierarchy shared by all gapgraph modules."""


class GapGraphError(Exception):
    """Base class for every error raised by this package."""


class DomainError(GapGraphError, ValueError):
    """An argument lies outside the domain where an operation is defined."""


class EmptyRangeError(DomainError):
    pass


class SequencingError(GapGraphError):
    """A stream delivered records out of order."""


class RealizationError(GapGraphError):
    def __init__(self, message, failing_k=None):
        super().__init__(message)
        self.failing_k = failing_k


class DpgStuckError(GapGraphError):
    """No matching of the required size exists at some growth step.

    This would be a counterexample to the claim that every realization
    of PD_n admits the next growth step, so it is never swallowed.
    """

    def __init__(self, n, gap, matching_size):
        super().__init__(
            f"DPG step stuck at n={n}: gap {gap} needs a matching of size "
            f"{gap // 2}, best found {matching_size}"
        )
        self.n = n
        self.gap = gap
        self.matching_size = matching_size


class ScaleRefusal(GapGraphError):
    """The requested computation is too large for the exhaustive tier."""


class InsufficientDataError(GapGraphError):
    pass


class SearchError(GapGraphError):
    pass


class CacheChecksumError(GapGraphError):
    pass


class ZeroTableError(GapGraphError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
