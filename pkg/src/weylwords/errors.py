"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the domain of the operation."""


class ParseError(DomainError):
    """Malformed textual input; carries the 1-based offending position."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ResourceLimitError(RuntimeError):
    """A computation exceeded its declared budget.

    ``partial_count`` reports how far the computation got before bailing
    out (e.g. number of class members materialized so far).
    """

    def __init__(self, message, partial_count=None):
        super().__init__(message)
        self.partial_count = partial_count
