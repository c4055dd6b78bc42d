"""Exception types shared across the package."""


class SrpvecError(Exception):
    """Base class for all srpvec errors."""


class DomainError(SrpvecError, ValueError):
    """An argument violates an operation's precondition."""


class EdgeListParseError(SrpvecError, ValueError):
    """A malformed edge-list line.  Carries the 1-based line number."""

    def __init__(self, message, line_number):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ConfigError(SrpvecError, ValueError):
    """An invalid run configuration (CLI flags, manifest layout, ...)."""
