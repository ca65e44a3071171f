"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ResourceError(RuntimeError):
    """A request would exceed a size or enumeration bound."""


class ConsistencyError(RuntimeError):
    """An internal self-check failed; indicates a bug, not bad input."""


class CbcParseError(ValueError):
    """Malformed .cbc input. ``lineno`` is 1-based."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
