"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input: unreadable files, bad JSON, schema violations."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
