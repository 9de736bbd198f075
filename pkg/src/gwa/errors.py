"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed textual input.  `position` is the 0-based offset of the issue."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(ValueError):
    """Input outside an operation's domain (e.g. a point that is not a root)."""


class MoveError(DomainError):
    """An elementary Morita move whose coprimality precondition fails."""
