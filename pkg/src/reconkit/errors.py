"""Exception types shared across the toolkit.

Exit-code mapping used by the CLI: InputError -> 2, CapacityError -> 3.
"""


class ReconError(Exception):
    """Base class for all toolkit errors."""


class InputError(ReconError):
    """Malformed or out-of-contract input (bad ranges, kind mismatches, ...)."""


class CapacityError(ReconError):
    """Input exceeds a documented size cap for an exact computation."""


class Graph6ParseError(InputError):
    """Malformed graph6 text; `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
