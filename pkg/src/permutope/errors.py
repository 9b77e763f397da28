"""Exception hierarchy.

Every error raised on purpose by the library derives from PermutopeError, so
outer surfaces (CLI exit codes, MCP error payloads) can tell input problems
from resource limits.
"""


class PermutopeError(Exception):
    """Base class for all library errors."""


class ParseError(PermutopeError, ValueError):
    """Malformed cycle notation, partition syntax, group spec or matrix JSON."""


class DegreeMismatchError(PermutopeError, ValueError):
    """Two objects that must act on the same {1..n} do not."""

    def __init__(self, left: int, right: int, what: str = "degree"):
        super().__init__(f"{what} mismatch: {left} != {right}")
        self.left = left
        self.right = right


class PointOutOfRangeError(PermutopeError, ValueError):
    """A point outside 1..n."""

    def __init__(self, point: int, n: int):
        super().__init__(f"point {point} out of range 1..{n}")
        self.point = point
        self.n = n


class NotASubgroupError(PermutopeError, ValueError):
    """H is not contained in G."""


class CapExceededError(PermutopeError, RuntimeError):
    """A configured size limit was hit."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeds cap {cap}")
        self.what = what
        self.cap = cap


class InvariantError(PermutopeError, AssertionError):
    """A self-check failed. Indicates a bug, never bad input."""
