"""Exception hierarchy.

``ValidationError`` covers everything caused by bad input or misuse of an
operation's contract; the CLI maps it to exit code 2.  ``SingularMatrix``,
``CertificateInvalid`` and ``CapExceeded`` get their own exit codes (3, 4, 5).
"""

from __future__ import annotations


class Error(Exception):
    """Base class for all lgvcramer exceptions."""


class ValidationError(Error):
    """Bad input or violated precondition."""


class InputError(ValidationError):
    """Malformed external input (JSON shape, scalar syntax, float weights)."""


class DuplicateVertex(ValidationError):
    pass


class UnknownEndpoint(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class CycleDetected(ValidationError):
    """The digraph has a directed cycle; ``cycle`` holds one witness."""

    def __init__(self, cycle: list[str]):
        self.cycle = list(cycle)
        closed = " -> ".join(self.cycle + self.cycle[:1])
        super().__init__(f"cycle detected: {closed}")


class JunctionMismatch(ValidationError):
    pass


class VertexRepeated(ValidationError):
    pass


class MissingEdge(ValidationError):
    """Consecutive path vertices are not joined by an edge of the graph."""


class UnknownVertex(ValidationError):
    pass


class DuplicateInRole(ValidationError):
    pass


class SizeMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class SizeTooLarge(ValidationError):
    """Instance exceeds a hard size guard (factorial or enumeration budget)."""


class SingularMatrix(Error):
    """det = 0 where a nonsingular matrix is required."""

    def __init__(self, message: str = "matrix is singular: det(A) = 0"):
        super().__init__(message)


class CertificateInvalid(Error):
    """Internal consistency failure while building or checking a certificate.

    This indicates a bug, never a property of the input; it is raised,
    not suppressed.
    """


class CapExceeded(Error):
    """Enumeration aborted: more objects exist than the configured cap."""

    def __init__(self, kind: str, cap: int):
        self.cap = cap
        super().__init__(f"more than {cap} {kind}; enumeration aborted")
