"""Exceptions shared by every solver in the package."""


class ParseError(ValueError):
    """Malformed instance text; carries the 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotPtFree(Exception):
    """The input contains an induced path on ``t`` vertices.

    ``certificate`` is that path as a tuple of (0-based) vertex ids.
    """

    def __init__(self, certificate, t):
        self.certificate = tuple(certificate)
        self.t = t
        super().__init__(f"graph is not P{t}-free: induced path {list(self.certificate)}")


class InvariantViolation(AssertionError):
    """A structural guarantee that should hold on valid input did not."""


class SizeGuardError(ValueError):
    """A brute-force oracle was called on an instance above its size cap."""
