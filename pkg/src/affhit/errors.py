"""Exception hierarchy shared by the solvers and the CLI."""


class AffhitError(Exception):
    """Base class for all package errors."""


class InputError(AffhitError, ValueError):
    """Malformed input: bad dimensions, unparsable rationals, bad JSON."""


class UnsupportedError(AffhitError):
    """The request is well-formed but outside what the solvers handle."""


class NotPolytope(AffhitError):
    """A visited member P(lambda) is unbounded."""

    def __init__(self, omega, message=None):
        self.omega = omega
        super().__init__(message or f"member at omega={omega} is unbounded")


class EmptyMember(AffhitError):
    """A visited member P(lambda) is empty, so no hitting set exists."""

    def __init__(self, omega, message=None):
        self.omega = omega
        super().__init__(message or f"member at omega={omega} is empty")
