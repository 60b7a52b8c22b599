from boxball.constants import EXIT_DOMAIN, EXIT_USAGE, EXIT_VERIFY, EXIT_PRECISION


class BoxBallError(Exception):
    """Root of every error raised by the library. Carries the CLI exit code."""
    exit_code = EXIT_DOMAIN


class DomainError(BoxBallError):
    exit_code = EXIT_DOMAIN


class UsageError(BoxBallError):
    exit_code = EXIT_USAGE


class VerificationError(BoxBallError):
    exit_code = EXIT_VERIFY

    def __init__(self, message, n=None, t=None, expected=None, actual=None):
        super().__init__(message)
        self.n = n
        self.t = t
        self.expected = expected
        self.actual = actual


class PrecisionError(BoxBallError):
    exit_code = EXIT_PRECISION
