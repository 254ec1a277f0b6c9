"""Error hierarchy shared by the numerical core and the command line."""


class LNDError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"
    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict:
        """Machine-readable form used by the command line."""
        return {"error": self.code, "message": self.message}


class DomainError(LNDError, ValueError):
    """Argument outside the domain of the requested operation."""

    code = "domain_error"
    exit_code = 3


class SingularPoint(LNDError, ValueError):
    """Argument sits on a logarithmic singularity."""

    code = "singular_point"
    exit_code = 3


class CutAmbiguity(LNDError, ValueError):
    """Argument lies on a branch cut and no side was chosen."""

    code = "cut_ambiguity"
    exit_code = 3


class NoConvergence(LNDError, ArithmeticError):
    """A series did not reach its tolerance within the term cap."""

    code = "no_convergence"
    exit_code = 3


class NearIntegerDegree(LNDError, ValueError):
    """Non-integer degree required but the given one is too close to an integer."""

    code = "near_integer_degree"
    exit_code = 3


class InternalInconsistency(LNDError, AssertionError):
    """A structural identity failed; this is a bug, never bad input."""

    code = "internal_inconsistency"
    exit_code = 1


class CacheIOError(LNDError, OSError):
    """Reading or writing the coefficient cache failed."""

    code = "cache_io"
    exit_code = 4
