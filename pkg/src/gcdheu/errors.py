"""Exception hierarchy shared by every module of the package."""


class GcdError(Exception):
    """Base class for all errors raised by gcdheu."""


class StructuralError(GcdError, TypeError):
    """Operands live in different rings or use different variable orders."""


class DomainError(GcdError, ValueError):
    """An argument lies outside the domain of an operation."""


class InvalidModulus(DomainError):
    """Symmetric remainders need a modulus of at least 3."""


class Unsupported(DomainError):
    """The operation is only defined for a narrower class of inputs."""


class ReconstructionOverflow(GcdError):
    """Digit peeling produced more digits than the caller allowed."""

    def __init__(self, z, limit):
        super().__init__(f"reconstruction at z={z} exceeded {limit} digits")
        self.z = z
        self.limit = limit


class HeuristicFailure(GcdError):
    """The heuristic could not certify a gcd.

    ``reason`` is one of ``division-test-failed``, ``reconstruction-overflow``,
    ``size-guard`` or ``retries-exhausted``; ``z`` is the last evaluation
    point that was attempted (or refused, for the size guard).
    """

    REASONS = (
        "division-test-failed",
        "reconstruction-overflow",
        "size-guard",
        "retries-exhausted",
    )

    def __init__(self, reason, z):
        if reason not in self.REASONS:
            raise ValueError(f"unknown failure reason {reason!r}")
        super().__init__(f"heuristic gcd failed ({reason}) at z={z}")
        self.reason = reason
        self.z = z


class ParseError(GcdError, ValueError):
    """Lexical or syntax error in a polynomial expression.

    ``column`` is 1-based.
    """

    def __init__(self, message, column):
        super().__init__(f"column {column}: {message}")
        self.message = message
        self.column = column


class RingError(ParseError):
    """The imaginary unit was used outside the Gaussian integers."""
