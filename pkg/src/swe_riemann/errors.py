"""Exception hierarchy for the shallow-water Riemann solver."""
from __future__ import annotations


class SWEError(Exception):
    """Base class for every error raised by this package."""


class NonPositiveDepth(SWEError, ValueError):
    pass


class DegenerateJump(SWEError):
    """Shock speed requested for a jump of vanishing strength."""


class OffCurve(SWEError):
    """The two states are not related by the requested wave."""


class RangeViolation(SWEError, ValueError):
    pass


class WrongRegion(SWEError):
    pass


class NoIntersection(SWEError):
    pass


class ConvergenceFailure(SWEError, RuntimeError):
    pass


class NoStationaryWave(SWEError):
    """The bottom step is too high for the incoming flow (choking)."""


class DegenerateVelocity(SWEError):
    pass


class NoSonicPoint(SWEError):
    pass


class EmptyBracket(SWEError):
    pass


class UnvalidatedSolution(SWEError):
    pass


class VacuumData(SWEError):
    """Flat-bottom data whose wave curves only meet at zero depth."""


class ParseError(SWEError):
    """Malformed input file; ``line`` and ``field`` locate the problem when known."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.field = field


class ValidationError(SWEError, ValueError):
    """Input document violates the problem-file schema."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
        # filled in by the problem-file parser when the key can be located
        self.line: int | None = None


class NoSolution(SWEError):
    pass
