"""Exception hierarchy shared by the engine, audit and CLI."""


class HoradamError(Exception):
    """Base class for every error raised by this package."""


class UsageError(HoradamError, ValueError):
    """Malformed request: missing index, bad side condition, disc mismatch."""


class NotInvertible(HoradamError, ZeroDivisionError):
    """Division by a ring element (or matrix) with zero norm/determinant."""


class DegenerateQ(HoradamError):
    """A negative index or negative power of q was requested with q = 0."""


class RepeatedRoot(HoradamError):
    """The discriminant p^2 - 4q vanishes, so the Binet form is unavailable."""


class DegenerateTriple(HoradamError):
    """The Pythagorean construction collapsed to (0, 0, 0)."""


class InvariantViolation(HoradamError, AssertionError):
    """An internal consistency check failed; this is always a bug."""
