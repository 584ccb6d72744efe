"""Exception types shared across the package.

Every failure mode that callers are expected to catch has its own class here,
so that the pipeline can translate mathematical dead ends into precise exit
codes instead of letting bare ValueErrors bubble up.
"""

from __future__ import annotations

BOUND_TOO_SMALL_MESSAGE = "the bound is too small"


class DesingError(Exception):
    """Base class for all errors raised by this package."""


class NotDivisible(DesingError):
    """Exact division failed: the dividend is not in the ideal generated by
    the divisor together with the ambient relations."""


class NotDivisibleInJets(DesingError):
    """Jet division failed: the dividend's low-order part is not a multiple
    of the divisor at the available precision."""


class SingularJacobian(DesingError):
    """A square jet-linear system had a non-unit pivot, so Newton iteration
    cannot proceed."""


class NoConvergence(DesingError):
    """Newton iteration ran out of doubling steps before reaching the
    requested precision."""


class NoRegularPair(DesingError):
    """No candidate element cuts the dimension of the base down to zero in
    two steps, so no regular system of parameters exists in the given ideal."""


class LiftFailed(DesingError):
    """A membership certificate was requested for an element that does not
    lie in the ideal."""


class BoundTooSmall(DesingError):
    """The truncation order of the input data is insufficient for the
    construction to proceed.  Rendered to users verbatim as the message
    'the bound is too small'."""

    def __init__(self, detail: str = "") -> None:
        super().__init__(BOUND_TOO_SMALL_MESSAGE)
        self.detail = detail


class SearchExhausted(DesingError):
    """An enumeration (minor systems, exponents, combinations) ran out of
    candidates without finding a witness.

    The complete flag records whether the search space was covered in full;
    when False the failure may be an artifact of a search cap rather than a
    mathematical impossibility.
    """

    def __init__(self, message: str = "", complete: bool = False) -> None:
        super().__init__(message)
        self.complete = complete


class PrecisionExhausted(DesingError):
    """All available jet precision was consumed by exact divisions; the
    certificate would be vacuous."""


class ParseError(DesingError):
    """Problem-file syntax error with source position."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
