"""Exception hierarchy for symstress.

Every failure mode raised by the library derives from :class:`SymstressError`,
so callers (and the CLI) can catch one base class and map subtypes to exit
codes or messages.
"""

from __future__ import annotations

__all__ = [
    "SymstressError",
    "NotSymmetric",
    "ClassMismatch",
    "NonIntegerMultiplicity",
    "ParityViolation",
    "DivisibilityViolation",
    "UnsupportedGroup",
    "CrossCheckFailure",
    "DegenerateSpan",
    "DimensionMismatch",
    "UnknownEntry",
    "SingularMap",
]


class SymstressError(Exception):
    """Base class for all symstress errors."""


class NotSymmetric(SymstressError):
    """The framework is not invariant under the requested group operation.

    Raised when some vertex image has no matching vertex within tolerance, or
    when the induced vertex permutation does not map edges to edges.
    """


class ClassMismatch(SymstressError):
    """Operations in one conjugacy class fixed different numbers of vertices
    or edges; the framework cannot be symmetric under the full group."""


class NonIntegerMultiplicity(SymstressError):
    """Character reduction produced a non-integer multiplicity, meaning the
    input character is not a character of the group (within tolerance)."""


class ParityViolation(SymstressError):
    """A closed-form coefficient failed a mod-2 consistency condition, so the
    supplied counts cannot come from a framework with this symmetry."""


class DivisibilityViolation(SymstressError):
    """A closed-form coefficient failed a mod-n divisibility condition, so the
    supplied counts cannot come from a framework with this symmetry."""


class UnsupportedGroup(SymstressError):
    """No closed-form case table exists for this group / census combination.

    The general character reduction still applies; only the closed-form
    shortcut is unavailable.
    """


class CrossCheckFailure(SymstressError):
    """The closed-form decomposition and the general character reduction
    disagreed.  This indicates an internal inconsistency and is never expected
    for valid input."""


class DegenerateSpan(SymstressError):
    """A supplied basis is numerically rank-deficient (its vectors do not
    span a space of the claimed dimension)."""


class DimensionMismatch(SymstressError):
    """An array has the wrong shape for the requested operation."""


class UnknownEntry(SymstressError):
    """The requested catalog entry name does not exist."""


class SingularMap(SymstressError):
    """An affine transformation matrix is singular (to numerical tolerance)
    and cannot be applied to a framework."""
