"""Exception taxonomy.

Two families matter to callers:

* ``PreconditionError`` and friends mean the *input* was bad (CLI exit 3).
* ``GuaranteeViolation`` means an existence statement that holds for every
  valid input failed to materialise: either a precondition slipped through
  unchecked or there is a bug (CLI exit 4).  These exceptions always carry
  the full enumeration that came up empty, so a fuzzing run can be triaged
  from the error alone.
"""

from __future__ import annotations


class UnicoverError(Exception):
    """Base class for every error raised by this package."""


class DegenerateGeometry(UnicoverError):
    """Zero vector, flat simplex, lower-dimensional input, and the like."""


class UnboundedRegion(UnicoverError):
    """A half-space system that was required to be bounded is not."""


class PreconditionError(UnicoverError):
    """A documented precondition of an operation does not hold."""


class SliceNotLattice(PreconditionError):
    """A prismatoid slice has a fractional vertex.

    Carries the offending rational vertex in ``vertex``.
    """

    def __init__(self, height, vertex):
        self.height = height
        self.vertex = vertex
        super().__init__(f"slice at height {height} has non-lattice vertex {vertex}")


class OrientationFailure(PreconditionError):
    """Neither slice of a prismatoid slab is a weak summand of the other."""


class BudgetError(UnicoverError):
    """A resource guard tripped (point counts, set sizes)."""


class GuaranteeViolation(UnicoverError):
    """An existence guarantee failed; carries diagnostics in ``details``."""

    def __init__(self, message, details=None):
        self.details = details if details is not None else {}
        super().__init__(message)


class NoCornerInside(GuaranteeViolation):
    """No corner point of a circumscribed parallelepiped lies in the container."""


class NoWitness(GuaranteeViolation):
    """A corner tetrahedron turned out to hold no non-vertex lattice point."""


class NoStripWitness(GuaranteeViolation):
    """Both open strips of a width >= 2 segment pair are lattice-point free."""
