"""Exception types raised by twochar.

Every failure that reports structured evidence carries it in ``witness``
(a tuple of element indices, a generator row, or similar), so callers and
tests can assert on the exact violation found.
"""

from __future__ import annotations


class TwoCharError(Exception):
    """Base class; ``witness`` holds structured evidence when available."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAGroup(TwoCharError):
    """Cayley-table validation failed (shape, identity, inverses, or a
    violated associativity triple reported in ``witness``)."""


class NotAPermutation(TwoCharError):
    """A generator row is not a bijection on ``range(degree)``."""


class ClosureTooLarge(TwoCharError):
    """Generated permutation group exceeded the element bound."""


class NotAMultiple(TwoCharError):
    """Target level is not a multiple of the source level."""


class NotACocycle(TwoCharError):
    """Operation requires a cocycle; the differential was nonzero."""


class TooLarge(TwoCharError):
    """Cohomology computation exceeded its size bound."""


class NotContained(TwoCharError):
    """Conjugated subgroup is not inside the cochain's domain group."""


class DegreeZero(TwoCharError):
    """The homotopy operator is undefined in degree zero."""


class NotAHomomorphism(TwoCharError):
    """Boundary map fails multiplicativity; ``witness`` is the pair."""


class NotAnAction(TwoCharError):
    """Action table fails the left-action or automorphism laws."""


class EquivarianceFailure(TwoCharError):
    """Boundary is not equivariant; ``witness`` is the failing (g, h)."""


class PeifferFailure(TwoCharError):
    """Peiffer identity fails; ``witness`` is the failing (h, h')."""


class NotComposable(TwoCharError):
    """2-morphisms are not adjacent for the requested composition."""


class AmbientMismatch(TwoCharError):
    """Operands live over different ambient groups."""


class NotASubgroup(TwoCharError):
    """Claimed subgroup relation does not hold."""


class GroupMismatch(TwoCharError):
    """Ring elements belong to rings over different groups."""


class AlphaNotHomomorphism(TwoCharError):
    """Mark weight is not multiplicative on cohomology classes."""


class AlphaIllDefined(TwoCharError):
    """Mark weight took different values on cohomologous cocycles."""


class NotCommuting(TwoCharError):
    """2-character arguments must commute (up to the boundary twist)."""


class NotNormalized(TwoCharError):
    """Cocycle must vanish on identity arguments."""


class NotScalarMultiple(TwoCharError):
    """Measured matrix is not a scalar multiple of the reference."""


class TripleNotInG(TwoCharError):
    """(a, b, h) does not satisfy the twisted-commutation condition."""
