"""Exception hierarchy shared by every evaluator."""

from __future__ import annotations


class ZetaLabError(Exception):
    """Base class for all errors raised by zetalab."""


class DomainError(ZetaLabError, ValueError):
    """Argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Argument sits on a pole (s = 1 for zeta, nonpositive integers for gamma)."""


class CapabilityError(ZetaLabError):
    """Request exceeds a configured ceiling of the implementation."""


class ToleranceError(ZetaLabError):
    """An adaptive procedure failed to reach its requested tolerance."""


class TruncationError(ToleranceError):
    """A series tail bound is larger than allowed."""


class AccuracyError(ZetaLabError):
    """Two evaluation routes that must agree do not."""


class BoundaryError(DomainError):
    """A zero lies too close to a contour; the rectangle must be shifted."""
