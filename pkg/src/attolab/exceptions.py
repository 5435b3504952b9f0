"""Exception and warning types raised by attolab."""


class AttoError(ValueError):
    """Base class for all attolab errors."""


class ZeroOutsideCap(AttoError):
    pass


class EmptyZeroList(AttoError):
    pass


class NonUnimodularConstant(AttoError):
    pass


class PointOutsideClosedDisk(AttoError):
    pass


class PointOnBoundary(AttoError):
    pass


class GramTolExceeded(AttoError):
    """The quadrature grid is too coarse for the requested zeros."""


class GridMismatch(AttoError):
    pass


class ToleranceExceeded(AttoError):
    pass


class SpaceMismatch(AttoError):
    pass


class ShapeMismatch(AttoError):
    pass


class ZeroFrame(AttoError):
    pass


class NotAMember(AttoError):
    pass


class PsiNotNormalized(AttoError):
    pass


class DegenerateSubspaceWarning(UserWarning):
    """A shift-invariance test ran on a trivial constraint set."""


class ZeroCapWarning(UserWarning):
    pass
