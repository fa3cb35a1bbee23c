"""Exception types shared across the package.

Invalidity of a well-posed candidate polytope is reported as a value
(see ClassificationReport); these exceptions mark ill-posed inputs.
"""


class GeometryError(ValueError):
    """Base class for ill-posed geometric input."""


class ChamberError(GeometryError):
    """The polygon is not contained in the dominant chamber x >= y."""


class InvalidPolytopeError(GeometryError):
    """An operation that requires a valid momentum polytope got an invalid one."""


class UnsupportedPolytopeError(GeometryError):
    """The polytope is valid but outside the operation's stated scope
    (e.g. x-ray construction with wall-vertex count != 1)."""
