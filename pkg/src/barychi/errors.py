"""Exception types shared across the package."""


class BarychiError(Exception):
    """Base class for all input and domain errors raised by this package."""


class InputFormatError(BarychiError):
    """A fraction string, weight list, or instance document could not be parsed."""


class NonPositiveWeight(BarychiError):
    """Every singular-point weight must be strictly positive."""


class NonPositiveRho(BarychiError):
    """The total-mass bound rho must be strictly positive."""


class InconsistentComponents(BarychiError):
    """Component data does not reconcile with the instance totals."""


class TooManySingularPoints(BarychiError):
    """Singular-point count exceeds the subset-enumeration cap."""


class TooManyVertices(BarychiError):
    """Finite-space vertex count exceeds the face-enumeration cap."""


class WeightOutOfRange(BarychiError):
    """A weight lies outside the range an operation is defined for."""


class OutOfScope(BarychiError):
    """The requested homotopy classification is outside the proved case tables."""
