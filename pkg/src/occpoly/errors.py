"""Exception hierarchy shared across the package."""


class OccPolyError(Exception):
    """Base class for all package-specific errors."""


class ParityError(OccPolyError):
    """Spin and particle-number quantum numbers have incompatible parity."""


class RangeError(OccPolyError):
    """A quantum number or index is outside its admissible range."""


class LengthError(OccPolyError):
    """Vectors have incompatible lengths or totals for the requested comparison."""


class DepthError(OccPolyError):
    """The excitation closure was too shallow to certify a lineup decision."""


class StabilityError(OccPolyError):
    """The size-stability conditions fail for the requested weight rank."""


class ApplicabilityError(OccPolyError):
    """A closed-form constraint family does not apply to the given system."""


class NormalizationError(OccPolyError):
    """A spectrum or density does not carry the required total particle number."""


class NotHermitianError(OccPolyError):
    """A matrix expected to be symmetric/Hermitian is not, within tolerance."""


class TraceError(OccPolyError):
    """A matrix trace differs from the particle number beyond tolerance."""


class NoConvergenceError(OccPolyError):
    """An iterative routine exhausted its sweep budget."""


class NotPointedError(OccPolyError):
    """A cone retains lineality after quotienting and has no extreme rays."""


class DegenerateInputError(OccPolyError):
    """Input data coincide where distinct values are required."""


class TieError(OccPolyError):
    """Two distinct symbolic right-hand sides tie at the sampled weights."""
