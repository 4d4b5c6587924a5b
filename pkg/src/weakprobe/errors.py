"""Exception hierarchy shared across the package."""


class WeakProbeError(ValueError):
    """Base class for all domain errors raised by this package."""


class NotNormalized(WeakProbeError):
    """State amplitudes or coefficient matrix do not have unit norm."""


class DimensionMismatch(WeakProbeError):
    """Operands act on spaces of incompatible dimension."""


class InvariantViolation(WeakProbeError):
    """A constructed value violates one of its structural invariants."""


class PostSelectionOrthogonal(WeakProbeError):
    """Post-selection is orthogonal to the pre-selection; the weak value
    has a vanishing denominator and the formalism does not apply."""


class PostSelectionImpossible(WeakProbeError):
    """The conditioning measurement never succeeds (zero total weight)."""


class ObservableNotSchmidtDiagonal(WeakProbeError):
    """A probe observable does not commute with the Schmidt projectors."""


class DegenerateProbe(WeakProbeError):
    """The probe is separable (zero entanglement entropy); entropy ratios
    and the omega state are undefined."""


class ConfigError(WeakProbeError):
    """A configuration file is malformed; the message names the field."""
