"""Exception hierarchy.

Everything derives from QPBurstError so callers can catch the package's own
failures without swallowing genuine bugs.
"""


class QPBurstError(Exception):
    """Base class for all qpburst errors."""


class DomainError(QPBurstError, ValueError):
    """A physics parameter is outside its mathematical domain."""


class BaselineError(DomainError):
    """A baseline error probability is inconsistent with the readout fidelities."""


class ConfigError(QPBurstError, ValueError):
    """Invalid or inconsistent run configuration."""


class IntegrationError(QPBurstError):
    """ODE integration failed its step-halving consistency check."""


class AlignmentError(QPBurstError, ValueError):
    """Waveforms with incompatible binning were combined."""


class FeatureError(QPBurstError, ValueError):
    """Pulse features cannot be computed (e.g. no valid pre-trigger bins)."""


class FitError(QPBurstError):
    """A deterministic fit failed to converge."""


class NoInformationError(QPBurstError, ValueError):
    """A reconstruction was attempted with no usable inputs."""


class DependencyError(QPBurstError):
    """A pipeline stage is missing the output of an earlier stage."""
