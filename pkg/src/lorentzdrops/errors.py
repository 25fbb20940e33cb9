"""Exception hierarchy for the lorentzdrops package."""


class CapillaryError(Exception):
    """Base class for all lorentzdrops errors."""


class InvalidConfig(CapillaryError):
    """Tolerances, step sizes or other configuration values are unusable."""


class NonFiniteState(CapillaryError):
    """The integrator produced a non-finite state before reaching r_max."""


class NoConvergence(CapillaryError):
    """A fixed-point iteration failed to contract."""


class OutOfDomain(CapillaryError):
    """A radius outside the computed profile range was requested."""


class OrderingViolated(CapillaryError):
    """A comparison-surface sandwich that must hold failed numerically."""


class VolumeMismatch(CapillaryError):
    """Closed-form and quadrature volumes disagree beyond tolerance."""


class BeyondMaxDrop(CapillaryError):
    """A pendent volume was requested past the first profile maximum."""


class BracketFailure(CapillaryError):
    """A shooting bracket could not be made to straddle its target."""


class NotPendent(CapillaryError):
    """Pendent-drop analysis was requested on a non-pendent profile."""


class FeatureTooClose(CapillaryError):
    """Two profile features fell within root-finding resolution."""
