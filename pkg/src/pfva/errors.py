"""Exception types shared across the package."""


class PfvaError(Exception):
    """Base class for all package-specific errors."""


class SingularParameterError(PfvaError, ValueError):
    """Raised when the relative scale factor hits the pole at rho = -1."""


class StrokeError(PfvaError, ValueError):
    """Raised when a slider position falls outside the mechanism stroke."""


class DeadCenterError(PfvaError, ValueError):
    """Raised when the slider-to-joint velocity map is singular (KIC ~ 0)."""


class AllocationError(PfvaError, ValueError):
    """Raised when an allocation policy needs a gear reduction that is zero."""


class ConfigError(PfvaError, ValueError):
    """Raised on malformed or inconsistent experiment configuration."""
