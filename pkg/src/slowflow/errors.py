"""Exception hierarchy for the slowflow package."""


class SlowflowError(Exception):
    """Base class for all domain errors raised by this package."""


class DegenerateAngleError(SlowflowError):
    """Polar angle is undefined (state at the exact origin, rho = 0)."""


class SingularRadiusError(SlowflowError):
    """An angular rate or phase quadrature was requested at rho ~ 0."""


class DegenerateParametersError(SlowflowError):
    """The equilibrium elimination breaks down (J - B sin(gamma) ~ 0)."""


class ContinuumEquilibriaError(SlowflowError):
    """Zero drive: fixed points form a circle plus the origin, not isolated points."""


class DegenerateClassificationError(SlowflowError):
    """Jacobian determinant too close to zero to classify saddle vs center."""


class ArccosDomainError(SlowflowError):
    """Trigonometric root formula invoked where its arccos argument leaves [-1, 0]."""


class NoSaddleError(SlowflowError):
    """No saddle equilibrium exists for the given parameters."""


class NonexistenceError(SlowflowError):
    """A requested homoclinic structure (hyperbolic rate or lobe) does not exist."""


class UnsupportedSaddleError(SlowflowError):
    """The saddle realizes the +sqrt(D) drive sign; construction covers -sqrt(D) only."""


class SolverError(SlowflowError):
    """A root polish or linear solve failed to converge."""


class StepLimitError(SlowflowError):
    """Adaptive integrator exceeded its step budget."""


class StepSizeError(SlowflowError):
    """Adaptive integrator step size underflowed."""


class ConfigError(SlowflowError):
    """Invalid command-line / config-file input."""
