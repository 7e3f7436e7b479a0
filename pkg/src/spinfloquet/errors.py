"""Exception types shared across the library."""


class DomainError(ValueError):
    """A physical argument is outside its admissible domain (negative field,
    non-finite frequency, odd spin count, and so on)."""


class UnitError(ValueError):
    """An unsupported or missing unit label was supplied."""


class ConfigError(ValueError):
    """A sweep configuration file is malformed.

    Carries the offending field path in ``field`` when known.
    """

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class GridResolutionError(ValueError):
    """A time grid is too coarse for the requested integration."""


class IntegrationError(RuntimeError):
    """The adaptive integrator failed to meet its tolerances.

    ``last_good_time`` holds the time up to which the solution was accepted.
    """

    def __init__(self, message: str, last_good_time: float | None = None):
        self.last_good_time = last_good_time
        super().__init__(message)
