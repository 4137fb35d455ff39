import typing


class Error(Exception):
    """Generic exception that is the base exception of all other error
    exceptions raised by damspec.
    """

    pass


class DomainError(Error, ValueError):
    """Raised when quantum numbers, polarization settings or dressed-state
    labels fall outside the physically allowed domain. For example a
    transition with ``|F_e - F_g| > 1`` or a Wigner 3-j symbol with
    non-half-integral arguments.
    """

    pass


class ConfigError(Error):
    """Raised when a run configuration is malformed, contains unknown keys or
    carries out-of-range values. The dotted path of the offending key is
    available as :attr:`key_path`.
    """

    def __init__(self: "ConfigError", message: str, key_path: typing.Optional[str] = None) -> None:
        self.key_path: typing.Optional[str] = key_path
        if key_path is not None:
            message = "{key_path}: {message}".format(key_path=key_path, message=message)
        super().__init__(message)


class SolverError(Error):
    """Generic exception raised when a numerical solve fails, e.g. a singular
    harmonic-balance system. Diagnostics gathered at the failure point are
    kept on the exception.
    """

    def __init__(
        self: "SolverError",
        message: str,
        delta: typing.Optional[float] = None,
        condition_number: typing.Optional[float] = None,
    ) -> None:
        self.reason: str = message
        self.delta: typing.Optional[float] = delta
        self.condition_number: typing.Optional[float] = condition_number
        details: typing.List[str] = []
        if delta is not None:
            details.append("delta={:.6g}".format(delta))
        if condition_number is not None:
            details.append("cond={:.3e}".format(condition_number))
        if details:
            message = "{} ({})".format(message, ", ".join(details))
        super().__init__(message)


class ConvergenceError(SolverError):
    """
    Raised when the harmonic truncation order could not be raised far enough
    for the probe absorption to settle within tolerance.
    """

    pass


class IntegrationError(SolverError):
    """
    Raised when the adaptive time-domain integrator stops before reaching the
    requested end time (step-size underflow or a failed step).
    """

    pass


class DiscrepancyError(Error):
    """
    Raised by the command line interface when a compare run finds a predicted
    two-photon resonance with no counterpart in the oracle spectrum.
    """

    pass

