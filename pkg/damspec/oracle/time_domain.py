import cmath
import logging
import math

import numpy as np  # type: ignore
from scipy.integrate import solve_ivp  # type: ignore

from damspec.config import (
    DEFAULT_STATIC_WINDOW,
    MIN_TRANSIENT,
    TIME_DOMAIN_ATOL,
    TIME_DOMAIN_RTOL,
    Normalization,
)
from damspec.error import DomainError, IntegrationError
from damspec.oracle.floquet import ZERO_DETUNING, normalize
from damspec.oracle.liouvillian import commutator, ground_uniform_state, liouvillian, stationary_state, vec
from damspec.system_model import TransitionSystem

_logger: logging.Logger = logging.getLogger(__name__)

# allowed mismatch between t_average and a whole number of beat periods
PERIOD_TOL: float = 1e-9


def averaging_window(delta: float, minimum: float = DEFAULT_STATIC_WINDOW) -> float:
    """
    Shortest whole number of beat periods ``2 pi / |delta|`` lasting at least
    ``minimum``; ``minimum`` itself when ``delta`` is zero.
    """
    if abs(delta) < ZERO_DETUNING:
        return float(minimum)
    period: float = 2 * math.pi / abs(delta)
    return period * max(1, math.ceil(minimum / period))


def _check_window(delta: float, t_average: float) -> None:
    if not t_average > 0:
        raise DomainError("t_average={} must be positive".format(t_average))
    if abs(delta) < ZERO_DETUNING:
        return
    periods: float = t_average * abs(delta) / (2 * math.pi)
    if round(periods) < 1 or abs(periods - round(periods)) > PERIOD_TOL * max(1.0, periods):
        raise DomainError(
            "t_average={} is not a whole number of beat periods 2pi/|delta| for delta={}".format(t_average, delta)
        )


def time_domain_solve(
    system: TransitionSystem,
    probe_rabi: float,
    delta: float,
    t_transient: float,
    t_average: float,
    normalization: Normalization = Normalization.PerIntensity,
    relative_phase: float = 0.0,
) -> float:
    """
    Integrates the time-dependent master equation from the pumped steady
    state, drops ``t_transient`` and averages the instantaneous probe
    absorption rate over ``t_average``.

    Parameters
    ----------
    t_transient : float
        At least ``50 / gamma``.
    t_average : float
        A whole number of beat periods ``2 pi / |delta|``; any window when
        ``delta`` is zero.
    relative_phase : float
        Probe phase relative to the coupling field at ``t = 0``.

    Returns
    -------
    Averaged absorption, normalized as by :func:`absorption_at`: float
    """
    if probe_rabi < 0:
        raise DomainError("probe_rabi={} must be non-negative".format(probe_rabi))
    if t_transient < MIN_TRANSIENT / system.gamma:
        raise DomainError("t_transient={} is shorter than {}/gamma".format(t_transient, MIN_TRANSIENT))
    _check_window(delta, t_average)
    if probe_rabi == 0:
        return 0.0

    dim: int = system.dim
    l0: np.ndarray = liouvillian(system.hamiltonian, system.jump_operators)
    probe: np.ndarray = system.probe_op
    raising: np.ndarray = -0.5j * probe_rabi * commutator(probe)
    lowering: np.ndarray = -0.5j * probe_rabi * commutator(probe.conj().T)
    # Tr(P^+ rho) as a row acting on vec(rho)
    overlap_row: np.ndarray = vec(probe).conj()

    def drift(t: float, y: np.ndarray) -> np.ndarray:
        phase: complex = cmath.exp(-1j * (delta * t + relative_phase))
        return l0 @ y + phase * (raising @ y) + phase.conjugate() * (lowering @ y)

    def drift_with_rate(t: float, y: np.ndarray) -> np.ndarray:
        rho: np.ndarray = y[:-1]
        phase: complex = cmath.exp(1j * (delta * t + relative_phase))
        rate: float = -probe_rabi * (phase * (overlap_row @ rho)).imag
        return np.concatenate([drift(t, rho), [rate]])

    start: np.ndarray = vec(stationary_state(l0, ground_uniform_state(dim, system.n_ground)))
    settle = solve_ivp(
        drift,
        (0.0, t_transient),
        start,
        method="DOP853",
        t_eval=[t_transient],
        rtol=TIME_DOMAIN_RTOL,
        atol=TIME_DOMAIN_ATOL,
    )
    if not settle.success:
        raise IntegrationError("Transient integration failed: {}".format(settle.message), delta=delta)

    augmented: np.ndarray = np.concatenate([settle.y[:, -1], [0.0]]).astype(complex)
    average = solve_ivp(
        drift_with_rate,
        (t_transient, t_transient + t_average),
        augmented,
        method="DOP853",
        t_eval=[t_transient + t_average],
        rtol=TIME_DOMAIN_RTOL,
        atol=TIME_DOMAIN_ATOL,
    )
    if not average.success:
        raise IntegrationError("Averaging integration failed: {}".format(average.message), delta=delta)

    rate: float = float(average.y[-1, -1].real) / t_average
    _logger.debug(
        "Time-domain solve delta={:.6g}: {} + {} evaluations, rate={:.6e}".format(
            delta, settle.nfev, average.nfev, rate
        )
    )
    return normalize(rate, probe_rabi, normalization)
