import logging
import typing
from concurrent.futures import ThreadPoolExecutor

import numpy as np  # type: ignore
from scipy import signal  # type: ignore

from damspec.config import (
    DEFAULT_CONVERGENCE_TOL,
    DEFAULT_HARMONICS,
    DEFAULT_MAX_HARMONICS,
    DEFAULT_STATIC_WINDOW,
    MIN_TRANSIENT,
    Normalization,
    SolverMethod,
)
from damspec.error import DomainError, SolverError
from damspec.objects import DetectedPeak, SpectrumTrace
from damspec.oracle.floquet import ZERO_DETUNING, phase_average, solve_converged
from damspec.oracle.time_domain import averaging_window, time_domain_solve
from damspec.system_model import TransitionSystem

_logger: logging.Logger = logging.getLogger(__name__)


def spectrum(
    system: TransitionSystem,
    probe_rabi: float,
    grid: typing.Sequence[float],
    method: SolverMethod = SolverMethod.Floquet,
    harmonics: int = DEFAULT_HARMONICS,
    max_harmonics: int = DEFAULT_MAX_HARMONICS,
    convergence_tol: float = DEFAULT_CONVERGENCE_TOL,
    normalization: Normalization = Normalization.PerIntensity,
    max_workers: int = 1,
    t_transient: typing.Optional[float] = None,
) -> SpectrumTrace:
    """
    Probe absorption at every detuning of ``grid``.

    Grid points are independent and may be solved on ``max_workers``
    threads; results are collected in grid order. Solver errors are re-raised
    carrying the failing detuning.
    A grid point at zero detuning is averaged over the relative phase of
    probe and coupling.

    Parameters
    ----------
    system : TransitionSystem
    probe_rabi : float
    grid : sequence of float
        Strictly increasing probe detunings.
    method : SolverMethod
        Floquet harmonic balance or direct time integration.
    t_transient : float, optional
        Time-domain transient; ``50 / gamma`` when omitted.

    Returns
    -------
    The absorption trace with its solver metadata: :class:`SpectrumTrace`
    """
    deltas: np.ndarray = np.asarray(grid, dtype=float)
    if deltas.size == 0:
        raise DomainError("detuning grid is empty")
    if max_workers < 1:
        raise DomainError("max_workers={} must be at least 1".format(max_workers))
    transient: float = t_transient if t_transient is not None else MIN_TRANSIENT / system.gamma

    def solve_point(delta: float) -> typing.Tuple[float, int]:
        try:
            if method is SolverMethod.TimeDomain:
                window: float = averaging_window(delta, DEFAULT_STATIC_WINDOW / system.gamma)

                def rate(phase: float) -> float:
                    return time_domain_solve(system, probe_rabi, delta, transient, window, normalization, phase)

                if abs(delta) < ZERO_DETUNING:
                    return phase_average(rate), 0
                return rate(0.0), 0
            solution, absorption = solve_converged(
                system, probe_rabi, delta, harmonics, max_harmonics, convergence_tol, normalization
            )
            return absorption, solution.K
        except SolverError as e:
            if e.delta is not None:
                raise
            raise type(e)(e.reason, delta=delta, condition_number=e.condition_number) from e

    _logger.info(
        "Solving {} spectrum of {} on {} points (omega_c={}, probe_rabi={}, workers={})".format(
            method.value, system.system_id, deltas.size, system.omega_c_rabi, probe_rabi, max_workers
        )
    )
    results: typing.List[typing.Tuple[float, int]]
    if max_workers == 1:
        results = [solve_point(float(d)) for d in deltas]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            results = list(executor.map(solve_point, [float(d) for d in deltas]))

    meta: typing.Dict[str, typing.Any] = {
        "system": system.system_id,
        "F_g": system.F_g,
        "F_e": system.F_e,
        "omega_c_rabi": system.omega_c_rabi,
        "gamma": system.gamma,
        "theta": system.theta,
        "coupling_phase": system.coupling_phase,
        "loss_rate": system.loss_rate,
        "probe_rabi": probe_rabi,
        "method": method.value,
        "normalization": normalization.value,
    }
    if method is SolverMethod.Floquet:
        meta["harmonics"] = harmonics
        meta["max_harmonics_used"] = max(k for _, k in results)
        meta["convergence_tol"] = convergence_tol
    else:
        meta["t_transient"] = transient
    return SpectrumTrace(deltas=deltas, absorption=np.array([a for a, _ in results]), meta=meta)


def _refine(deltas: np.ndarray, values: np.ndarray, index: int) -> typing.Tuple[float, float]:
    """
    Vertex of the parabola through the three samples around ``index``.
    """
    if index == 0 or index == values.size - 1:
        return float(deltas[index]), float(values[index])
    left, center, right = values[index - 1], values[index], values[index + 1]
    curvature: float = float(left - 2 * center + right)
    if curvature >= 0:
        return float(deltas[index]), float(center)
    offset: float = 0.5 * float(left - right) / curvature
    step: float = 0.5 * float(deltas[index + 1] - deltas[index - 1])
    return float(deltas[index] + offset * step), float(center - 0.25 * (left - right) * offset)


def find_peaks(trace: SpectrumTrace, min_prominence: float) -> typing.List[DetectedPeak]:
    """
    Local maxima of ``trace`` with at least ``min_prominence`` (absolute, in
    absorption units), refined to sub-grid position by quadratic
    interpolation.
    """
    if len(trace) < 3:
        return []
    indices, properties = signal.find_peaks(trace.absorption, prominence=min_prominence)
    peaks: typing.List[DetectedPeak] = []
    for index, prominence in zip(indices, properties["prominences"]):
        delta, height = _refine(trace.deltas, trace.absorption, int(index))
        peaks.append(DetectedPeak(delta=delta, height=height, prominence=float(prominence)))
    _logger.debug("Found {} peaks: {}".format(len(peaks), [round(p.delta, 6) for p in peaks]))
    return peaks
