"""
Harmonic balance for the pump-probe master equation.

In the frame rotating with the coupling field the probe enters as
``(probe_rabi / 2) (P exp(-i delta t) + P^+ exp(i delta t))``. Expanding
``rho(t) = sum_k rho_k exp(-i k delta t)`` turns the master equation into

    (L0 + i k delta) rho_k + A+ rho_(k-1) + A- rho_(k+1) = 0

with ``A+ = -i (probe_rabi / 2) [P, .]`` and ``A- = -i (probe_rabi / 2) [P^+, .]``.
Truncating at ``|k| = K`` leaves a block-tridiagonal system that is folded
onto ``rho_0`` with matrix continued fractions from both ends.
"""
import cmath
import logging
import math
import typing
from dataclasses import dataclass

import numpy as np  # type: ignore
from scipy import linalg  # type: ignore

from damspec.config import (
    DEFAULT_CONVERGENCE_TOL,
    DEFAULT_HARMONICS,
    DEFAULT_MAX_HARMONICS,
    DEFAULT_PHASE_SAMPLES,
    Normalization,
)
from damspec.error import ConvergenceError, DomainError, SolverError
from damspec.oracle.liouvillian import commutator, ground_uniform_state, liouvillian, stationary_state, unvec, vec
from damspec.system_model import TransitionSystem

_logger: logging.Logger = logging.getLogger(__name__)

# detunings closer to zero than this are solved as the time-independent problem
ZERO_DETUNING: float = 1e-12


@dataclass(frozen=True, eq=False)
class FloquetSolution:
    """
    Harmonic components ``rho_k`` for ``|k| <= K``. A static solution, for
    probe and coupling at the same frequency, holds only ``rho_0`` and
    ``K = 0``.
    """

    harmonics: typing.Dict[int, np.ndarray]
    K: int
    delta: float
    residual: float
    probe_rabi: float = 0.0
    static: bool = False
    # probe phase relative to the coupling field, static solutions only
    relative_phase: float = 0.0

    def component(self: "FloquetSolution", k: int) -> np.ndarray:
        if k in self.harmonics:
            return self.harmonics[k]
        return np.zeros_like(self.harmonics[0])

    @property
    def density_matrix(self: "FloquetSolution") -> np.ndarray:
        return self.harmonics[0]


def _probe_drives(system: TransitionSystem, probe_rabi: float) -> typing.Tuple[np.ndarray, np.ndarray]:
    scale: complex = -0.5j * probe_rabi
    probe: np.ndarray = system.probe_op
    return scale * commutator(probe), scale * commutator(probe.conj().T)


def _solve_block(matrix: np.ndarray, rhs: np.ndarray, delta: float) -> np.ndarray:
    try:
        return linalg.solve(matrix, rhs)
    except (linalg.LinAlgError, ValueError) as e:
        raise SolverError(
            "Singular harmonic-balance block: {}".format(e), delta=delta, condition_number=float(np.linalg.cond(matrix))
        ) from e


def floquet_solve(
    system: TransitionSystem, probe_rabi: float, delta: float, K: int = DEFAULT_HARMONICS
) -> FloquetSolution:
    """
    Solves the truncated harmonic-balance equations at one probe detuning.

    Parameters
    ----------
    system : TransitionSystem
    probe_rabi : float
        Probe Rabi frequency for a unit dipole element, non-negative.
    delta : float
        Probe detuning; must be nonzero, see :func:`static_solve`.
    K : int
        Truncation order, ``rho_k = 0`` for ``|k| > K``.

    Returns
    -------
    The harmonic components: :class:`FloquetSolution`
    """
    if probe_rabi < 0:
        raise DomainError("probe_rabi={} must be non-negative".format(probe_rabi))
    if K < 1:
        raise DomainError("harmonic truncation K={} must be at least 1".format(K))
    if abs(delta) < ZERO_DETUNING:
        raise DomainError("delta=0 is degenerate with the coupling frequency; use static_solve")

    dim: int = system.dim
    size: int = dim * dim
    l0: np.ndarray = liouvillian(system.hamiltonian, system.jump_operators)
    initial: np.ndarray = ground_uniform_state(dim, system.n_ground)
    identity: np.ndarray = np.eye(size, dtype=complex)

    if probe_rabi == 0:
        rho_0: np.ndarray = _stationary(l0, initial, delta)
        harmonics: typing.Dict[int, np.ndarray] = {k: np.zeros((dim, dim), dtype=complex) for k in range(-K, K + 1)}
        harmonics[0] = rho_0
        residual: float = float(np.linalg.norm(l0 @ vec(rho_0)))
        return FloquetSolution(harmonics=harmonics, K=K, delta=delta, residual=residual, probe_rabi=0.0)

    raising, lowering = _probe_drives(system, probe_rabi)

    def diagonal(k: int) -> np.ndarray:
        return l0 + 1j * k * delta * identity

    # rho_k = X[k] rho_(k+1) for k < 0
    below: typing.Dict[int, np.ndarray] = {-K: -_solve_block(diagonal(-K), lowering, delta)}
    for k in range(-K + 1, 0):
        below[k] = -_solve_block(diagonal(k) + raising @ below[k - 1], lowering, delta)

    # rho_k = Y[k] rho_(k-1) for k > 0
    above: typing.Dict[int, np.ndarray] = {K: -_solve_block(diagonal(K), raising, delta)}
    for k in range(K - 1, 0, -1):
        above[k] = -_solve_block(diagonal(k) + lowering @ above[k + 1], raising, delta)

    folded: np.ndarray = l0 + raising @ below[-1] + lowering @ above[1]
    rho_0 = _stationary(folded, initial, delta)

    vectors: typing.Dict[int, np.ndarray] = {0: vec(rho_0)}
    for k in range(-1, -K - 1, -1):
        vectors[k] = below[k] @ vectors[k + 1]
    for k in range(1, K + 1):
        vectors[k] = above[k] @ vectors[k - 1]

    zero: np.ndarray = np.zeros(size, dtype=complex)
    residual = 0.0
    for k in range(-K, K + 1):
        equation: np.ndarray = (
            diagonal(k) @ vectors[k] + raising @ vectors.get(k - 1, zero) + lowering @ vectors.get(k + 1, zero)
        )
        residual = max(residual, float(np.linalg.norm(equation)))

    harmonics = {k: unvec(v, dim) for k, v in vectors.items()}
    _logger.debug("Floquet solve delta={:.6g} K={} residual={:.3e}".format(delta, K, residual))
    return FloquetSolution(harmonics=harmonics, K=K, delta=delta, residual=residual, probe_rabi=probe_rabi)


def _stationary(superop: np.ndarray, initial: np.ndarray, delta: float) -> np.ndarray:
    try:
        return stationary_state(superop, initial)
    except SolverError as e:
        raise SolverError(e.reason, delta=delta, condition_number=e.condition_number) from e


def static_solve(system: TransitionSystem, probe_rabi: float, relative_phase: float = 0.0) -> FloquetSolution:
    """
    Probe and coupling at the same frequency: the total field is time
    independent in the rotating frame and the steady state is solved
    directly. ``relative_phase`` is the probe phase relative to the coupling
    field, which the steady state depends on at this one detuning.
    """
    if probe_rabi < 0:
        raise DomainError("probe_rabi={} must be non-negative".format(probe_rabi))
    probe: np.ndarray = system.probe_op * cmath.exp(-1j * relative_phase)
    hamiltonian: np.ndarray = system.hamiltonian + 0.5 * probe_rabi * (probe + probe.conj().T)
    superop: np.ndarray = liouvillian(hamiltonian, system.jump_operators)
    rho: np.ndarray = _stationary(superop, ground_uniform_state(system.dim, system.n_ground), 0.0)
    residual: float = float(np.linalg.norm(superop @ vec(rho)))
    _logger.debug(
        "Static solve probe_rabi={:.6g} phase={:.6g} residual={:.3e}".format(probe_rabi, relative_phase, residual)
    )
    return FloquetSolution(
        harmonics={0: rho},
        K=0,
        delta=0.0,
        residual=residual,
        probe_rabi=probe_rabi,
        static=True,
        relative_phase=relative_phase,
    )


def phase_average(rate: typing.Callable[[float], float], samples: int = DEFAULT_PHASE_SAMPLES) -> float:
    """
    Mean of ``rate(phase)`` over ``samples`` equally spaced relative phases
    in ``[0, 2 pi)``.
    """
    if samples < 1:
        raise DomainError("phase samples={} must be at least 1".format(samples))
    return float(np.mean([rate(2 * math.pi * j / samples) for j in range(samples)]))


def degenerate_absorption(
    system: TransitionSystem,
    probe_rabi: float,
    normalization: Normalization = Normalization.PerIntensity,
    samples: int = DEFAULT_PHASE_SAMPLES,
) -> float:
    """
    Absorption at zero probe detuning, averaged over the relative phase of
    probe and coupling.

    At any small nonzero detuning that phase drifts slowly through every
    value, so the averaged rate is the limit of the spectrum at zero and the
    trace stays continuous there. A single fixed phase is available from
    :func:`static_solve`.
    """

    def rate(phase: float) -> float:
        return absorption_at(static_solve(system, probe_rabi, phase), system, probe_rabi, normalization)

    return phase_average(rate, samples)


def normalize(rate: float, probe_rabi: float, normalization: Normalization) -> float:
    if normalization is Normalization.Raw:
        return rate
    if probe_rabi == 0:
        return 0.0
    return rate / probe_rabi ** 2


def absorption_at(
    solution: FloquetSolution,
    system: TransitionSystem,
    probe_rabi: float,
    normalization: Normalization = Normalization.PerIntensity,
) -> float:
    """
    Time-averaged probe photon absorption rate,
    ``-probe_rabi * Im Tr(P^+ rho_1)``, positive for absorption. With the
    default normalization the rate is divided by ``probe_rabi ** 2``, which
    makes one-photon features independent of probe intensity; the
    per-intensity value is reported as 0 for a switched-off probe.
    """
    coherence: np.ndarray = solution.harmonics[0] if solution.static else solution.component(1)
    overlap: complex = complex(np.trace(system.probe_op.conj().T @ coherence))
    if solution.static:
        overlap *= cmath.exp(1j * solution.relative_phase)
    rate: float = -probe_rabi * overlap.imag
    return normalize(rate, probe_rabi, normalization)


def solve_converged(
    system: TransitionSystem,
    probe_rabi: float,
    delta: float,
    harmonics: int = DEFAULT_HARMONICS,
    max_harmonics: int = DEFAULT_MAX_HARMONICS,
    tolerance: float = DEFAULT_CONVERGENCE_TOL,
    normalization: Normalization = Normalization.PerIntensity,
) -> typing.Tuple[FloquetSolution, float]:
    """
    Doubles the truncation order from ``harmonics`` until the absorption
    changes by less than ``tolerance``.

    Raises
    ------
    :class:`ConvergenceError` when ``max_harmonics`` is reached first.

    At zero detuning the zero-phase static solution is returned together
    with the phase-averaged absorption of :func:`degenerate_absorption`.
    """
    if abs(delta) < ZERO_DETUNING:
        solution: FloquetSolution = static_solve(system, probe_rabi)
        return solution, degenerate_absorption(system, probe_rabi, normalization)

    K: int = harmonics
    solution = floquet_solve(system, probe_rabi, delta, K)
    absorption: float = absorption_at(solution, system, probe_rabi, normalization)
    while True:
        if 2 * K > max_harmonics:
            raise ConvergenceError(
                "Absorption not converged with {} harmonics".format(K), delta=delta
            )
        refined: FloquetSolution = floquet_solve(system, probe_rabi, delta, 2 * K)
        refined_absorption: float = absorption_at(refined, system, probe_rabi, normalization)
        change: float = abs(refined_absorption - absorption)
        if change < tolerance:
            return refined, refined_absorption
        _logger.warning(
            "delta={:.6g}: absorption changed by {:.3e} from K={} to K={}, doubling again".format(
                delta, change, K, 2 * K
            )
        )
        K, solution, absorption = 2 * K, refined, refined_absorption
