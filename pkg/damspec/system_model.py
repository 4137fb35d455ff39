import logging
import math
import typing
from dataclasses import dataclass

import numpy as np  # type: ignore

from damspec.angular_momentum import (
    QuantumNumber,
    check_transition,
    decay_branching,
    dipole_matrix,
    magnetic_numbers,
)
from damspec.config import DEFAULT_GAMMA
from damspec.error import DomainError
from damspec.objects import Level, SublevelRef, format_quantum_number

_logger: logging.Logger = logging.getLogger(__name__)

SPHERICAL_COMPONENTS: typing.Tuple[int, int, int] = (-1, 0, 1)


def _frozen(matrix: np.ndarray) -> np.ndarray:
    matrix = np.array(matrix, dtype=complex)
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True)
class ProbeGeometry:
    """
    Spherical decomposition of a linear probe polarization lying at angle
    ``theta`` to the coupling (quantization) axis.
    """

    theta: float
    eps_minus: complex
    eps_0: complex
    eps_plus: complex

    def component(self: "ProbeGeometry", q: int) -> complex:
        if q == -1:
            return self.eps_minus
        if q == 0:
            return self.eps_0
        if q == 1:
            return self.eps_plus
        raise DomainError("spherical component q={} is not one of -1, 0, +1".format(q))

    @property
    def components(self: "ProbeGeometry") -> typing.Tuple[complex, complex, complex]:
        return self.eps_minus, self.eps_0, self.eps_plus


def polarization_components(theta: float) -> ProbeGeometry:
    """
    Decomposes the unit vector ``sin(theta) x + cos(theta) z`` on the spherical
    basis: ``eps_0 = cos(theta)``, ``eps_(+/-) = -/+ sin(theta) / sqrt(2)``.
    """
    sin_part: float = math.sin(theta) / math.sqrt(2.0)
    eps_0: float = math.cos(theta)
    # cos(pi/2) is ~6e-17; pure sigma probes must have an exactly vanishing pi part
    if abs(eps_0) < 1e-15:
        eps_0 = 0.0
    return ProbeGeometry(
        theta=float(theta), eps_minus=complex(sin_part), eps_0=complex(eps_0), eps_plus=complex(-sin_part)
    )


@dataclass(frozen=True, eq=False)
class TransitionSystem:
    """
    A degenerate two-level atom driven by a resonant pi-polarized coupling
    field, in the frame rotating at the coupling frequency.

    The sublevel basis is ordered ground ``m = -F_g .. F_g`` followed by
    excited ``m = -F_e .. F_e``. ``coupling_op`` and ``probe_op`` are raising
    operators (nonzero only on excited rows, ground columns); the Hamiltonian
    adds their Hermitian conjugates. Frequencies are in units of ``gamma``.
    """

    F_g: float
    F_e: float
    omega_c_rabi: float
    gamma: float
    coupling_phase: float
    probe_geometry: ProbeGeometry
    sublevels: typing.Tuple[SublevelRef, ...]
    coupling_op: np.ndarray
    probe_op: np.ndarray
    decay_channels: typing.Tuple[np.ndarray, ...]
    loss_rate: float = 0.0
    loss_channels: typing.Tuple[np.ndarray, ...] = ()

    @property
    def dim(self: "TransitionSystem") -> int:
        return len(self.sublevels)

    @property
    def n_ground(self: "TransitionSystem") -> int:
        return int(round(2 * self.F_g)) + 1

    @property
    def n_excited(self: "TransitionSystem") -> int:
        return int(round(2 * self.F_e)) + 1

    @property
    def ground_sublevels(self: "TransitionSystem") -> typing.Tuple[SublevelRef, ...]:
        return self.sublevels[: self.n_ground]

    @property
    def excited_sublevels(self: "TransitionSystem") -> typing.Tuple[SublevelRef, ...]:
        return self.sublevels[self.n_ground :]

    @property
    def system_id(self: "TransitionSystem") -> str:
        return "Fg={}->Fe={}".format(format_quantum_number(self.F_g), format_quantum_number(self.F_e))

    @property
    def theta(self: "TransitionSystem") -> float:
        return self.probe_geometry.theta

    @property
    def hamiltonian(self: "TransitionSystem") -> np.ndarray:
        """
        Coupling-only rotating-frame Hamiltonian (hbar = 1).
        """
        return self.coupling_op + self.coupling_op.conj().T

    @property
    def jump_operators(self: "TransitionSystem") -> typing.Tuple[np.ndarray, ...]:
        return tuple(self.decay_channels) + tuple(self.loss_channels)

    def index(self: "TransitionSystem", sublevel: SublevelRef) -> int:
        try:
            return self.sublevels.index(sublevel)
        except ValueError:
            raise DomainError("{} is not a sublevel of {}".format(sublevel, self.system_id))

    def partner(self: "TransitionSystem", sublevel: SublevelRef) -> typing.Optional[SublevelRef]:
        """
        The sublevel of the other level with the same m, if any.
        """
        other: Level = Level.Excited if sublevel.is_ground else Level.Ground
        candidate: SublevelRef = SublevelRef(other, sublevel.m)
        return candidate if candidate in self.sublevels else None

    def pi_coupling(self: "TransitionSystem", m: float) -> complex:
        """
        The coupling matrix element ``g_m = <m'| coupling_op |m>``; zero when
        either sublevel is missing.
        """
        ground: SublevelRef = SublevelRef(Level.Ground, m)
        excited: SublevelRef = SublevelRef(Level.Excited, m)
        if ground not in self.sublevels or excited not in self.sublevels:
            return 0j
        return complex(self.coupling_op[self.index(excited), self.index(ground)])


def _embed_raising(block: np.ndarray, n_ground: int, dim: int) -> np.ndarray:
    matrix: np.ndarray = np.zeros((dim, dim), dtype=complex)
    matrix[n_ground:, :n_ground] = block
    return matrix


def build_system(
    F_g: QuantumNumber,
    F_e: QuantumNumber,
    omega_c_rabi: float,
    gamma: float = DEFAULT_GAMMA,
    theta: float = math.pi / 2,
    coupling_phase: float = 0.0,
    loss_rate: float = 0.0,
) -> TransitionSystem:
    """
    Assembles the coupling, probe and decay operators of a degenerate
    two-level system.

    Parameters
    ----------
    F_g, F_e : half-integer
        Ground and excited angular momenta, ``|F_e - F_g| <= 1``.
    omega_c_rabi : float
        Reduced coupling Rabi frequency; the m-th doublet splits by ``omega_c_rabi * |c_m|``.
    gamma : float
        Total decay rate of every excited sublevel.
    theta : float
        Angle in radians between probe and coupling linear polarizations.
    coupling_phase : float
        Global phase of the coupling laser.
    loss_rate : float
        Optional isotropic repumping rate from each excited sublevel, in
        addition to ``gamma``. Zero keeps the two manifolds closed.

    Returns
    -------
    The assembled system: :class:`TransitionSystem`
    """
    check_transition(F_g, F_e)
    if omega_c_rabi < 0:
        raise DomainError("omega_c_rabi={} must be non-negative".format(omega_c_rabi))
    if not gamma > 0:
        raise DomainError("gamma={} must be positive".format(gamma))
    if loss_rate < 0:
        raise DomainError("loss_rate={} must be non-negative".format(loss_rate))

    ground: typing.List[SublevelRef] = [SublevelRef(Level.Ground, m) for m in magnetic_numbers(F_g)]
    excited: typing.List[SublevelRef] = [SublevelRef(Level.Excited, m) for m in magnetic_numbers(F_e)]
    n_ground: int = len(ground)
    dim: int = n_ground + len(excited)

    geometry: ProbeGeometry = polarization_components(theta)
    blocks: typing.Dict[int, np.ndarray] = {q: dipole_matrix(F_g, F_e, q) for q in SPHERICAL_COMPONENTS}

    coupling_scale: complex = omega_c_rabi * complex(math.cos(coupling_phase), math.sin(coupling_phase)) / 2
    coupling_op: np.ndarray = _embed_raising(coupling_scale * blocks[0], n_ground, dim)

    probe_block: np.ndarray = sum(geometry.component(q) * blocks[q] for q in SPHERICAL_COMPONENTS)
    probe_op: np.ndarray = _embed_raising(probe_block, n_ground, dim)

    decay_jumps: typing.Dict[int, np.ndarray] = {q: np.zeros((dim, dim), dtype=complex) for q in SPHERICAL_COMPONENTS}
    for row, state in enumerate(excited):
        for m_g, weight in decay_branching(F_e, state.m, F_g):
            q: int = int(round(state.m - m_g))
            col: int = magnetic_numbers(F_g).index(m_g)
            # |g m_g><e m_e| carries the sign of the dipole element
            signed: float = math.copysign(math.sqrt(gamma * weight), blocks[q][row, col])
            decay_jumps[q][col, n_ground + row] = signed
    decay_channels: typing.List[np.ndarray] = [_frozen(decay_jumps[q]) for q in SPHERICAL_COMPONENTS]

    loss_channels: typing.List[np.ndarray] = []
    if loss_rate > 0:
        amplitude: float = math.sqrt(loss_rate / n_ground)
        for e_index in range(n_ground, dim):
            for g_index in range(n_ground):
                jump = np.zeros((dim, dim), dtype=complex)
                jump[g_index, e_index] = amplitude
                loss_channels.append(_frozen(jump))

    system: TransitionSystem = TransitionSystem(
        F_g=float(F_g),
        F_e=float(F_e),
        omega_c_rabi=float(omega_c_rabi),
        gamma=float(gamma),
        coupling_phase=float(coupling_phase),
        probe_geometry=geometry,
        sublevels=tuple(ground + excited),
        coupling_op=_frozen(coupling_op),
        probe_op=_frozen(probe_op),
        decay_channels=tuple(decay_channels),
        loss_rate=float(loss_rate),
        loss_channels=tuple(loss_channels),
    )
    _logger.debug(
        "Built {} with omega_c={} gamma={} theta={} phase={} (dim={})".format(
            system.system_id, omega_c_rabi, gamma, theta, coupling_phase, dim
        )
    )
    return system
