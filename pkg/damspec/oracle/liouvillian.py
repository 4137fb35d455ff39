"""
Superoperator algebra in Liouville space.

Density matrices are vectorized row-major (``rho.reshape(-1)``), for which

    vec(A X B) = kron(A, B.T) vec(X)
"""
import logging
import typing

import numpy as np  # type: ignore
from scipy import linalg  # type: ignore

from damspec.config import NULL_SPACE_RTOL
from damspec.error import SolverError

_logger: logging.Logger = logging.getLogger(__name__)

# cond(Lb^H R) above this means the left and right null spaces do not pair up
MAX_PROJECTOR_CONDITION: float = 1e12


def vec(rho: np.ndarray) -> np.ndarray:
    return np.asarray(rho, dtype=complex).reshape(-1)


def unvec(vector: np.ndarray, dim: int) -> np.ndarray:
    return np.asarray(vector, dtype=complex).reshape(dim, dim)


def spre(a: np.ndarray) -> np.ndarray:
    """Superoperator of left multiplication, ``X -> A X``."""
    return np.kron(a, np.eye(a.shape[0]))


def spost(b: np.ndarray) -> np.ndarray:
    """Superoperator of right multiplication, ``X -> X B``."""
    return np.kron(np.eye(b.shape[0]), b.T)


def commutator(a: np.ndarray) -> np.ndarray:
    return spre(a) - spost(a)


def dissipator(jump: np.ndarray) -> np.ndarray:
    """
    Lindblad dissipator ``D[L] X = L X L^+ - {L^+ L, X} / 2``.
    """
    jump_sq: np.ndarray = jump.conj().T @ jump
    return np.kron(jump, jump.conj()) - 0.5 * spre(jump_sq) - 0.5 * spost(jump_sq)


def liouvillian(hamiltonian: np.ndarray, jump_operators: typing.Iterable[np.ndarray]) -> np.ndarray:
    superop: np.ndarray = -1j * commutator(hamiltonian)
    for jump in jump_operators:
        superop = superop + dissipator(jump)
    return superop


def apply(superop: np.ndarray, rho: np.ndarray) -> np.ndarray:
    dim: int = rho.shape[0]
    return unvec(superop @ vec(rho), dim)


def trace_row(dim: int) -> np.ndarray:
    """Row vector ``t`` with ``t @ vec(rho) == Tr(rho)``."""
    return np.eye(dim, dtype=complex).reshape(-1)


def ground_uniform_state(dim: int, n_ground: int) -> np.ndarray:
    """
    The unpolarized initial state, equal populations on the first
    ``n_ground`` basis states.
    """
    rho: np.ndarray = np.zeros((dim, dim), dtype=complex)
    rho[np.arange(n_ground), np.arange(n_ground)] = 1.0 / n_ground
    return rho


def null_spaces(superop: np.ndarray) -> typing.Tuple[np.ndarray, np.ndarray, float]:
    """
    Right and left null-space bases of ``superop`` from one dense SVD.
    Singular values below ``NULL_SPACE_RTOL`` times the largest one count as
    zero.

    Returns
    -------
    ``(right, left, s_max)`` with null vectors as columns: typing.Tuple[np.ndarray, np.ndarray, float]
    """
    u, s, vh = linalg.svd(superop)
    s_max: float = float(s[0]) if s.size else 0.0
    if s_max == 0.0:
        identity: np.ndarray = np.eye(superop.shape[0], dtype=complex)
        return identity, identity, 0.0
    mask: np.ndarray = s <= NULL_SPACE_RTOL * s_max
    right: np.ndarray = vh[mask].conj().T
    left: np.ndarray = u[:, mask]
    return right, left, s_max


def stationary_state(superop: np.ndarray, initial: np.ndarray) -> np.ndarray:
    """
    Long-time limit of ``exp(superop t) initial`` obtained without
    integrating: the spectral projector onto the null space,
    ``R (Lb^H R)^-1 Lb^H``, applied to ``initial``. A one-dimensional null
    space makes the result independent of ``initial`` up to its trace.

    Raises
    ------
    :class:`SolverError` when the null space is numerically empty or its
    left and right bases are degenerate.
    """
    dim: int = initial.shape[0]
    right, left, s_max = null_spaces(superop)
    if right.shape[1] == 0:
        raise SolverError("Liouvillian has no stationary state", condition_number=np.inf)

    overlap: np.ndarray = left.conj().T @ right
    condition: float = float(np.linalg.cond(overlap))
    if not np.isfinite(condition) or condition > MAX_PROJECTOR_CONDITION:
        raise SolverError("Null-space projector is singular", condition_number=condition)

    coefficients: np.ndarray = linalg.solve(overlap, left.conj().T @ vec(initial))
    rho: np.ndarray = unvec(right @ coefficients, dim)
    # symmetrize away round-off anti-Hermitian parts
    rho = 0.5 * (rho + rho.conj().T)
    _logger.debug(
        "Stationary state: null space dim={} s_max={:.3e} cond={:.3e}".format(right.shape[1], s_max, condition)
    )
    return rho


def evolve(superop: np.ndarray, rho: np.ndarray, duration: float) -> np.ndarray:
    """Exact propagation ``exp(superop * duration)`` of a density matrix."""
    return apply(linalg.expm(superop * duration), rho)


def spectral_gap(superop: np.ndarray) -> float:
    """
    Smallest nonzero decay rate ``-Re(lambda)`` of the generator; sets how
    long relaxation to the stationary state takes.
    """
    rates: np.ndarray = -np.real(linalg.eigvals(superop))
    scale: float = max(float(np.max(np.abs(rates))), 1.0)
    nonzero: np.ndarray = rates[rates > NULL_SPACE_RTOL * scale * 1e3]
    return float(np.min(nonzero)) if nonzero.size else 0.0
