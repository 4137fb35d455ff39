import logging
import typing
from dataclasses import dataclass

import numpy as np  # type: ignore

from damspec.config import COUPLING_ZERO_TOL, DEFAULT_TRAPPED_THRESHOLD, POPULATION_FLOOR
from damspec.error import SolverError
from damspec.objects import SublevelRef
from damspec.oracle.liouvillian import evolve, ground_uniform_state, liouvillian, stationary_state
from damspec.system_model import TransitionSystem

_logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PopulationDistribution:
    """
    Sublevel populations of the coupling-only steady state. ``trapped`` lists
    the ground sublevels left uncoupled by the coupling field that hold more
    than ``threshold`` of the population.
    """

    populations: typing.Dict[SublevelRef, float]
    trapped: typing.Tuple[SublevelRef, ...]
    threshold: float
    density_matrix: np.ndarray

    @property
    def total(self: "PopulationDistribution") -> float:
        return float(sum(self.populations.values()))

    def population(self: "PopulationDistribution", sublevel: SublevelRef) -> float:
        return self.populations.get(sublevel, 0.0)

    def as_report(self: "PopulationDistribution") -> typing.Dict[str, typing.Any]:
        ordered: typing.List[SublevelRef] = sorted(self.populations, key=lambda s: s.sort_key)
        return {
            "populations": [{"state": str(s), "population": self.populations[s]} for s in ordered],
            "trapped": [str(s) for s in self.trapped],
            "threshold": self.threshold,
        }


def _uncoupled_ground(system: TransitionSystem) -> typing.List[SublevelRef]:
    return [g for g in system.ground_sublevels if abs(system.pi_coupling(g.m)) <= COUPLING_ZERO_TOL]


def _distribution(
    system: TransitionSystem, rho: np.ndarray, threshold: float
) -> PopulationDistribution:
    diagonal: np.ndarray = np.real(np.diag(rho))
    if diagonal.min() < POPULATION_FLOOR:
        raise SolverError(
            "{} steady state has negative population {:.3e}".format(system.system_id, float(diagonal.min()))
        )
    populations: typing.Dict[SublevelRef, float] = {
        sublevel: float(diagonal[i]) for i, sublevel in enumerate(system.sublevels)
    }
    trapped: typing.Tuple[SublevelRef, ...] = tuple(
        g for g in _uncoupled_ground(system) if populations[g] > threshold
    )
    rho = np.array(rho)
    rho.setflags(write=False)
    return PopulationDistribution(populations=populations, trapped=trapped, threshold=threshold, density_matrix=rho)


def pump_steady_state(
    system: TransitionSystem, threshold: float = DEFAULT_TRAPPED_THRESHOLD
) -> PopulationDistribution:
    """
    Coupling-only stationary state of the master equation.

    Several disconnected dark sectors make the stationary state non-unique;
    the returned one is reached from the unpolarized ground state, equal
    populations on every ground sublevel.
    """
    superop: np.ndarray = liouvillian(system.hamiltonian, system.jump_operators)
    initial: np.ndarray = ground_uniform_state(system.dim, system.n_ground)
    rho: np.ndarray = stationary_state(superop, initial)
    distribution: PopulationDistribution = _distribution(system, rho, threshold)
    _logger.debug(
        "Pumped {}: trapped={} total={:.12f}".format(
            system.system_id, [str(s) for s in distribution.trapped], distribution.total
        )
    )
    return distribution


def relax(
    system: TransitionSystem, duration: float, threshold: float = DEFAULT_TRAPPED_THRESHOLD
) -> PopulationDistribution:
    """
    Propagates the unpolarized ground state for ``duration`` under the
    coupling-only master equation.
    """
    superop: np.ndarray = liouvillian(system.hamiltonian, system.jump_operators)
    rho: np.ndarray = evolve(superop, ground_uniform_state(system.dim, system.n_ground), duration)
    return _distribution(system, 0.5 * (rho + rho.conj().T), threshold)


def dark_states(system: TransitionSystem) -> typing.List[SublevelRef]:
    """
    Ground sublevels the coupling field cannot excite. Population pumped out
    of the coupled sublevels accumulates in them, and they keep at least
    their initial share, so they are exactly the trapped states of
    :func:`pump_steady_state`.
    """
    return _uncoupled_ground(system)
