"""
Resonant dressed states of the coupling field.

For every m with a nonzero pi coupling ``g_m = |g_m| exp(i phi_m)`` the pair
``{|m>, |m'>}`` is replaced by

    |m+> = (exp(-i phi_m) |m> + |m'>) / sqrt(2)        energy +Omega_m / 2
    |m-> = (|m> - exp(i phi_m) |m'>) / sqrt(2)         energy -Omega_m / 2

with ``Omega_m = 2 |g_m|``. Sublevels without a pi partner, or whose pi
element vanishes, pass through as bare states at energy 0.
"""
import cmath
import logging
import math
import typing
from dataclasses import dataclass
from enum import Enum

import numpy as np  # type: ignore

from damspec.config import COUPLING_ZERO_TOL
from damspec.error import DomainError
from damspec.objects import SublevelRef, format_quantum_number
from damspec.system_model import TransitionSystem

_logger: logging.Logger = logging.getLogger(__name__)


class StateKind(Enum):
    Plus = "+"
    Minus = "-"
    BareGround = "g"
    BareExcited = "e"


@dataclass(frozen=True)
class DressedLabel:
    kind: StateKind
    m: float

    @property
    def is_bare(self: "DressedLabel") -> bool:
        return self.kind in (StateKind.BareGround, StateKind.BareExcited)

    @property
    def has_excited_component(self: "DressedLabel") -> bool:
        return self.kind is not StateKind.BareGround

    @property
    def sort_key(self: "DressedLabel") -> typing.Tuple[float, int]:
        order: typing.Dict[StateKind, int] = {
            StateKind.BareGround: 0,
            StateKind.Minus: 1,
            StateKind.Plus: 2,
            StateKind.BareExcited: 3,
        }
        return self.m, order[self.kind]

    def __str__(self: "DressedLabel") -> str:
        m: str = format_quantum_number(self.m)
        if self.kind is StateKind.BareGround:
            return "|{}>".format(m)
        if self.kind is StateKind.BareExcited:
            return "|{}'>".format(m)
        return "|{}{}>".format(m, self.kind.value)

    def render(self: "DressedLabel", manifold: int) -> str:
        """
        Dressed-atom notation with coupling photon bookkeeping. ``manifold`` is
        the number of probe photons absorbed so far; bare ground states carry
        one coupling photon more than the excited component of their
        manifold.
        """
        m: str = format_quantum_number(self.m)
        if self.kind is StateKind.BareGround:
            photons: int = manifold + 1
            return "|{},{}>".format(m, _photon_tag(photons))
        if self.kind is StateKind.BareExcited:
            return "|{}',{}>".format(m, _photon_tag(manifold))
        return "|{}{},{}>".format(m, self.kind.value, _photon_tag(manifold))


def _photon_tag(offset: int) -> str:
    return "n" if offset == 0 else "n+{}".format(offset)


@dataclass(frozen=True, eq=False)
class DressedDoublet:
    m: float
    omega_m: float
    phi_m: float
    # components over (|m>, |m'>)
    plus_state: np.ndarray
    minus_state: np.ndarray


@dataclass(frozen=True, eq=False)
class DressedBasis:
    """
    Columns of ``transform`` are the dressed and bare states expressed in the
    bare sublevel basis; ``labels[k]`` names column k. A doublet's ``+``
    member occupies the column of its ground sublevel and the ``-`` member the
    column of its excited sublevel, so an undressed system has an identity
    transform.
    """

    doublets: typing.Dict[float, DressedDoublet]
    bare_survivors: typing.Tuple[SublevelRef, ...]
    transform: np.ndarray
    labels: typing.Tuple[DressedLabel, ...]

    def column(self: "DressedBasis", label: DressedLabel) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError("{} is not a state of this dressed basis".format(label))

    @property
    def energies(self: "DressedBasis") -> np.ndarray:
        return np.array([dressed_energy(self, label) for label in self.labels])

    def as_report(self: "DressedBasis") -> typing.Dict[str, typing.Any]:
        doublets: typing.List[typing.Dict[str, typing.Any]] = []
        for m in sorted(self.doublets):
            doublet: DressedDoublet = self.doublets[m]
            doublets.append(
                {
                    "m": format_quantum_number(m),
                    "omega_m": doublet.omega_m,
                    "phi_m": doublet.phi_m,
                    "energies": [doublet.omega_m / 2, -doublet.omega_m / 2],
                    "states": [str(DressedLabel(StateKind.Plus, m)), str(DressedLabel(StateKind.Minus, m))],
                }
            )
        return {
            "doublets": doublets,
            "bare_survivors": [str(s) for s in sorted(self.bare_survivors, key=lambda s: s.sort_key)],
        }


def _bare_label(sublevel: SublevelRef) -> DressedLabel:
    kind: StateKind = StateKind.BareGround if sublevel.is_ground else StateKind.BareExcited
    return DressedLabel(kind, sublevel.m)


def dress(system: TransitionSystem) -> DressedBasis:
    """
    Builds the resonant dressed-state basis of ``system``.
    """
    dim: int = system.dim
    transform: np.ndarray = np.eye(dim, dtype=complex)
    labels: typing.List[DressedLabel] = [_bare_label(s) for s in system.sublevels]
    doublets: typing.Dict[float, DressedDoublet] = {}
    survivors: typing.List[SublevelRef] = []

    for ground in system.ground_sublevels:
        excited: typing.Optional[SublevelRef] = system.partner(ground)
        g_m: complex = system.pi_coupling(ground.m)
        if excited is None or abs(g_m) <= COUPLING_ZERO_TOL:
            continue

        phi: float = cmath.phase(g_m)
        root_half: float = 1 / math.sqrt(2.0)
        plus: np.ndarray = root_half * np.array([cmath.exp(-1j * phi), 1.0])
        minus: np.ndarray = root_half * np.array([1.0, -cmath.exp(1j * phi)])
        plus.setflags(write=False)
        minus.setflags(write=False)
        doublets[ground.m] = DressedDoublet(
            m=ground.m, omega_m=2 * abs(g_m), phi_m=phi, plus_state=plus, minus_state=minus
        )

        i_g: int = system.index(ground)
        i_e: int = system.index(excited)
        transform[:, i_g] = 0
        transform[:, i_e] = 0
        transform[i_g, i_g], transform[i_e, i_g] = plus
        transform[i_g, i_e], transform[i_e, i_e] = minus
        labels[i_g] = DressedLabel(StateKind.Plus, ground.m)
        labels[i_e] = DressedLabel(StateKind.Minus, ground.m)

    for sublevel in system.sublevels:
        if sublevel.m in doublets:
            continue
        survivors.append(sublevel)

    transform.setflags(write=False)
    _logger.debug(
        "Dressed {}: doublets at m={} survivors={}".format(
            system.system_id,
            [format_quantum_number(m) for m in sorted(doublets)],
            [str(s) for s in survivors],
        )
    )
    return DressedBasis(
        doublets=doublets, bare_survivors=tuple(survivors), transform=transform, labels=tuple(labels)
    )


def dressed_energy(basis: DressedBasis, label: DressedLabel) -> float:
    """
    Energy of ``label`` relative to its manifold center, in units of gamma.
    Manifold offsets are bookkept as integer indices and never added here.
    """
    if label not in basis.labels:
        raise DomainError("{} is not a state of this dressed basis".format(label))
    if label.is_bare:
        return 0.0
    half_split: float = basis.doublets[label.m].omega_m / 2
    return half_split if label.kind is StateKind.Plus else -half_split


def probe_in_dressed_basis(system: TransitionSystem, basis: DressedBasis) -> np.ndarray:
    """
    Unit-probe-Rabi absorption matrix between dressed/bare states,
    ``W[b, a] = <b| probe_op |a>``. Each absorption step raises the manifold
    index by one, which is why only the raising part of the probe enters.
    """
    transform: np.ndarray = basis.transform
    return transform.conj().T @ system.probe_op @ transform
