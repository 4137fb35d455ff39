"""
Perturbative probe pathways in the dressed-atom picture.

Manifold bookkeeping: a pathway starts on a bare ground state in manifold 0
and every absorbed probe photon raises the manifold index by one. Energies
are taken relative to each manifold center, so the coupling photon energy
never appears and resonance conditions read

    one photon:  delta = E_final - E_initial
    two photons: delta = (E_final - E_initial) / 2

with the intermediate-state energy denominator ``E_int - E_initial - delta``.
"""
import cmath
import dataclasses
import logging
import math
import typing
from dataclasses import dataclass

import numpy as np  # type: ignore

from damspec.angular_momentum import QuantumNumber, check_transition, dipole_matrix
from damspec.config import (
    DEFAULT_MERGE_TOLERANCE,
    DEFAULT_ONE_PHOTON_HALF_WIDTH,
    DEFAULT_PROBE_RABI,
    DEFAULT_REFERENCE_OMEGA_C,
    DEFAULT_TWO_PHOTON_HALF_WIDTH,
    DIVERGENT_DENOMINATOR,
    EIARegime,
    INTERFERENCE_EPS,
    Interference,
    PathwayClass,
)
from damspec.dressed_engine import DressedBasis, DressedLabel, StateKind, dress, dressed_energy, probe_in_dressed_basis
from damspec.error import DomainError
from damspec.objects import SpectrumTrace, format_quantum_number
from damspec.optical_pumping import PopulationDistribution, pump_steady_state
from damspec.system_model import TransitionSystem, build_system

_logger: logging.Logger = logging.getLogger(__name__)

# probe matrix elements below this are selection-rule zeros
ELEMENT_ZERO_TOL: float = 1e-12


@dataclass(frozen=True)
class ManifoldState:
    label: DressedLabel
    manifold: int

    def __str__(self: "ManifoldState") -> str:
        return self.label.render(self.manifold)


@dataclass(frozen=True)
class PathwayBranch:
    intermediate: ManifoldState
    amplitude: complex
    numerator: complex
    denominator: float

    @property
    def divergent(self: "PathwayBranch") -> bool:
        return not cmath.isfinite(self.amplitude)


@dataclass(frozen=True)
class Pathway:
    pathway_class: PathwayClass
    initial: ManifoldState
    final: ManifoldState
    branches: typing.Tuple[PathwayBranch, ...]
    total_amplitude: complex
    resonance_detuning: float
    initial_population: float
    number: int = 0

    @property
    def pathway_id(self: "Pathway") -> str:
        return "{}:{}->{}".format(self.pathway_class.short_name, self.initial, self.final)

    @property
    def photons(self: "Pathway") -> int:
        return self.pathway_class.photons

    @property
    def weight(self: "Pathway") -> float:
        return self.initial_population * abs(self.total_amplitude) ** 2

    @property
    def has_divergent_branch(self: "Pathway") -> bool:
        return any(b.divergent for b in self.branches)

    @property
    def cancelled(self: "Pathway") -> bool:
        """
        Branches that sum to nothing: the pathway is not expected to show.
        """
        finite: typing.List[complex] = [b.amplitude for b in self.branches if not b.divergent]
        if self.photons == 1 or len(finite) < 2:
            return False
        incoherent: float = sum(abs(b) ** 2 for b in finite)
        return abs(sum(finite)) ** 2 <= INTERFERENCE_EPS * incoherent

    @property
    def interference(self: "Pathway") -> Interference:
        if self.photons == 1:
            return Interference.NotApplicable
        return interference_verdict([b.amplitude for b in self.branches])

    def as_report(self: "Pathway") -> typing.Dict[str, typing.Any]:
        return {
            "number": self.number,
            "id": self.pathway_id,
            "class": self.pathway_class.short_name,
            "initial": str(self.initial),
            "final": str(self.final),
            "resonance_detuning": self.resonance_detuning,
            "initial_population": self.initial_population,
            "total_amplitude": _complex_report(self.total_amplitude),
            "weight": self.weight,
            "interference": self.interference.value,
            "cancelled": self.cancelled,
            "branches": [
                {
                    "intermediate": str(b.intermediate),
                    "amplitude": _complex_report(b.amplitude),
                    "denominator": b.denominator,
                    "divergent": b.divergent,
                }
                for b in self.branches
            ],
        }


def _complex_report(value: complex) -> typing.Optional[typing.Dict[str, float]]:
    if not cmath.isfinite(value):
        return None
    return {"re": value.real, "im": value.imag}


@dataclass(frozen=True)
class WidthPolicy:
    """
    Half-widths of synthesized peaks, as multiples of ``gamma``. One-photon
    peaks end on a dressed state carrying half the excited-state width; the
    two-photon width is a free parameter.
    """

    one_photon_half_width: float = DEFAULT_ONE_PHOTON_HALF_WIDTH
    two_photon_half_width: float = DEFAULT_TWO_PHOTON_HALF_WIDTH
    gamma: float = 1.0

    def half_width(self: "WidthPolicy", pathway_class: PathwayClass) -> float:
        factor: float = self.one_photon_half_width if pathway_class.photons == 1 else self.two_photon_half_width
        return factor * self.gamma


@dataclass(frozen=True)
class Peak:
    delta: float
    weight: float
    pathway_class: PathwayClass
    constituents: typing.Tuple[str, ...]
    interference: Interference
    divergent: bool = False
    # every constituent pathway cancels
    cancelled: bool = False

    @property
    def photons(self: "Peak") -> int:
        return self.pathway_class.photons


@dataclass(frozen=True)
class PeakTable:
    peaks: typing.Tuple[Peak, ...]
    merge_tolerance: float

    def __len__(self: "PeakTable") -> int:
        return len(self.peaks)

    def of_photons(self: "PeakTable", photons: int) -> typing.Tuple[Peak, ...]:
        return tuple(p for p in self.peaks if p.photons == photons)

    @property
    def deltas(self: "PeakTable") -> typing.List[float]:
        return [p.delta for p in self.peaks]

    def as_report(self: "PeakTable") -> typing.Dict[str, typing.Any]:
        return {
            "merge_tolerance": self.merge_tolerance,
            "peaks": [
                {
                    "delta": p.delta,
                    "weight": p.weight,
                    "class": p.pathway_class.short_name,
                    "constituents": list(p.constituents),
                    "interference": p.interference.value,
                    "divergent": p.divergent,
                    "cancelled": p.cancelled,
                }
                for p in self.peaks
            ],
        }


def interference_verdict(branches: typing.Sequence[complex]) -> Interference:
    """
    Compares the coherent sum of branch amplitudes with their incoherent sum.
    Divergent (non-finite) branches are left out.
    """
    finite: typing.List[complex] = [complex(b) for b in branches if cmath.isfinite(complex(b))]
    if len(finite) < 2:
        return Interference.NotApplicable
    incoherent: float = sum(abs(b) ** 2 for b in finite)
    if incoherent == 0.0:
        return Interference.NotApplicable
    coherent: float = abs(sum(finite)) ** 2
    if coherent > incoherent * (1 + INTERFERENCE_EPS):
        return Interference.Constructive
    if coherent < incoherent * (1 - INTERFERENCE_EPS):
        return Interference.Destructive
    return Interference.Mixed


def _two_photon_resonance(basis: DressedBasis, initial: DressedLabel, final: DressedLabel) -> float:
    return (dressed_energy(basis, final) - dressed_energy(basis, initial)) / 2


def _branch(
    probe: np.ndarray,
    energies: np.ndarray,
    i: int,
    k: int,
    f: int,
    delta: float,
    intermediate: ManifoldState,
) -> PathwayBranch:
    numerator: complex = complex(probe[f, k] * probe[k, i])
    denominator: float = float(energies[k] - energies[i] - delta)
    if abs(denominator) < DIVERGENT_DENOMINATOR:
        _logger.warning(
            "Divergent branch via {} (denominator {:.3e}) excluded from the amplitude sum".format(
                intermediate, denominator
            )
        )
        amplitude: complex = complex(math.inf, 0.0)
    else:
        amplitude = numerator / denominator
    return PathwayBranch(intermediate=intermediate, amplitude=amplitude, numerator=numerator, denominator=denominator)


def branch_amplitude(
    initial: DressedLabel,
    intermediate: DressedLabel,
    final: DressedLabel,
    system: TransitionSystem,
    basis: DressedBasis,
    delta: typing.Optional[float] = None,
) -> complex:
    """
    Second-order amplitude of one two-photon branch with unit probe Rabi
    frequency.

    Parameters
    ----------
    initial, intermediate, final : DressedLabel
        States of ``basis`` in consecutive manifolds.
    delta : float, optional
        Probe detuning; defaults to the two-photon resonance of the
        endpoints.

    Returns
    -------
    ``<f|V|k><k|V|i> / (E_k - E_i - delta)``, infinite when the denominator vanishes: complex
    """
    i, k, f = basis.column(initial), basis.column(intermediate), basis.column(final)
    if delta is None:
        delta = _two_photon_resonance(basis, initial, final)
    branch: PathwayBranch = _branch(
        probe_in_dressed_basis(system, basis), basis.energies, i, k, f, delta, ManifoldState(intermediate, 1)
    )
    return branch.amplitude


def _path_sort_key(pathway: Pathway) -> typing.Tuple[int, typing.Tuple[float, int], typing.Tuple[float, int]]:
    return pathway.pathway_class.value, pathway.initial.label.sort_key, pathway.final.label.sort_key


def enumerate_pathways(
    system: TransitionSystem,
    basis: DressedBasis,
    pops: PopulationDistribution,
    max_photons: int = 2,
) -> typing.List[Pathway]:
    """
    Lists the probe pathways out of every trapped bare ground state.

    One-photon pathways end on any state with an excited component. Two-photon
    pathways pass through dressed states (the only ones that hold a ground
    component for the second absorption) and end on a dressed state or an
    uncoupled excited sublevel; all intermediates joining the same endpoints
    are kept together as branches of one pathway.

    Returns
    -------
    Pathways numbered from 1 in (class, initial, final) order: typing.List[Pathway]
    """
    if max_photons not in (1, 2):
        raise DomainError("max_photons={} must be 1 or 2".format(max_photons))

    probe: np.ndarray = probe_in_dressed_basis(system, basis)
    energies: np.ndarray = basis.energies
    labels: typing.Tuple[DressedLabel, ...] = basis.labels
    dressed_columns: typing.List[int] = [c for c, lbl in enumerate(labels) if not lbl.is_bare]
    excited_columns: typing.List[int] = [c for c, lbl in enumerate(labels) if lbl.has_excited_component]

    pathways: typing.List[Pathway] = []
    for sublevel in pops.trapped:
        initial_label: DressedLabel = DressedLabel(StateKind.BareGround, sublevel.m)
        i: int = basis.column(initial_label)
        population: float = pops.population(sublevel)
        initial: ManifoldState = ManifoldState(initial_label, 0)

        for f in excited_columns:
            element: complex = complex(probe[f, i])
            if abs(element) <= ELEMENT_ZERO_TOL:
                continue
            pathway_class: PathwayClass = (
                PathwayClass.OnePhotonBareBare if labels[f].is_bare else PathwayClass.OnePhotonBareDressed
            )
            pathways.append(
                Pathway(
                    pathway_class=pathway_class,
                    initial=initial,
                    final=ManifoldState(labels[f], 1),
                    branches=(),
                    total_amplitude=element,
                    resonance_detuning=float(energies[f] - energies[i]),
                    initial_population=population,
                )
            )

        if max_photons < 2:
            continue

        for f in excited_columns:
            delta: float = float(energies[f] - energies[i]) / 2
            branches: typing.List[PathwayBranch] = []
            for k in dressed_columns:
                if abs(probe[k, i]) <= ELEMENT_ZERO_TOL or abs(probe[f, k]) <= ELEMENT_ZERO_TOL:
                    continue
                branches.append(_branch(probe, energies, i, k, f, delta, ManifoldState(labels[k], 1)))
            if not branches:
                continue
            total: complex = sum((b.amplitude for b in branches if not b.divergent), 0j)
            pathway_class = PathwayClass.TwoPhotonBareBare if labels[f].is_bare else PathwayClass.TwoPhotonBareDressed
            pathways.append(
                Pathway(
                    pathway_class=pathway_class,
                    initial=initial,
                    final=ManifoldState(labels[f], 2),
                    branches=tuple(branches),
                    total_amplitude=total,
                    resonance_detuning=delta,
                    initial_population=population,
                )
            )

    pathways.sort(key=_path_sort_key)
    numbered: typing.List[Pathway] = [dataclasses.replace(p, number=n) for n, p in enumerate(pathways, start=1)]
    _logger.debug(
        "Enumerated {} pathways for {}: {}".format(
            len(numbered), system.system_id, ", ".join(p.pathway_id for p in numbered)
        )
    )
    return numbered


def _merge(group: typing.List[Pathway]) -> Peak:
    weights: typing.List[float] = [p.weight for p in group]
    total: float = float(sum(weights))
    if total > 0:
        delta: float = float(sum(w * p.resonance_detuning for w, p in zip(weights, group)) / total)
        dominant: Pathway = group[int(np.argmax(weights))]
    else:
        delta = float(np.mean([p.resonance_detuning for p in group]))
        dominant = min(group, key=_path_sort_key)

    verdicts: typing.Set[Interference] = {
        p.interference for p in group if p.interference is not Interference.NotApplicable
    }
    interference: Interference
    if not verdicts:
        interference = Interference.NotApplicable
    elif len(verdicts) == 1:
        interference = verdicts.pop()
    else:
        interference = Interference.Mixed

    return Peak(
        delta=delta,
        weight=total,
        pathway_class=dominant.pathway_class,
        constituents=tuple(p.pathway_id for p in group),
        interference=interference,
        divergent=any(p.has_divergent_branch for p in group),
        cancelled=all(p.cancelled for p in group),
    )


def peak_table(pathways: typing.Sequence[Pathway], merge_tolerance: float = DEFAULT_MERGE_TOLERANCE) -> PeakTable:
    """
    Groups pathways of the same photon number resonant within
    ``merge_tolerance`` of each other into peaks. Branches of one pathway
    were already summed coherently; distinct pathways at the same detuning add
    as rates. Coincident resonances of different photon numbers stay separate
    peaks.
    """
    if merge_tolerance < 0:
        raise DomainError("merge_tolerance={} must be non-negative".format(merge_tolerance))
    peaks: typing.List[Peak] = []
    for photons in sorted({p.photons for p in pathways}):
        ordered: typing.List[Pathway] = sorted(
            (p for p in pathways if p.photons == photons), key=lambda p: (p.resonance_detuning, _path_sort_key(p))
        )
        groups: typing.List[typing.List[Pathway]] = []
        for pathway in ordered:
            if groups and pathway.resonance_detuning - groups[-1][-1].resonance_detuning < merge_tolerance:
                groups[-1].append(pathway)
            else:
                groups.append([pathway])
        peaks.extend(_merge(g) for g in groups)
    peaks.sort(key=lambda p: (p.delta, p.photons))
    return PeakTable(peaks=tuple(peaks), merge_tolerance=merge_tolerance)


@dataclass(frozen=True)
class SymbolicOffset:
    """A resonance at ``sign * Omega_m / divisor``; ``m`` is None at zero."""

    sign: int
    m: typing.Optional[float]
    divisor: int
    value: float

    def __str__(self: "SymbolicOffset") -> str:
        if self.m is None:
            return "0"
        return "{}Omega_{}/{}".format("+" if self.sign > 0 else "-", format_quantum_number(abs(self.m)), self.divisor)


class Breakup(typing.NamedTuple):
    two_photon_peak_count: int
    positions: typing.Tuple[SymbolicOffset, ...]


def _symbolic(peak: Peak, by_id: typing.Dict[str, Pathway]) -> SymbolicOffset:
    pathway: Pathway = by_id[peak.constituents[0]]
    final: DressedLabel = pathway.final.label
    if final.is_bare:
        return SymbolicOffset(sign=0, m=None, divisor=1, value=peak.delta)
    sign: int = 1 if final.kind is StateKind.Plus else -1
    return SymbolicOffset(sign=sign, m=final.m, divisor=2 * pathway.photons, value=peak.delta)


def predict_breakup(
    F_g: QuantumNumber,
    F_e: QuantumNumber,
    theta: float,
    reference_omega_c: float = DEFAULT_REFERENCE_OMEGA_C,
    merge_tolerance: float = DEFAULT_MERGE_TOLERANCE,
) -> Breakup:
    """
    Counts the distinct two-photon resonances of ``F_g -> F_e`` in the strong
    coupling regime by running the pathway pipeline at ``reference_omega_c``.
    Resonances are counted whatever their weight.
    """
    system: TransitionSystem = build_system(F_g, F_e, reference_omega_c, theta=theta)
    basis: DressedBasis = dress(system)
    pops: PopulationDistribution = pump_steady_state(system)
    pathways: typing.List[Pathway] = [p for p in enumerate_pathways(system, basis, pops) if p.photons == 2]
    table: PeakTable = peak_table(pathways, merge_tolerance)
    by_id: typing.Dict[str, Pathway] = {p.pathway_id: p for p in pathways}
    positions: typing.Tuple[SymbolicOffset, ...] = tuple(_symbolic(peak, by_id) for peak in table.peaks)
    _logger.debug("Break-up of {}: {}".format(system.system_id, [str(p) for p in positions]))
    return Breakup(two_photon_peak_count=len(positions), positions=positions)


def synthesize_spectrum(
    table: PeakTable,
    widths: WidthPolicy,
    grid: typing.Sequence[float],
    probe_rabi: float = DEFAULT_PROBE_RABI,
) -> SpectrumTrace:
    """
    Renders a peak table as a sum of Lorentzians. A peak of weight ``w``
    reached by ``n`` photons has golden-rule height
    ``w * (probe_rabi / 2) ** (2 * (n - 1)) / half_width``, the per-intensity
    normalization of the oracle.
    """
    deltas: np.ndarray = np.asarray(grid, dtype=float)
    absorption: np.ndarray = np.zeros_like(deltas)
    for peak in table.peaks:
        hw: float = widths.half_width(peak.pathway_class)
        height: float = peak.weight * (probe_rabi / 2) ** (2 * (peak.photons - 1)) / hw
        absorption += height * hw ** 2 / ((deltas - peak.delta) ** 2 + hw ** 2)
    meta: typing.Dict[str, typing.Any] = {
        "source": "pathway_engine",
        "one_photon_half_width": widths.one_photon_half_width * widths.gamma,
        "two_photon_half_width": widths.two_photon_half_width * widths.gamma,
        "probe_rabi": probe_rabi,
        "merge_tolerance": table.merge_tolerance,
    }
    return SpectrumTrace(deltas=deltas, absorption=absorption, meta=meta)


def eia_regime(F_g: QuantumNumber, F_e: QuantumNumber, closed: bool = True) -> typing.Optional[EIARegime]:
    """
    Normal EIA from transfer of coherence needs ``F_e = F_g + 1``, a closed
    transition and ``F_g > 0``. Anomalous EIA belongs to ``F_e <= F_g``
    systems whose pi coupling leaves a ground sublevel dark.
    """
    check_transition(F_g, F_e)
    twice_g: int = int(round(2 * float(F_g)))
    twice_e: int = int(round(2 * float(F_e)))
    if twice_e == twice_g + 2:
        return EIARegime.Normal if closed and twice_g > 0 else None
    pi_block: np.ndarray = dipole_matrix(F_g, F_e, 0)
    has_dark: bool = bool(np.any(np.all(np.abs(pi_block) <= ELEMENT_ZERO_TOL, axis=0)))
    return EIARegime.Anomalous if has_dark else None
