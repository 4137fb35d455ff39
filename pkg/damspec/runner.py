"""
Run orchestration: each ``run_*`` function builds the system a
:class:`RunProperty` describes, runs the pathway engine and/or the oracle on
it and writes a self-describing output directory.
"""
import logging
import os
import typing
from dataclasses import dataclass

import numpy as np  # type: ignore
from scipy import signal  # type: ignore

from damspec.config import (
    CONCORDANCE_ABS_TOL,
    CONCORDANCE_REL_TOL,
    DRESSED_BASIS_FILE,
    INTERFERENCE_EPS,
    PATHWAYS_FILE,
    PEAKS_FILE,
    POPULATIONS_FILE,
    PROBE_SCALING_FILE,
    REPORT_FILE,
    SPECTRUM_FILE,
    SWEEP_FILE,
    SYNTHESIZED_FILE,
    WEAK_PROBE_RABI,
    EIARegime,
    IntensityRegime,
    Normalization,
    RunMode,
    Verdict,
)
from damspec.dressed_engine import DressedBasis, dress
from damspec.objects import DetectedPeak, SpectrumTrace
from damspec.optical_pumping import PopulationDistribution, pump_steady_state
from damspec.oracle.floquet import ZERO_DETUNING
from damspec.oracle.spectrum import find_peaks, spectrum
from damspec.pathway_engine import (
    Breakup,
    Pathway,
    Peak,
    PeakTable,
    WidthPolicy,
    eia_regime,
    enumerate_pathways,
    peak_table,
    predict_breakup,
    synthesize_spectrum,
)
from damspec.run_property import RunProperty
from damspec.system_model import TransitionSystem, build_system
from damspec.utils import PackageInfo, detuning_grid, sidecar_name, write_csv, write_json, write_trace

_logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Prediction:
    """
    Pathway engine output for one system.
    """

    system: TransitionSystem
    basis: DressedBasis
    populations: PopulationDistribution
    pathways: typing.Tuple[Pathway, ...]
    table: PeakTable


@dataclass(frozen=True)
class Match:
    predicted: Peak
    oracle: DetectedPeak

    @property
    def distance(self: "Match") -> float:
        return abs(self.predicted.delta - self.oracle.delta)


@dataclass(frozen=True)
class CompareReport:
    predicted_peaks: PeakTable
    oracle_peaks: typing.Tuple[DetectedPeak, ...]
    matches: typing.Tuple[Match, ...]
    unmatched_predictions: typing.Tuple[Peak, ...]
    unmatched_oracle_peaks: typing.Tuple[DetectedPeak, ...]
    # zero-weight or out-of-grid predictions, left out of the matching
    suppressed_predictions: typing.Tuple[Peak, ...]
    tolerance: float
    verdict: Verdict

    @property
    def concordant(self: "CompareReport") -> bool:
        return self.verdict == Verdict.Concordant

    def as_report(self: "CompareReport") -> typing.Dict[str, typing.Any]:
        def peak(p: Peak) -> typing.Dict[str, typing.Any]:
            return {"delta": p.delta, "class": p.pathway_class.short_name, "weight": p.weight}

        def detected(p: DetectedPeak) -> typing.Dict[str, typing.Any]:
            return {"delta": p.delta, "height": p.height, "prominence": p.prominence}

        return {
            "verdict": self.verdict.value,
            "tolerance": self.tolerance,
            "predicted_peaks": self.predicted_peaks.as_report(),
            "oracle_peaks": [detected(p) for p in self.oracle_peaks],
            "matches": [
                {
                    "predicted": m.predicted.delta,
                    "oracle": m.oracle.delta,
                    "distance": m.distance,
                    "class": m.predicted.pathway_class.short_name,
                }
                for m in self.matches
            ],
            "unmatched_predictions": [peak(p) for p in self.unmatched_predictions],
            "unmatched_oracle_peaks": [detected(p) for p in self.unmatched_oracle_peaks],
            "suppressed_predictions": [peak(p) for p in self.suppressed_predictions],
        }


@dataclass(frozen=True)
class SweepRow:
    omega_c_rabi: float
    central_peak_count: int
    dip_depth: float
    splitting: float
    reference_splitting: float
    regime: IntensityRegime


@dataclass(frozen=True)
class ProbeScalingRow:
    probe_rabi: float
    two_photon_height: float
    one_photon_height: float


@dataclass(frozen=True)
class ProbeScaling:
    rows: typing.Tuple[ProbeScalingRow, ...]
    two_photon_deltas: typing.Tuple[float, ...]
    one_photon_deltas: typing.Tuple[float, ...]
    # log-log slope of two_photon_height against probe_rabi
    exponent: typing.Optional[float]

    def as_report(self: "ProbeScaling") -> typing.Dict[str, typing.Any]:
        return {
            "exponent": self.exponent,
            "weak_probe_rabi": WEAK_PROBE_RABI,
            "two_photon_deltas": list(self.two_photon_deltas),
            "one_photon_deltas": list(self.one_photon_deltas),
            "rows": [
                {
                    "probe_rabi": r.probe_rabi,
                    "two_photon_height": r.two_photon_height,
                    "one_photon_height": r.one_photon_height,
                }
                for r in self.rows
            ],
        }


@dataclass(frozen=True)
class SweepSummary:
    rows: typing.Tuple[SweepRow, ...]
    # smallest coupling with more than one central two-photon peak
    breakup_threshold: typing.Optional[float]
    probe_scaling: typing.Optional[ProbeScaling] = None


@dataclass(frozen=True)
class AnalysisBundle:
    prediction: Prediction
    synthesized: SpectrumTrace
    regime: typing.Optional[EIARegime]
    breakup: Breakup
    files: typing.Tuple[str, ...]


def build_from_property(info: RunProperty, omega_c_rabi: typing.Optional[float] = None) -> TransitionSystem:
    return build_system(
        info.F_g,
        info.F_e,
        info.omega_c_rabi if omega_c_rabi is None else omega_c_rabi,
        gamma=info.gamma,
        theta=info.theta,
        coupling_phase=info.coupling_phase,
        loss_rate=info.loss_rate,
    )


def concordance_tolerance(gamma: float, omega_c_rabi: float) -> float:
    return max(CONCORDANCE_ABS_TOL * gamma, CONCORDANCE_REL_TOL * omega_c_rabi)


def predict(system: TransitionSystem, info: RunProperty) -> Prediction:
    basis: DressedBasis = dress(system)
    populations: PopulationDistribution = pump_steady_state(system, info.population_threshold)
    pathways: typing.List[Pathway] = enumerate_pathways(system, basis, populations)
    table: PeakTable = peak_table(pathways, info.merge_tolerance * info.gamma)
    _logger.info(
        "{} at omega_c={}: {} pathways, {} peaks, trapped {}".format(
            system.system_id,
            system.omega_c_rabi,
            len(pathways),
            len(table),
            [str(s) for s in populations.trapped],
        )
    )
    return Prediction(system=system, basis=basis, populations=populations, pathways=tuple(pathways), table=table)


def oracle_trace(system: TransitionSystem, info: RunProperty) -> SpectrumTrace:
    return spectrum(
        system,
        info.probe_rabi,
        detuning_grid(*info.grid),
        method=info.method,
        harmonics=info.harmonics,
        max_harmonics=info.max_harmonics,
        convergence_tol=info.convergence_tol,
        normalization=info.normalization,
        max_workers=info.max_workers,
    )


def detect_peaks(trace: SpectrumTrace, relative_prominence: float) -> typing.List[DetectedPeak]:
    """
    Peaks of ``trace`` whose prominence exceeds ``relative_prominence`` times
    the trace maximum.
    """
    scale: float = float(np.max(np.abs(trace.absorption)))
    if scale == 0:
        return []
    return find_peaks(trace, relative_prominence * scale)


def _stamp(document: typing.Dict[str, typing.Any], info: RunProperty) -> typing.Dict[str, typing.Any]:
    document["generator"] = PackageInfo.generator()
    document["config"] = info.as_report()
    return document


def _prepare_output(info: RunProperty) -> str:
    os.makedirs(info.output_dir, exist_ok=True)
    return info.output_dir


def _peak_rows(table: PeakTable) -> typing.Iterator[typing.List[typing.Any]]:
    for p in table.peaks:
        constituents: str = ";".join(p.constituents)
        yield [p.delta, p.weight, p.pathway_class.short_name, p.interference.value, p.divergent, constituents]


def _write_peaks(directory: str, table: PeakTable) -> str:
    header: typing.Tuple[str, ...] = ("delta", "weight", "class", "interference", "divergent", "constituents")
    return write_csv(directory, PEAKS_FILE, header, _peak_rows(table))


def _normal_eia_note(regime: typing.Optional[EIARegime], trapped: bool) -> typing.Optional[str]:
    if trapped:
        return None
    if regime is EIARegime.Normal:
        return "no trapped ground state: normal EIA regime (transfer of coherence)"
    return "no trapped ground state: no two-photon pathways start from a bare ground state"


def run_analyze(info: RunProperty) -> AnalysisBundle:
    """
    Pathway analysis of one system: dressed basis, pumped populations,
    numbered pathways, merged peak table and the synthesized spectrum.
    """
    directory: str = _prepare_output(info)
    system: TransitionSystem = build_from_property(info)
    prediction: Prediction = predict(system, info)
    widths: WidthPolicy = WidthPolicy(two_photon_half_width=info.two_photon_half_width, gamma=info.gamma)
    synthesized: SpectrumTrace = synthesize_spectrum(
        prediction.table, widths, detuning_grid(*info.grid), probe_rabi=info.probe_rabi
    )
    regime: typing.Optional[EIARegime] = eia_regime(info.F_g, info.F_e, closed=info.loss_rate == 0)
    breakup: Breakup = predict_breakup(
        info.F_g, info.F_e, info.theta, reference_omega_c=info.reference_omega_c, merge_tolerance=info.merge_tolerance
    )

    files: typing.List[str] = [
        write_json(directory, DRESSED_BASIS_FILE, _stamp(prediction.basis.as_report(), info)),
        write_json(directory, POPULATIONS_FILE, _stamp(prediction.populations.as_report(), info)),
        write_json(
            directory, PATHWAYS_FILE, _stamp({"pathways": [p.as_report() for p in prediction.pathways]}, info)
        ),
        _write_peaks(directory, prediction.table),
        write_trace(directory, SYNTHESIZED_FILE, synthesized),
    ]
    counts: typing.Dict[str, int] = {}
    for pathway in prediction.pathways:
        counts[pathway.pathway_class.short_name] = counts.get(pathway.pathway_class.short_name, 0) + 1
    report: typing.Dict[str, typing.Any] = {
        "mode": RunMode.Analyze.value,
        "system": system.system_id,
        "eia_regime": None if regime is None else regime.value,
        "trapped": [str(s) for s in prediction.populations.trapped],
        "pathway_count": len(prediction.pathways),
        "pathways_by_class": counts,
        "peak_count": len(prediction.table),
        "two_photon_peak_count": len(prediction.table.of_photons(2)),
        "breakup": {
            "reference_omega_c": info.reference_omega_c,
            "two_photon_peak_count": breakup.two_photon_peak_count,
            "positions": [str(p) for p in breakup.positions],
        },
        "synthesized": synthesized.meta,
        "notes": [],
    }
    note: typing.Optional[str] = _normal_eia_note(regime, bool(prediction.populations.trapped))
    if note is not None:
        report["notes"].append(note)
    files.append(os.path.join(directory, REPORT_FILE))
    report["files"] = [os.path.basename(f) for f in files]
    write_json(directory, REPORT_FILE, _stamp(report, info))
    _logger.info("Analysis of {} written to {}".format(system.system_id, directory))
    return AnalysisBundle(
        prediction=prediction, synthesized=synthesized, regime=regime, breakup=breakup, files=tuple(files)
    )


def _write_spectrum(directory: str, name: str, trace: SpectrumTrace, info: RunProperty) -> typing.List[str]:
    return [
        write_trace(directory, name, trace),
        write_json(directory, sidecar_name(name), _stamp(dict(trace.meta), info)),
    ]


def run_spectrum(info: RunProperty) -> SpectrumTrace:
    """
    Oracle spectrum of one system with its metadata sidecar.
    """
    directory: str = _prepare_output(info)
    system: TransitionSystem = build_from_property(info)
    trace: SpectrumTrace = oracle_trace(system, info)
    _write_spectrum(directory, SPECTRUM_FILE, trace, info)
    return trace


def match_peaks(
    table: PeakTable,
    oracle_peaks: typing.Sequence[DetectedPeak],
    tolerance: float,
    window: typing.Tuple[float, float],
) -> CompareReport:
    """
    Greedy nearest matching of predicted to detected peaks. Two-photon
    predictions are matched first, closest pairs first; a pair is accepted
    only within ``tolerance`` and when neither side is taken. Predictions
    outside ``window``, of vanishing weight or with cancelling branches are
    not expected to show and are set aside as suppressed.
    """
    max_weight: typing.Dict[int, float] = {}
    for p in table.peaks:
        max_weight[p.photons] = max(max_weight.get(p.photons, 0.0), p.weight)
    expected: typing.List[Peak] = []
    suppressed: typing.List[Peak] = []
    for p in table.peaks:
        inside: bool = window[0] <= p.delta <= window[1]
        visible: bool = not p.cancelled and p.weight > INTERFERENCE_EPS * max_weight[p.photons]
        (expected if inside and visible else suppressed).append(p)

    taken_predicted: typing.Set[int] = set()
    taken_oracle: typing.Set[int] = set()
    matches: typing.List[Match] = []
    for photons in (2, 1):
        candidates: typing.List[typing.Tuple[float, int, int]] = []
        for i, p in enumerate(expected):
            if p.photons != photons:
                continue
            for j, o in enumerate(oracle_peaks):
                distance: float = abs(p.delta - o.delta)
                if distance <= tolerance:
                    candidates.append((distance, i, j))
        for distance, i, j in sorted(candidates):
            if i in taken_predicted or j in taken_oracle:
                continue
            taken_predicted.add(i)
            taken_oracle.add(j)
            matches.append(Match(predicted=expected[i], oracle=oracle_peaks[j]))

    unmatched: typing.List[Peak] = [p for i, p in enumerate(expected) if i not in taken_predicted]
    verdict: Verdict = Verdict.Discrepant if any(p.photons == 2 for p in unmatched) else Verdict.Concordant
    return CompareReport(
        predicted_peaks=table,
        oracle_peaks=tuple(oracle_peaks),
        matches=tuple(sorted(matches, key=lambda m: m.predicted.delta)),
        unmatched_predictions=tuple(unmatched),
        unmatched_oracle_peaks=tuple(o for j, o in enumerate(oracle_peaks) if j not in taken_oracle),
        suppressed_predictions=tuple(suppressed),
        tolerance=tolerance,
        verdict=verdict,
    )


def run_compare(info: RunProperty) -> CompareReport:
    """
    Pathway peak table against the oracle spectrum of the same system.
    """
    directory: str = _prepare_output(info)
    system: TransitionSystem = build_from_property(info)
    prediction: Prediction = predict(system, info)
    trace: SpectrumTrace = oracle_trace(system, info)
    oracle_peaks: typing.List[DetectedPeak] = detect_peaks(trace, info.min_prominence)
    tolerance: float = concordance_tolerance(info.gamma, info.omega_c_rabi)
    report: CompareReport = match_peaks(
        prediction.table, oracle_peaks, tolerance, (float(trace.deltas[0]), float(trace.deltas[-1]))
    )

    _write_spectrum(directory, SPECTRUM_FILE, trace, info)
    _write_peaks(directory, prediction.table)
    document: typing.Dict[str, typing.Any] = report.as_report()
    document.update({"mode": RunMode.Compare.value, "system": system.system_id})
    write_json(directory, REPORT_FILE, _stamp(document, info))
    log = _logger.info if report.concordant else _logger.warning
    log(
        "{} compare: {} ({} matches, {} unmatched predictions, tolerance {:.3g})".format(
            system.system_id, report.verdict.value, len(report.matches), len(report.unmatched_predictions), tolerance
        )
    )
    return report


def reference_splitting(prediction: Prediction) -> float:
    """
    Splitting of the doublet setting the central two-photon structure: the
    largest dressed final-state splitting of a two-photon pathway, else the
    largest intermediate one.
    """
    finals: typing.List[float] = []
    intermediates: typing.List[float] = []
    for pathway in prediction.pathways:
        if pathway.photons != 2:
            continue
        if not pathway.final.label.is_bare:
            finals.append(prediction.basis.doublets[pathway.final.label.m].omega_m)
        for branch in pathway.branches:
            intermediates.append(prediction.basis.doublets[branch.intermediate.label.m].omega_m)
    if finals:
        return max(finals)
    return max(intermediates, default=0.0)


def intensity_regime(omega_ref: float, gamma: float) -> IntensityRegime:
    if omega_ref < gamma:
        return IntensityRegime.Low
    if omega_ref <= 2 * gamma:
        return IntensityRegime.Intermediate
    return IntensityRegime.High


def central_region(prediction: Prediction, tolerance: float) -> typing.Tuple[float, float]:
    """
    Detuning span of the predicted two-photon peaks widened by ``tolerance``.
    """
    deltas: typing.List[float] = [p.delta for p in prediction.table.of_photons(2)] or [0.0]
    return min(deltas) - tolerance, max(deltas) + tolerance


def central_structure(
    trace: SpectrumTrace, oracle_peaks: typing.Sequence[DetectedPeak], region: typing.Tuple[float, float]
) -> typing.Tuple[int, float, float]:
    """
    Number of detected peaks inside ``region``, depth of the most prominent
    dip inside it and the distance between its outermost peaks.
    """
    inside: typing.List[float] = sorted(p.delta for p in oracle_peaks if region[0] <= p.delta <= region[1])
    splitting: float = inside[-1] - inside[0] if len(inside) > 1 else 0.0
    dips, properties = signal.find_peaks(-trace.absorption, prominence=0)
    depth: float = 0.0
    for index, prominence in zip(dips, properties["prominences"]):
        if region[0] <= trace.deltas[index] <= region[1]:
            depth = max(depth, float(prominence))
    return len(inside), depth, splitting


def _feature_deltas(table: PeakTable, photons: int) -> typing.List[float]:
    peaks: typing.Tuple[Peak, ...] = table.of_photons(photons)
    if not peaks:
        return []
    strongest: float = max(p.weight for p in peaks)
    return [
        p.delta
        for p in peaks
        if not p.cancelled and p.weight > INTERFERENCE_EPS * strongest and abs(p.delta) >= ZERO_DETUNING
    ]


def fit_exponent(x: typing.Sequence[float], y: typing.Sequence[float]) -> typing.Optional[float]:
    """
    Slope of ``log y`` against ``log x``; None with fewer than two positive
    pairs.
    """
    pairs: typing.List[typing.Tuple[float, float]] = [(a, b) for a, b in zip(x, y) if a > 0 and b > 0]
    if len(pairs) < 2:
        return None
    logs: np.ndarray = np.log(np.array(pairs))
    return float(np.polyfit(logs[:, 0], logs[:, 1], 1)[0])


def _per_intensity(
    system: TransitionSystem, info: RunProperty, probe_rabi: float, deltas: typing.Sequence[float]
) -> typing.Dict[float, float]:
    trace: SpectrumTrace = spectrum(
        system,
        probe_rabi,
        deltas,
        method=info.method,
        harmonics=info.harmonics,
        max_harmonics=info.max_harmonics,
        convergence_tol=info.convergence_tol,
        normalization=Normalization.PerIntensity,
        max_workers=info.max_workers,
    )
    return {float(d): float(a) for d, a in zip(trace.deltas, trace.absorption)}


def probe_scaling(
    system: TransitionSystem, info: RunProperty, probe_values: typing.Sequence[float]
) -> ProbeScaling:
    """
    Oracle absorption at the predicted peaks against probe strength, per unit
    probe intensity.

    The two-photon height at one probe strength is the summed magnitude of
    the absorption change at every predicted two-photon peak relative to a
    weak probe of ``WEAK_PROBE_RABI``. Processes absorbing two probe photons
    make it grow as ``probe_rabi ** 2``. The one-photon height is the mean
    absorption at the predicted one-photon peaks, which stays flat.
    """
    prediction: Prediction = predict(system, info)
    two_photon: typing.List[float] = _feature_deltas(prediction.table, 2)
    one_photon: typing.List[float] = _feature_deltas(prediction.table, 1)
    deltas: typing.List[float] = [float(d) for d in np.unique(two_photon + one_photon)]
    if not deltas:
        _logger.warning("{} has no predicted peaks to follow against probe strength".format(system.system_id))
        rows: typing.Tuple[ProbeScalingRow, ...] = tuple(ProbeScalingRow(p, 0.0, 0.0) for p in sorted(probe_values))
        return ProbeScaling(rows=rows, two_photon_deltas=(), one_photon_deltas=(), exponent=None)

    reference: typing.Dict[float, float] = _per_intensity(system, info, WEAK_PROBE_RABI, deltas)
    scan: typing.List[ProbeScalingRow] = []
    for probe_rabi in sorted(probe_values):
        values: typing.Dict[float, float] = _per_intensity(system, info, probe_rabi, deltas)
        two_photon_height: float = sum(abs(values[d] - reference[d]) for d in two_photon)
        one_photon_height: float = float(np.mean([values[d] for d in one_photon])) if one_photon else 0.0
        scan.append(ProbeScalingRow(probe_rabi, two_photon_height, one_photon_height))

    exponent: typing.Optional[float] = fit_exponent(
        [r.probe_rabi for r in scan], [r.two_photon_height for r in scan]
    )
    _logger.info(
        "Probe scan of {} at omega_c={}: two-photon exponent {}".format(
            system.system_id, system.omega_c_rabi, exponent
        )
    )
    return ProbeScaling(
        rows=tuple(scan),
        two_photon_deltas=tuple(two_photon),
        one_photon_deltas=tuple(one_photon),
        exponent=exponent,
    )


def _sweep_point(info: RunProperty, omega_c_rabi: float) -> typing.Tuple[SweepRow, SpectrumTrace]:
    system: TransitionSystem = build_from_property(info, omega_c_rabi)
    prediction: Prediction = predict(system, info)
    trace: SpectrumTrace = oracle_trace(system, info)
    tolerance: float = concordance_tolerance(info.gamma, omega_c_rabi)
    count, depth, splitting = central_structure(
        trace, detect_peaks(trace, info.min_prominence), central_region(prediction, tolerance)
    )
    omega_ref: float = reference_splitting(prediction)
    row: SweepRow = SweepRow(
        omega_c_rabi=omega_c_rabi,
        central_peak_count=count,
        dip_depth=depth,
        splitting=splitting,
        reference_splitting=omega_ref,
        regime=intensity_regime(omega_ref, info.gamma),
    )
    _logger.info(
        "Sweep point omega_c={}: {} central peaks, splitting {:.4g}, {} intensity".format(
            omega_c_rabi, count, splitting, row.regime.value
        )
    )
    return row, trace


def run_sweep(info: RunProperty) -> SweepSummary:
    """
    Oracle spectra over ``sweep_values`` and a summary locating the coupling
    strength at which the central two-photon peak breaks up.
    With ``probe_sweep_values`` set, a probe-power scan at the configured
    coupling follows, see :func:`probe_scaling`.
    """
    directory: str = _prepare_output(info)
    values: typing.List[float] = list(info.sweep_values or [])
    rows: typing.List[SweepRow] = []
    spectra: typing.List[str] = []
    for index, omega_c_rabi in enumerate(values):
        row, trace = _sweep_point(info, omega_c_rabi)
        rows.append(row)
        name: str = "spectrum_{:03d}.csv".format(index)
        spectra.append(name)
        _write_spectrum(directory, name, trace, info)

    ordered: typing.List[SweepRow] = sorted(rows, key=lambda r: r.omega_c_rabi)
    threshold: typing.Optional[float] = next((r.omega_c_rabi for r in ordered if r.central_peak_count > 1), None)
    write_csv(
        directory,
        SWEEP_FILE,
        ("omega_c_rabi", "central_peak_count", "dip_depth", "splitting", "reference_splitting", "regime"),
        (
            [r.omega_c_rabi, r.central_peak_count, r.dip_depth, r.splitting, r.reference_splitting, r.regime.value]
            for r in rows
        ),
    )
    report: typing.Dict[str, typing.Any] = {
        "mode": RunMode.Sweep.value,
        "system": build_from_property(info).system_id,
        "breakup_threshold": threshold,
        "spectra": spectra,
        "rows": [
            {
                "omega_c_rabi": r.omega_c_rabi,
                "central_peak_count": r.central_peak_count,
                "dip_depth": r.dip_depth,
                "splitting": r.splitting,
                "reference_splitting": r.reference_splitting,
                "regime": r.regime.value,
            }
            for r in rows
        ],
    }
    scaling: typing.Optional[ProbeScaling] = None
    if info.probe_sweep_values:
        scaling = probe_scaling(build_from_property(info), info, info.probe_sweep_values)
        write_csv(
            directory,
            PROBE_SCALING_FILE,
            ("probe_rabi", "two_photon_height", "one_photon_height"),
            ([r.probe_rabi, r.two_photon_height, r.one_photon_height] for r in scaling.rows),
        )
        report["probe_scaling"] = scaling.as_report()
    write_json(directory, REPORT_FILE, _stamp(report, info))
    _logger.info("Sweep of {} points written to {}, break-up threshold {}".format(len(rows), directory, threshold))
    return SweepSummary(rows=tuple(rows), breakup_threshold=threshold, probe_scaling=scaling)


def run(info: RunProperty) -> typing.Any:
    """
    Dispatches on ``info.mode``.
    """
    if info.mode is RunMode.Analyze:
        return run_analyze(info)
    if info.mode is RunMode.Spectrum:
        return run_spectrum(info)
    if info.mode is RunMode.Compare:
        return run_compare(info)
    return run_sweep(info)
