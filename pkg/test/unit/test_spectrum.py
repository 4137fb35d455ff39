import sys
import typing

import numpy as np  # type: ignore
import pytest  # type: ignore

from damspec import DomainError, SolverError, SolverMethod, SpectrumTrace, build_system, find_peaks, spectrum


def lorentzian(deltas: np.ndarray, center: float, half_width: float = 0.1) -> np.ndarray:
    return half_width ** 2 / ((deltas - center) ** 2 + half_width ** 2)


def two_level_absorption(delta: float, probe_rabi: float) -> float:
    return 0.25 / (delta ** 2 + 0.25 + probe_rabi ** 2 / 2)


def test_spectrum_of_zero_to_one():
    system = build_system(0, 1, 0.0)
    grid: typing.List[float] = [-1.0, 0.0, 0.5]
    trace: SpectrumTrace = spectrum(system, 0.1, grid)
    assert list(trace.deltas) == grid
    for delta, value in zip(trace.deltas, trace.absorption):
        assert value == pytest.approx(two_level_absorption(delta, 0.1), rel=1e-8)
    assert trace.meta["system"] == "Fg=0->Fe=1"
    assert trace.meta["method"] == "floquet"
    assert trace.meta["normalization"] == "per_intensity"
    assert trace.meta["max_harmonics_used"] == 8
    assert trace.meta["probe_rabi"] == 0.1


def test_threaded_spectrum_is_identical():
    system = build_system(2, 1, 1.0)
    grid: np.ndarray = np.linspace(-1.0, 1.0, 9)
    serial: SpectrumTrace = spectrum(system, 0.05, grid)
    threaded: SpectrumTrace = spectrum(system, 0.05, grid, max_workers=3)
    assert np.allclose(serial.absorption, threaded.absorption, rtol=1e-12, atol=0)


def test_time_domain_metadata():
    trace: SpectrumTrace = spectrum(build_system(0, 1, 0.0), 0.1, [0.5], method=SolverMethod.TimeDomain)
    assert trace.meta["method"] == "time"
    assert trace.meta["t_transient"] == 50.0
    assert "harmonics" not in trace.meta


@pytest.mark.parametrize("grid, workers", [([], 1), ([0.1, 0.2], 0)])
def test_spectrum_rejects_invalid_arguments(grid, workers):
    with pytest.raises(DomainError):
        spectrum(build_system(0, 1, 0.0), 0.1, grid, max_workers=workers)


def test_spectrum_rejects_unordered_grid():
    with pytest.raises(DomainError):
        spectrum(build_system(0, 1, 0.0), 0.1, [0.5, 0.1, 0.2])


def test_solver_error_carries_failing_detuning(mocker):
    mocker.patch.object(sys.modules["damspec.oracle.spectrum"], "solve_converged", side_effect=SolverError("Singular block"))
    with pytest.raises(SolverError) as excinfo:
        spectrum(build_system(0, 1, 0.0), 0.1, [0.25, 0.5])
    assert excinfo.value.delta == 0.25
    assert excinfo.value.reason == "Singular block"
    assert "delta=0.25" in str(excinfo.value)


def test_solver_error_keeps_existing_detuning(mocker):
    mocker.patch.object(sys.modules["damspec.oracle.spectrum"], "solve_converged", side_effect=SolverError("Singular block", delta=9.0))
    with pytest.raises(SolverError) as excinfo:
        spectrum(build_system(0, 1, 0.0), 0.1, [0.25])
    assert excinfo.value.delta == 9.0


def test_find_peaks_refines_position():
    deltas: np.ndarray = np.linspace(-2.0, 2.0, 401)
    trace: SpectrumTrace = SpectrumTrace(deltas=deltas, absorption=lorentzian(deltas, 0.1234))
    peaks = find_peaks(trace, 1e-3)
    assert len(peaks) == 1
    assert peaks[0].delta == pytest.approx(0.1234, abs=2e-3)
    assert peaks[0].height >= float(np.max(trace.absorption))
    assert peaks[0].prominence > 0.9


def test_find_peaks_resolves_doublet():
    deltas: np.ndarray = np.linspace(-2.0, 2.0, 401)
    trace: SpectrumTrace = SpectrumTrace(
        deltas=deltas, absorption=lorentzian(deltas, -0.5) + lorentzian(deltas, 0.5)
    )
    assert [round(p.delta, 2) for p in find_peaks(trace, 1e-3)] == [-0.5, 0.5]


def test_find_peaks_applies_prominence_threshold():
    deltas: np.ndarray = np.linspace(-2.0, 2.0, 401)
    trace: SpectrumTrace = SpectrumTrace(deltas=deltas, absorption=lorentzian(deltas, 0.0) + 1.0)
    assert find_peaks(trace, 10.0) == []


def test_find_peaks_on_flat_and_short_traces():
    assert find_peaks(SpectrumTrace(deltas=np.linspace(0, 1, 11), absorption=np.ones(11)), 0.0) == []
    assert find_peaks(SpectrumTrace(deltas=[0.0, 1.0], absorption=[1.0, 0.0]), 0.0) == []
