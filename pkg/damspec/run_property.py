import math
import typing

from damspec.config import (
    DEFAULT_CONVERGENCE_TOL,
    DEFAULT_GAMMA,
    DEFAULT_GRID,
    DEFAULT_HARMONICS,
    DEFAULT_MAX_HARMONICS,
    DEFAULT_MERGE_TOLERANCE,
    DEFAULT_MIN_PROMINENCE,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_PROBE_RABI,
    DEFAULT_REFERENCE_OMEGA_C,
    DEFAULT_THETA_DEGREES,
    DEFAULT_TRAPPED_THRESHOLD,
    DEFAULT_TWO_PHOTON_HALF_WIDTH,
    Normalization,
    RunMode,
    SolverMethod,
)


class RunProperty:
    def __init__(self: "RunProperty", **kwargs):
        """
        Initialize a RunProperty object holding every run setting at its default.
        """
        if not kwargs:
            # Ground and excited total angular momenta. Required.
            self.F_g: typing.Optional[float] = None
            self.F_e: typing.Optional[float] = None
            # Reduced Rabi frequency of the pi-polarized coupling field, units of gamma. Required.
            self.omega_c_rabi: typing.Optional[float] = None
            # Excited-state decay rate; every other rate is expressed in units of it.
            self.gamma: float = DEFAULT_GAMMA
            # Angle between probe and coupling linear polarizations, in degrees.
            self.theta_degrees: float = DEFAULT_THETA_DEGREES
            # Global phase of the coupling laser, in radians. No observable depends on it.
            self.coupling_phase: float = 0.0
            # Rate of the external isotropic repump channel.
            self.loss_rate: float = 0.0
            # Probe Rabi frequency for a unit dipole element.
            self.probe_rabi: float = DEFAULT_PROBE_RABI
            self.mode: RunMode = RunMode.Analyze
            # Coupling Rabi frequencies of a sweep run.
            self.sweep_values: typing.Optional[typing.List[float]] = None
            # Probe Rabi frequencies of the probe-power scan of a sweep run.
            self.probe_sweep_values: typing.Optional[typing.List[float]] = None
            self.output_dir: str = DEFAULT_OUTPUT_DIR

            # Probe detuning grid
            self.grid_min: float = DEFAULT_GRID[0]
            self.grid_max: float = DEFAULT_GRID[1]
            self.grid_points: int = DEFAULT_GRID[2]

            # Oracle solver
            self.method: SolverMethod = SolverMethod.Floquet
            # Starting harmonic truncation order, doubled until converged.
            self.harmonics: int = DEFAULT_HARMONICS
            self.max_harmonics: int = DEFAULT_MAX_HARMONICS
            self.convergence_tol: float = DEFAULT_CONVERGENCE_TOL
            self.normalization: Normalization = Normalization.PerIntensity
            # Threads solving grid points concurrently.
            self.max_workers: int = 1

            # Pathway engine
            # Ground sublevels below this population do not start pathways.
            self.population_threshold: float = DEFAULT_TRAPPED_THRESHOLD
            # Resonances closer than this (units of gamma) merge into one peak.
            self.merge_tolerance: float = DEFAULT_MERGE_TOLERANCE
            self.two_photon_half_width: float = DEFAULT_TWO_PHOTON_HALF_WIDTH
            # Coupling strength at which break-up predictions are evaluated.
            self.reference_omega_c: float = DEFAULT_REFERENCE_OMEGA_C

            # Output
            # Peak prominence threshold, relative to the maximum of the trace.
            self.min_prominence: float = DEFAULT_MIN_PROMINENCE

        else:
            for k, v in kwargs.items():
                setattr(self, k, v)

    def __str__(self: "RunProperty") -> str:
        rp: typing.Dict[str, typing.Any] = dict(self.__dict__)
        rp["theta"] = self.theta
        return str(rp)

    def put(self: "RunProperty", key: str, value: typing.Any) -> None:
        """
        Sets the value of the specified attribute if the value provided is not None.
        """
        if value is not None:
            setattr(self, key, value)

    @property
    def theta(self: "RunProperty") -> float:
        """
        Polarization angle in radians.
        """
        return math.radians(self.theta_degrees)

    @property
    def grid(self: "RunProperty") -> typing.Tuple[float, float, int]:
        return self.grid_min, self.grid_max, self.grid_points

    def as_report(self: "RunProperty") -> typing.Dict[str, typing.Any]:
        """
        Every setting with enums rendered by value, for the metadata sidecars.
        """
        report: typing.Dict[str, typing.Any] = {}
        for k, v in sorted(self.__dict__.items()):
            report[k] = v.value if hasattr(v, "value") else v
        return report
