import typing
from enum import Enum, IntEnum


class PathwayClass(IntEnum):
    """
    Multiphoton probe transition classes. The integer value fixes the order in
    which pathways are reported, one-photon processes first.
    """

    OnePhotonBareDressed = 0
    OnePhotonBareBare = 1
    TwoPhotonBareBare = 2
    TwoPhotonBareDressed = 3

    @classmethod
    def list(cls) -> typing.List[int]:
        return list(map(lambda p: p.value, cls))  # type: ignore

    @classmethod
    def get_name(cls, i: int) -> str:
        try:
            return PathwayClass(i).name
        except ValueError:
            return str(i)

    @property
    def photons(self: "PathwayClass") -> int:
        return 1 if self < PathwayClass.TwoPhotonBareBare else 2

    @property
    def short_name(self: "PathwayClass") -> str:
        return _short_names[self]


_short_names: typing.Dict[PathwayClass, str] = {
    PathwayClass.OnePhotonBareDressed: "1BD",
    PathwayClass.OnePhotonBareBare: "1BB",
    PathwayClass.TwoPhotonBareBare: "2BB",
    PathwayClass.TwoPhotonBareDressed: "2BD",
}


class Interference(Enum):
    Constructive = "constructive"
    Destructive = "destructive"
    Mixed = "mixed"
    NotApplicable = "not_applicable"


class EIARegime(Enum):
    """
    Normal EIA follows from spontaneous transfer of coherence and needs
    F_e = F_g + 1, a closed transition and F_g > 0. Anomalous EIA appears in
    trapping systems with F_e = F_g or F_e = F_g - 1.
    """

    Normal = "normal"
    Anomalous = "anomalous"


class SolverMethod(Enum):
    Floquet = "floquet"
    TimeDomain = "time"

    @staticmethod
    def list() -> typing.List[str]:
        return list(map(lambda m: m.value, SolverMethod))


class Normalization(Enum):
    # absorbed power divided by probe intensity (probe_rabi ** 2)
    PerIntensity = "per_intensity"
    Raw = "raw"

    @staticmethod
    def list() -> typing.List[str]:
        return list(map(lambda n: n.value, Normalization))


class RunMode(Enum):
    Analyze = "analyze"
    Spectrum = "spectrum"
    Compare = "compare"
    Sweep = "sweep"

    @staticmethod
    def list() -> typing.List[str]:
        return list(map(lambda m: m.value, RunMode))


class Verdict(Enum):
    # Concordant iff every visible two-photon prediction has an oracle peak
    Concordant = "Concordant"
    Discrepant = "Discrepant"


class IntensityRegime(Enum):
    """
    Coupling intensity relative to gamma, judged on the splitting of the
    doublet that sets the central two-photon structure.
    """

    Low = "low"
    Intermediate = "intermediate"
    High = "high"


class ExitCode(IntEnum):
    SUCCESS = 0
    CONFIG_ERROR = 2
    SOLVER_ERROR = 3
    DISCREPANT = 4


# numerical floors and tolerances, all in units of the decay rate gamma
UNITARITY_TOL: float = 1e-12
COUPLING_ZERO_TOL: float = 1e-14
NULL_SPACE_RTOL: float = 1e-10
DIVERGENT_DENOMINATOR: float = 1e-6
INTERFERENCE_EPS: float = 1e-9
POPULATION_FLOOR: float = -1e-12

DEFAULT_GAMMA: float = 1.0
DEFAULT_THETA_DEGREES: float = 90.0
DEFAULT_PROBE_RABI: float = 0.05
DEFAULT_TRAPPED_THRESHOLD: float = 1e-3
DEFAULT_MERGE_TOLERANCE: float = 0.05
DEFAULT_ONE_PHOTON_HALF_WIDTH: float = 0.5
DEFAULT_TWO_PHOTON_HALF_WIDTH: float = 0.25
DEFAULT_REFERENCE_OMEGA_C: float = 10.0
DEFAULT_HARMONICS: int = 4
DEFAULT_MAX_HARMONICS: int = 64
DEFAULT_CONVERGENCE_TOL: float = 1e-8
DEFAULT_MIN_PROMINENCE: float = 1e-4
DEFAULT_GRID: typing.Tuple[float, float, int] = (-3.0, 3.0, 801)
DEFAULT_OUTPUT_DIR: str = "damspec-out"

# concordance tolerance between predicted and oracle peaks: max(abs, rel * omega_c)
CONCORDANCE_ABS_TOL: float = 0.1
CONCORDANCE_REL_TOL: float = 0.05

TIME_DOMAIN_RTOL: float = 1e-10
TIME_DOMAIN_ATOL: float = 1e-12
MIN_TRANSIENT: float = 50.0
DEFAULT_STATIC_WINDOW: float = 200.0
# relative probe-coupling phases averaged over at zero detuning
DEFAULT_PHASE_SAMPLES: int = 16
# reference probe strength standing in for the linear-response limit
WEAK_PROBE_RABI: float = 1e-3

CSV_SIGNIFICANT_DIGITS: int = 12

# fixed output file names, one directory per run
PEAKS_FILE: str = "peaks.csv"
SPECTRUM_FILE: str = "spectrum.csv"
PATHWAYS_FILE: str = "pathways.json"
REPORT_FILE: str = "report.json"
DRESSED_BASIS_FILE: str = "dressed_basis.json"
POPULATIONS_FILE: str = "populations.json"
SYNTHESIZED_FILE: str = "synthesized.csv"
SWEEP_FILE: str = "sweep.csv"
PROBE_SCALING_FILE: str = "probe_scaling.csv"
