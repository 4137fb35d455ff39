import logging

from damspec.angular_momentum import (
    DipoleElement,
    clebsch_gordan,
    decay_branching,
    dipole_element,
    dipole_matrix,
    wigner3j,
)
from damspec.config import (
    EIARegime,
    ExitCode,
    IntensityRegime,
    Interference,
    Normalization,
    PathwayClass,
    RunMode,
    SolverMethod,
    Verdict,
)
from damspec.config_helper import ConfigHelper
from damspec.dressed_engine import DressedBasis, DressedLabel, StateKind, dress, dressed_energy
from damspec.error import (
    ConfigError,
    ConvergenceError,
    DiscrepancyError,
    DomainError,
    Error,
    IntegrationError,
    SolverError,
)
from damspec.objects import DetectedPeak, Level, SpectrumTrace, SublevelRef
from damspec.optical_pumping import PopulationDistribution, dark_states, pump_steady_state
from damspec.oracle import (
    FloquetSolution,
    absorption_at,
    degenerate_absorption,
    find_peaks,
    floquet_solve,
    spectrum,
    time_domain_solve,
)
from damspec.pathway_engine import (
    Pathway,
    Peak,
    PeakTable,
    WidthPolicy,
    branch_amplitude,
    eia_regime,
    enumerate_pathways,
    peak_table,
    predict_breakup,
    synthesize_spectrum,
)
from damspec.run_property import RunProperty
from damspec.runner import CompareReport, run_analyze, run_compare, run_spectrum, run_sweep
from damspec.system_model import ProbeGeometry, TransitionSystem, build_system, polarization_components
from damspec.utils import PackageInfo

from .version import __version__

logging.getLogger(__name__).addHandler(logging.NullHandler())
_logger: logging.Logger = logging.getLogger(__name__)
