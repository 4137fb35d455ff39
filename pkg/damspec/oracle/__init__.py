from .floquet import (
    FloquetSolution,
    absorption_at,
    degenerate_absorption,
    floquet_solve,
    phase_average,
    solve_converged,
    static_solve,
)
from .liouvillian import liouvillian, stationary_state
from .spectrum import find_peaks, spectrum
from .time_domain import averaging_window, time_domain_solve
