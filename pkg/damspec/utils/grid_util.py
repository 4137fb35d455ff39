import numpy as np  # type: ignore

from damspec.error import DomainError


def detuning_grid(grid_min: float, grid_max: float, points: int) -> np.ndarray:
    """
    Evenly spaced probe detunings, both ends included.
    """
    if not grid_min < grid_max:
        raise DomainError("grid min={} must be below max={}".format(grid_min, grid_max))
    if points < 3:
        raise DomainError("grid needs at least 3 points, got {}".format(points))
    return np.linspace(grid_min, grid_max, points)
