import typing
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np  # type: ignore

from damspec.error import DomainError


class Level(Enum):
    Ground = "g"
    Excited = "e"


def format_quantum_number(value: float) -> str:
    """
    Renders an integer or half-integer quantum number, e.g. ``2``, ``-1/2``.
    """
    return str(Fraction(value).limit_denominator(2))


@dataclass(frozen=True)
class SublevelRef:
    """
    A Zeeman sublevel ``|m>`` of the ground level or ``|m'>`` of the excited
    level.
    """

    level: Level
    m: float

    @property
    def sort_key(self: "SublevelRef") -> typing.Tuple[int, float]:
        # ground sublevels first, each level ordered by m
        return (0 if self.level is Level.Ground else 1, self.m)

    @property
    def is_ground(self: "SublevelRef") -> bool:
        return self.level is Level.Ground

    def __str__(self: "SublevelRef") -> str:
        prime: str = "" if self.is_ground else "'"
        return "|{m}{prime}>".format(m=format_quantum_number(self.m), prime=prime)


@dataclass(frozen=True, eq=False)
class SpectrumTrace:
    """
    Probe absorption sampled on a detuning grid (units of gamma), either from
    the optical Bloch oracle or synthesized from a peak table.
    """

    deltas: np.ndarray
    absorption: np.ndarray
    meta: typing.Dict[str, typing.Any] = field(default_factory=dict)

    def __post_init__(self: "SpectrumTrace") -> None:
        deltas: np.ndarray = np.array(self.deltas, dtype=float)
        absorption: np.ndarray = np.array(self.absorption, dtype=float)
        if deltas.ndim != 1 or deltas.shape != absorption.shape:
            raise DomainError(
                "deltas and absorption must be one dimensional and of equal length, got {} and {}".format(
                    deltas.shape, absorption.shape
                )
            )
        if deltas.size > 1 and not np.all(np.diff(deltas) > 0):
            raise DomainError("deltas must be strictly increasing")
        deltas.setflags(write=False)
        absorption.setflags(write=False)
        object.__setattr__(self, "deltas", deltas)
        object.__setattr__(self, "absorption", absorption)

    def __len__(self: "SpectrumTrace") -> int:
        return int(self.deltas.size)


@dataclass(frozen=True)
class DetectedPeak:
    delta: float
    height: float
    prominence: float
