"""
Angular-momentum coupling coefficients between Zeeman sublevels.

Phase convention: Condon-Shortley throughout. Dipole matrix elements are
expressed relative to a reduced matrix element of 1, so

    <F_e m_e| d_q |F_g m_g>  =  <F_g m_g; 1 q | F_e m_e>

with ``q = m_e - m_g`` the spherical component of the absorbed photon. Only
relative phases of these elements are observable downstream.
"""
import logging
import math
import typing
from dataclasses import dataclass
from fractions import Fraction

import numpy as np  # type: ignore

from damspec.error import DomainError
from damspec.objects import Level, SublevelRef

_logger: logging.Logger = logging.getLogger(__name__)

QuantumNumber = typing.Union[int, float, Fraction]


def _doubled(value: QuantumNumber, name: str) -> int:
    """
    Returns ``2 * value`` as an int, raising :class:`DomainError` when value is
    not an integer or half-integer.
    """
    twice: float = 2 * float(value)
    rounded: int = int(round(twice))
    if abs(twice - rounded) > 1e-9:
        raise DomainError("{name}={value} is not an integer or half-integer".format(name=name, value=value))
    return rounded


def magnetic_numbers(F: QuantumNumber) -> typing.List[float]:
    """
    The magnetic quantum numbers ``-F, -F + 1, ..., F`` of a level.
    """
    twice_f: int = _doubled(F, "F")
    if twice_f < 0:
        raise DomainError("F={} must be non-negative".format(F))
    return [(-twice_f + 2 * k) / 2 for k in range(twice_f + 1)]


def _exact_3j(
    tj1: int, tj2: int, tj3: int, tm1: int, tm2: int, tm3: int
) -> typing.Tuple[int, Fraction]:
    """
    Racah sum formula on doubled arguments. Returns ``(sign, square)`` such
    that the 3-j symbol equals ``sign * sqrt(square)`` with square an exact
    rational number.
    """
    if tm1 + tm2 + tm3 != 0:
        return 0, Fraction(0)
    if tj3 > tj1 + tj2 or tj3 < abs(tj1 - tj2):
        return 0, Fraction(0)

    f = math.factorial
    # all of the following are integers once the arguments passed validation
    j1pj2mj3: int = (tj1 + tj2 - tj3) // 2
    j1mj2pj3: int = (tj1 - tj2 + tj3) // 2
    mj1pj2pj3: int = (-tj1 + tj2 + tj3) // 2
    big: int = (tj1 + tj2 + tj3) // 2 + 1

    triangle: Fraction = Fraction(f(j1pj2mj3) * f(j1mj2pj3) * f(mj1pj2pj3), f(big))
    norm: int = (
        f((tj1 + tm1) // 2)
        * f((tj1 - tm1) // 2)
        * f((tj2 + tm2) // 2)
        * f((tj2 - tm2) // 2)
        * f((tj3 + tm3) // 2)
        * f((tj3 - tm3) // 2)
    )

    k_min: int = max(0, (tj2 - tj3 - tm1) // 2, (tj1 - tj3 + tm2) // 2)
    k_max: int = min(j1pj2mj3, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    racah_sum: Fraction = Fraction(0)
    for k in range(k_min, k_max + 1):
        denominator: int = (
            f(k)
            * f((tj3 - tj2 + tm1) // 2 + k)
            * f((tj3 - tj1 - tm2) // 2 + k)
            * f(j1pj2mj3 - k)
            * f((tj1 - tm1) // 2 - k)
            * f((tj2 + tm2) // 2 - k)
        )
        racah_sum += Fraction((-1) ** k, denominator)

    if racah_sum == 0:
        return 0, Fraction(0)

    phase: int = -1 if ((tj1 - tj2 - tm3) // 2) % 2 else 1
    sign: int = phase if racah_sum > 0 else -phase
    return sign, triangle * norm * racah_sum * racah_sum


def _check_pair(tj: int, tm: int, index: int) -> None:
    if tj < 0:
        raise DomainError("j{} must be non-negative".format(index))
    if (tj - tm) % 2:
        raise DomainError("j{i} and m{i} must both be integers or both half-integers".format(i=index))
    if abs(tm) > tj:
        raise DomainError("|m{i}| must not exceed j{i}".format(i=index))


def wigner3j(
    j1: QuantumNumber,
    j2: QuantumNumber,
    j3: QuantumNumber,
    m1: QuantumNumber,
    m2: QuantumNumber,
    m3: QuantumNumber,
) -> float:
    """
    Wigner 3-j symbol evaluated with exact rational arithmetic.

    Parameters
    ----------
    j1, j2, j3 : half-integer
        Angular momenta.
    m1, m2, m3 : half-integer
        Projections, ``|m_k| <= j_k``.

    Returns
    -------
    The value of the symbol, zero when the triangle rule or ``m1 + m2 + m3 = 0`` fails: float
    """
    tj: typing.List[int] = [_doubled(j1, "j1"), _doubled(j2, "j2"), _doubled(j3, "j3")]
    tm: typing.List[int] = [_doubled(m1, "m1"), _doubled(m2, "m2"), _doubled(m3, "m3")]
    for i in range(3):
        _check_pair(tj[i], tm[i], i + 1)
    if sum(tj) % 2:
        raise DomainError("j1 + j2 + j3 must be an integer")

    sign, square = _exact_3j(tj[0], tj[1], tj[2], tm[0], tm[1], tm[2])
    if sign == 0:
        return 0.0
    return sign * math.sqrt(square)


def clebsch_gordan(
    j1: QuantumNumber,
    m1: QuantumNumber,
    j2: QuantumNumber,
    m2: QuantumNumber,
    J: QuantumNumber,
    M: QuantumNumber,
) -> float:
    """
    Clebsch-Gordan coefficient ``<j1 m1; j2 m2 | J M>`` in the Condon-Shortley
    convention, obtained from the 3-j symbol without leaving exact arithmetic.
    """
    tj1, tj2, tJ = _doubled(j1, "j1"), _doubled(j2, "j2"), _doubled(J, "J")
    tm1, tm2, tM = _doubled(m1, "m1"), _doubled(m2, "m2"), _doubled(M, "M")
    _check_pair(tj1, tm1, 1)
    _check_pair(tj2, tm2, 2)
    _check_pair(tJ, tM, 3)
    if (tj1 + tj2 + tJ) % 2:
        raise DomainError("j1 + j2 + J must be an integer")
    if tm1 + tm2 != tM:
        return 0.0

    sign, square = _exact_3j(tj1, tj2, tJ, tm1, tm2, -tM)
    if sign == 0:
        return 0.0
    if ((tj1 - tj2 + tM) // 2) % 2:
        sign = -sign
    return sign * math.sqrt(square * (tJ + 1))


def check_transition(F_g: QuantumNumber, F_e: QuantumNumber) -> None:
    """
    Validates that ``F_g -> F_e`` is an electric-dipole allowed manifold pair.
    """
    tg: int = _doubled(F_g, "F_g")
    te: int = _doubled(F_e, "F_e")
    if tg < 0 or te < 0:
        raise DomainError("F_g={} and F_e={} must be non-negative".format(F_g, F_e))
    if abs(te - tg) > 2:
        raise DomainError("|F_e - F_g| must not exceed 1, got F_g={} F_e={}".format(F_g, F_e))
    if (te - tg) % 2:
        raise DomainError("F_g={} and F_e={} must differ by an integer".format(F_g, F_e))
    if tg == 0 and te == 0:
        raise DomainError("F_g = F_e = 0 has no dipole transition")


@dataclass(frozen=True)
class DipoleElement:
    """
    Relative dipole matrix element between a ground and an excited sublevel.
    ``q`` is the raw projection difference ``m_e - m_g``; it only leaves
    ``{-1, 0, +1}`` for zero elements.
    """

    ground: SublevelRef
    excited: SublevelRef
    q: int
    value: float

    @property
    def allowed(self: "DipoleElement") -> bool:
        return self.value != 0.0


def dipole_element(F_g: QuantumNumber, m_g: QuantumNumber, F_e: QuantumNumber, m_e: QuantumNumber) -> DipoleElement:
    """
    Dipole matrix element ``<F_e m_e| d_q |F_g m_g>`` with the reduced matrix
    element set to 1.

    Returns the zero element, not an error, when ``|q| > 1`` or when a
    projection lies outside its level.
    """
    check_transition(F_g, F_e)
    tq: int = _doubled(m_e, "m_e") - _doubled(m_g, "m_g")
    if tq % 2:
        raise DomainError("m_g={} and m_e={} must differ by an integer".format(m_g, m_e))
    q: int = tq // 2
    ground: SublevelRef = SublevelRef(Level.Ground, float(m_g))
    excited: SublevelRef = SublevelRef(Level.Excited, float(m_e))

    if abs(q) > 1 or abs(float(m_g)) > float(F_g) or abs(float(m_e)) > float(F_e):
        _logger.debug("Zero dipole element {} -> {} (q={})".format(ground, excited, q))
        return DipoleElement(ground=ground, excited=excited, q=q, value=0.0)

    value: float = clebsch_gordan(F_g, m_g, 1, q, F_e, m_e)
    return DipoleElement(ground=ground, excited=excited, q=q, value=value)


def dipole_matrix(F_g: QuantumNumber, F_e: QuantumNumber, q: int) -> np.ndarray:
    """
    Spherical component ``q`` of the dipole raising operator as a
    ``(2F_e + 1) x (2F_g + 1)`` matrix, rows indexed by excited sublevels.
    """
    ground_ms: typing.List[float] = magnetic_numbers(F_g)
    excited_ms: typing.List[float] = magnetic_numbers(F_e)
    matrix: np.ndarray = np.zeros((len(excited_ms), len(ground_ms)))
    for col, m_g in enumerate(ground_ms):
        m_e: float = m_g + q
        if abs(m_e) > float(F_e):
            continue
        row: int = excited_ms.index(m_e)
        matrix[row, col] = dipole_element(F_g, m_g, F_e, m_e).value
    return matrix


def decay_branching(
    F_e: QuantumNumber, m_e: QuantumNumber, F_g: QuantumNumber
) -> typing.List[typing.Tuple[float, float]]:
    """
    Spontaneous-emission branching of ``|F_e m_e>`` into the ground sublevels
    reachable by one photon, normalized so the weights sum to 1.
    """
    check_transition(F_g, F_e)
    entries: typing.List[typing.Tuple[float, float]] = []
    for m_g in magnetic_numbers(F_g):
        if abs(float(m_e) - m_g) > 1:
            continue
        entries.append((m_g, dipole_element(F_g, m_g, F_e, m_e).value ** 2))

    total: float = sum(weight for _, weight in entries)
    if total == 0.0:
        raise DomainError("|F_e={} m_e={}> has no decay channel into F_g={}".format(F_e, m_e, F_g))
    return [(m_g, weight / total) for m_g, weight in entries]
