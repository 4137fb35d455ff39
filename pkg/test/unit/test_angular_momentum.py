import math
import typing

import numpy as np  # type: ignore
import pytest  # type: ignore

from damspec import DomainError, clebsch_gordan, decay_branching, dipole_element, dipole_matrix, wigner3j
from damspec.angular_momentum import check_transition, magnetic_numbers

wigner3j_data: typing.List[typing.Tuple[typing.Tuple[float, ...], float]] = [
    ((1, 1, 0, 0, 0, 0), -1 / math.sqrt(3)),
    ((2, 1, 1, 0, 0, 0), math.sqrt(2 / 15)),
    ((0.5, 0.5, 1, 0.5, -0.5, 0), 1 / math.sqrt(6)),
    ((1, 1, 1, 0, 0, 0), 0.0),  # odd J with all m = 0
    ((1, 1, 3, 0, 0, 0), 0.0),  # triangle rule
    ((1, 1, 2, 1, 1, -1), 0.0),  # m sum
]


@pytest.mark.parametrize("_input", wigner3j_data)
def test_wigner3j_reference_values(_input):
    args, expected = _input
    assert wigner3j(*args) == pytest.approx(expected, abs=1e-15)


def test_wigner3j_cyclic_permutation_is_invariant():
    assert wigner3j(2, 1, 1, 0, 0, 0) == pytest.approx(wigner3j(1, 2, 1, 0, 0, 0), abs=1e-15)
    assert wigner3j(2, 1, 1, 0, 0, 0) == pytest.approx(wigner3j(1, 1, 2, 0, 0, 0), abs=1e-15)


wigner3j_error_data: typing.List[typing.Tuple[float, ...]] = [
    (1, 1, 0.3, 0, 0, 0),  # not a half-integer
    (1, 1, 0, 2, -2, 0),  # |m| > j
    (0.5, 0.5, 0.5, 0.5, -0.5, 0.5),  # j sum not an integer
    (1, 1, 1, 0.5, -0.5, 0),  # j and m of mixed parity
]


@pytest.mark.parametrize("_input", wigner3j_error_data)
def test_wigner3j_rejects_invalid_arguments(_input):
    with pytest.raises(DomainError):
        wigner3j(*_input)


clebsch_gordan_data: typing.List[typing.Tuple[typing.Tuple[float, ...], float]] = [
    ((1, 0, 1, 0, 0, 0), -1 / math.sqrt(3)),
    ((0.5, 0.5, 0.5, -0.5, 1, 0), 1 / math.sqrt(2)),
    ((0.5, 0.5, 0.5, -0.5, 0, 0), 1 / math.sqrt(2)),
    ((0.5, -0.5, 0.5, 0.5, 0, 0), -1 / math.sqrt(2)),
    ((1, 1, 1, -1, 2, 0), 1 / math.sqrt(6)),
    ((1, 0, 1, 0, 2, 0), math.sqrt(2 / 3)),
    ((1, 1, 1, 0, 2, 0), 0.0),
]


@pytest.mark.parametrize("_input", clebsch_gordan_data)
def test_clebsch_gordan_reference_values(_input):
    args, expected = _input
    assert clebsch_gordan(*args) == pytest.approx(expected, abs=1e-15)


pi_coupling_data: typing.List[typing.Tuple[float, float, typing.Dict[float, float]]] = [
    (2, 1, {-1: -math.sqrt(3 / 10), 0: -math.sqrt(2 / 5), 1: -math.sqrt(3 / 10)}),
    (2, 2, {-2: -2 / math.sqrt(6), -1: -1 / math.sqrt(6), 0: 0.0, 1: 1 / math.sqrt(6), 2: 2 / math.sqrt(6)}),
    (1, 1, {-1: -1 / math.sqrt(2), 0: 0.0, 1: 1 / math.sqrt(2)}),
]


@pytest.mark.parametrize("_input", pi_coupling_data)
def test_pi_coupling_coefficients(_input):
    F_g, F_e, expected = _input
    for m, value in expected.items():
        assert dipole_element(F_g, m, F_e, m).value == pytest.approx(value, abs=1e-14)


@pytest.mark.parametrize("j1", [0.5, 1, 1.5, 2])
def test_clebsch_gordan_orthonormality(j1):
    for J in [J for J in (j1 - 1, j1, j1 + 1) if J >= 0]:
        for J_prime in [J for J in (j1 - 1, j1, j1 + 1) if J >= 0]:
            for M in magnetic_numbers(min(J, J_prime)):
                overlap: float = sum(
                    clebsch_gordan(j1, m1, 1, M - m1, J, M) * clebsch_gordan(j1, m1, 1, M - m1, J_prime, M)
                    for m1 in magnetic_numbers(j1)
                    if abs(M - m1) <= 1
                )
                assert overlap == pytest.approx(1.0 if J == J_prime else 0.0, abs=1e-12)


@pytest.mark.parametrize(
    "F_g, F_e", [(1, 3), (0, 0), (1, 1.5), (-1, 0), (2, 0.5)]
)
def test_check_transition_rejects_forbidden_pairs(F_g, F_e):
    with pytest.raises(DomainError):
        check_transition(F_g, F_e)


def test_dipole_element_with_large_q_is_zero():
    element = dipole_element(2, -2, 2, 1)
    assert element.q == 3
    assert element.value == 0.0
    assert not element.allowed


def test_dipole_element_outside_level_is_zero():
    assert dipole_element(1, 2, 1, 2).value == 0.0


def test_dipole_element_carries_sublevels():
    element = dipole_element(1, 0, 2, 1)
    assert element.q == 1
    assert str(element.ground) == "|0>"
    assert str(element.excited) == "|1'>"
    assert element.allowed


def test_dipole_matrix_shape_and_selection_rule():
    block: np.ndarray = dipole_matrix(2, 1, 1)
    assert block.shape == (3, 5)
    # sigma+ from m_g = -2 reaches m_e = -1 only
    assert np.count_nonzero(block[:, 0]) == 1
    assert block[0, 0] != 0
    # m_g = 1, 2 have no sigma+ partner in F_e = 1
    assert not np.any(block[:, 3:])


@pytest.mark.parametrize("F_g, F_e", [(1, 2), (2, 1), (2, 2), (0.5, 1.5), (1, 0)])
def test_dipole_matrices_sum_to_identity_on_excited(F_g, F_e):
    closure: np.ndarray = sum(dipole_matrix(F_g, F_e, q) @ dipole_matrix(F_g, F_e, q).T for q in (-1, 0, 1))
    assert np.allclose(closure, np.eye(closure.shape[0]), atol=1e-12)


@pytest.mark.parametrize("F_g, F_e", [(1, 2), (2, 1), (2, 2), (1.5, 0.5)])
def test_decay_branching_sums_to_one(F_g, F_e):
    for m_e in magnetic_numbers(F_e):
        branching = decay_branching(F_e, m_e, F_g)
        assert sum(w for _, w in branching) == pytest.approx(1.0, abs=1e-12)
        assert all(abs(m_e - m_g) <= 1 for m_g, _ in branching)


def test_magnetic_numbers_half_integer():
    assert magnetic_numbers(1.5) == [-1.5, -0.5, 0.5, 1.5]


def test_magnetic_numbers_rejects_non_half_integer():
    with pytest.raises(DomainError):
        magnetic_numbers(0.7)
