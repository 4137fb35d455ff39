import math
import typing

import numpy as np  # type: ignore
import pytest  # type: ignore

from damspec import (
    DomainError,
    Level,
    SublevelRef,
    TransitionSystem,
    build_system,
    decay_branching,
    polarization_components,
)

polarization_data: typing.List[typing.Tuple[float, complex, complex, complex]] = [
    (0.0, 0j, 1 + 0j, 0j),
    (math.pi / 2, complex(1 / math.sqrt(2)), 0j, complex(-1 / math.sqrt(2))),
    (math.pi / 3, complex(math.sqrt(3) / 2 / math.sqrt(2)), complex(0.5), complex(-math.sqrt(3) / 2 / math.sqrt(2))),
]


@pytest.mark.parametrize("_input", polarization_data)
def test_polarization_components(_input):
    theta, eps_minus, eps_0, eps_plus = _input
    geometry = polarization_components(theta)
    assert geometry.eps_minus == pytest.approx(eps_minus, abs=1e-15)
    assert geometry.eps_0 == pytest.approx(eps_0, abs=1e-15)
    assert geometry.eps_plus == pytest.approx(eps_plus, abs=1e-15)
    assert sum(abs(c) ** 2 for c in geometry.components) == pytest.approx(1.0, abs=1e-15)


def test_perpendicular_probe_has_exactly_no_pi_part():
    assert polarization_components(math.pi / 2).eps_0 == 0


def test_component_rejects_unknown_q():
    with pytest.raises(DomainError):
        polarization_components(0.0).component(2)


def test_basis_order_ground_first():
    system: TransitionSystem = build_system(1, 2, 1.0)
    assert system.dim == 8
    assert system.n_ground == 3
    assert system.sublevels[0] == SublevelRef(Level.Ground, -1.0)
    assert system.sublevels[2] == SublevelRef(Level.Ground, 1.0)
    assert system.sublevels[3] == SublevelRef(Level.Excited, -2.0)
    assert [str(s) for s in system.excited_sublevels] == ["|-2'>", "|-1'>", "|0'>", "|1'>", "|2'>"]
    assert system.system_id == "Fg=1->Fe=2"


def test_half_integer_system_id():
    assert build_system(0.5, 1.5, 1.0).system_id == "Fg=1/2->Fe=3/2"


@pytest.mark.parametrize("F_g, F_e", [(2, 1), (1, 1), (2, 2), (1, 2)])
def test_hamiltonian_is_hermitian_and_only_couples_levels(F_g, F_e):
    system: TransitionSystem = build_system(F_g, F_e, 1.3, coupling_phase=0.4)
    h: np.ndarray = system.hamiltonian
    assert np.allclose(h, h.conj().T, atol=1e-15)
    assert not np.any(h[: system.n_ground, : system.n_ground])
    assert not np.any(h[system.n_ground :, system.n_ground :])


def test_pi_coupling_scales_with_phase():
    system: TransitionSystem = build_system(2, 1, 2.0, coupling_phase=0.7)
    expected: complex = 2.0 / 2 * -math.sqrt(2 / 5) * complex(math.cos(0.7), math.sin(0.7))
    assert system.pi_coupling(0.0) == pytest.approx(expected, abs=1e-14)
    # no |2'> in F_e = 1
    assert system.pi_coupling(2.0) == 0j


def test_probe_operator_for_perpendicular_polarization():
    system: TransitionSystem = build_system(0, 1, 0.0)
    # |0> couples to |-1'> and |1'> only
    column: np.ndarray = system.probe_op[:, 0]
    assert column[system.index(SublevelRef(Level.Excited, -1.0))] == pytest.approx(1 / math.sqrt(2))
    assert column[system.index(SublevelRef(Level.Excited, 0.0))] == 0
    assert column[system.index(SublevelRef(Level.Excited, 1.0))] == pytest.approx(-1 / math.sqrt(2))


@pytest.mark.parametrize("F_g, F_e", [(2, 1), (1, 2), (1.5, 1.5)])
def test_decay_channels_give_total_rate_gamma(F_g, F_e):
    gamma: float = 1.7
    system: TransitionSystem = build_system(F_g, F_e, 1.0, gamma=gamma)
    rate: np.ndarray = sum(j.conj().T @ j for j in system.jump_operators)
    expected: np.ndarray = np.zeros((system.dim, system.dim))
    expected[system.n_ground :, system.n_ground :] = gamma * np.eye(system.n_excited)
    assert np.allclose(rate, expected, atol=1e-12)


@pytest.mark.parametrize("F_g, F_e", [(2, 1), (1, 2), (1, 1), (1.5, 2.5)])
def test_decay_channels_follow_branching_ratios(F_g, F_e):
    system: TransitionSystem = build_system(F_g, F_e, 1.0, gamma=2.0)
    for e_ref in system.excited_sublevels:
        e_index: int = system.index(e_ref)
        for m_g, weight in decay_branching(F_e, e_ref.m, F_g):
            g_index: int = system.index(SublevelRef(Level.Ground, m_g))
            rate: float = sum(abs(j[g_index, e_index]) ** 2 for j in system.decay_channels)
            assert rate == pytest.approx(2.0 * weight, abs=1e-12)


def test_decay_channel_keeps_dipole_sign():
    system: TransitionSystem = build_system(1, 1, 1.0)
    # <1 1|1 0; 1 1> and <1 -1|1 0; 1 -1> differ in sign
    pi_channel: np.ndarray = system.decay_channels[1]
    up: complex = pi_channel[system.index(SublevelRef(Level.Ground, 1.0)), system.index(SublevelRef(Level.Excited, 1.0))]
    down: complex = pi_channel[
        system.index(SublevelRef(Level.Ground, -1.0)), system.index(SublevelRef(Level.Excited, -1.0))
    ]
    assert up == pytest.approx(-down, abs=1e-14)
    assert abs(up) ** 2 == pytest.approx(0.5, abs=1e-14)


def test_loss_channels_add_to_decay_rate():
    system: TransitionSystem = build_system(1, 2, 1.0, loss_rate=0.2)
    assert len(system.loss_channels) == 3 * 5
    rate: np.ndarray = sum(j.conj().T @ j for j in system.jump_operators)
    assert np.allclose(np.diag(rate)[system.n_ground :], 1.2, atol=1e-12)


def test_operators_are_read_only():
    system: TransitionSystem = build_system(1, 1, 1.0)
    with pytest.raises(ValueError):
        system.coupling_op[3, 0] = 1.0


def test_partner():
    system: TransitionSystem = build_system(2, 1, 1.0)
    assert system.partner(SublevelRef(Level.Ground, 1.0)) == SublevelRef(Level.Excited, 1.0)
    assert system.partner(SublevelRef(Level.Ground, 2.0)) is None


def test_index_rejects_foreign_sublevel():
    with pytest.raises(DomainError):
        build_system(1, 1, 1.0).index(SublevelRef(Level.Ground, 2.0))


@pytest.mark.parametrize(
    "kwargs",
    [
        {"F_g": 1, "F_e": 3, "omega_c_rabi": 1.0},
        {"F_g": 1, "F_e": 2, "omega_c_rabi": -1.0},
        {"F_g": 1, "F_e": 2, "omega_c_rabi": 1.0, "gamma": 0.0},
        {"F_g": 1, "F_e": 2, "omega_c_rabi": 1.0, "loss_rate": -0.1},
    ],
)
def test_build_system_rejects_invalid_parameters(kwargs):
    with pytest.raises(DomainError):
        build_system(**kwargs)
