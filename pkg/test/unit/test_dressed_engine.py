import math
import typing

import numpy as np  # type: ignore
import pytest  # type: ignore

from damspec import DomainError, DressedBasis, DressedLabel, StateKind, build_system, dress, dressed_energy
from damspec.dressed_engine import probe_in_dressed_basis

systems_data: typing.List[typing.Tuple[float, float]] = [(2, 1), (1, 1), (2, 2), (1, 2), (0.5, 0.5), (1.5, 0.5)]


@pytest.mark.parametrize("_input", systems_data)
def test_transform_is_unitary(_input):
    basis: DressedBasis = dress(build_system(*_input, 1.0, coupling_phase=0.3))
    u: np.ndarray = basis.transform
    assert np.allclose(u.conj().T @ u, np.eye(u.shape[0]), atol=1e-12)


@pytest.mark.parametrize("_input", systems_data)
def test_transform_diagonalizes_coupling_hamiltonian(_input):
    system = build_system(*_input, 1.0, coupling_phase=1.1)
    basis: DressedBasis = dress(system)
    h: np.ndarray = basis.transform.conj().T @ system.hamiltonian @ basis.transform
    assert np.allclose(h, np.diag(basis.energies), atol=1e-12)


def test_doublets_and_survivors_of_two_to_one():
    omega_c: float = 2.0
    basis: DressedBasis = dress(build_system(2, 1, omega_c))
    assert sorted(basis.doublets) == [-1.0, 0.0, 1.0]
    assert basis.doublets[0.0].omega_m == pytest.approx(omega_c * math.sqrt(2 / 5), abs=1e-14)
    assert basis.doublets[1.0].omega_m == pytest.approx(omega_c * math.sqrt(3 / 10), abs=1e-14)
    assert [str(s) for s in basis.bare_survivors] == ["|-2>", "|2>"]


def test_trapped_sublevel_and_partner_survive_in_two_to_two():
    basis: DressedBasis = dress(build_system(2, 2, 1.0))
    assert 0.0 not in basis.doublets
    assert [str(s) for s in basis.bare_survivors] == ["|0>", "|0'>"]


def test_plus_state_sits_in_ground_column():
    system = build_system(1, 1, 1.0)
    basis: DressedBasis = dress(system)
    assert basis.labels[0] == DressedLabel(StateKind.Plus, -1.0)
    assert basis.labels[1] == DressedLabel(StateKind.BareGround, 0.0)
    assert basis.labels[3] == DressedLabel(StateKind.Minus, -1.0)
    assert basis.labels[4] == DressedLabel(StateKind.BareExcited, 0.0)


def test_dressed_state_components():
    basis: DressedBasis = dress(build_system(1, 1, 1.0, coupling_phase=0.5))
    doublet = basis.doublets[1.0]
    phi: float = doublet.phi_m
    assert doublet.plus_state == pytest.approx(np.array([np.exp(-1j * phi), 1.0]) / math.sqrt(2))
    assert doublet.minus_state == pytest.approx(np.array([1.0, -np.exp(1j * phi)]) / math.sqrt(2))
    assert phi == pytest.approx(0.5, abs=1e-14)


def test_undressed_system_has_identity_transform():
    basis: DressedBasis = dress(build_system(1, 2, 0.0))
    assert basis.doublets == {}
    assert np.array_equal(basis.transform, np.eye(8))
    assert all(label.is_bare for label in basis.labels)
    assert len(basis.bare_survivors) == 8


def test_energies():
    basis: DressedBasis = dress(build_system(1, 1, 4.0))
    omega: float = 4.0 / math.sqrt(2)
    assert dressed_energy(basis, DressedLabel(StateKind.Plus, 1.0)) == pytest.approx(omega / 2)
    assert dressed_energy(basis, DressedLabel(StateKind.Minus, 1.0)) == pytest.approx(-omega / 2)
    assert dressed_energy(basis, DressedLabel(StateKind.BareGround, 0.0)) == 0.0


def test_unknown_label_is_rejected():
    basis: DressedBasis = dress(build_system(2, 1, 1.0))
    with pytest.raises(DomainError):
        dressed_energy(basis, DressedLabel(StateKind.Plus, 2.0))
    with pytest.raises(DomainError):
        basis.column(DressedLabel(StateKind.BareExcited, 2.0))


render_data: typing.List[typing.Tuple[DressedLabel, int, str]] = [
    (DressedLabel(StateKind.BareGround, 2.0), 0, "|2,n+1>"),
    (DressedLabel(StateKind.Plus, 1.0), 1, "|1+,n+1>"),
    (DressedLabel(StateKind.Minus, 0.0), 0, "|0-,n>"),
    (DressedLabel(StateKind.BareExcited, 0.0), 2, "|0',n+2>"),
    (DressedLabel(StateKind.Minus, -0.5), 1, "|-1/2-,n+1>"),
]


@pytest.mark.parametrize("_input", render_data)
def test_render(_input):
    label, manifold, expected = _input
    assert label.render(manifold) == expected


def test_label_str():
    assert str(DressedLabel(StateKind.Plus, -1.0)) == "|-1+>"
    assert str(DressedLabel(StateKind.BareExcited, 1.5)) == "|3/2'>"


def test_probe_in_dressed_basis():
    system = build_system(2, 1, 1.0, theta=math.pi / 3)
    basis: DressedBasis = dress(system)
    w: np.ndarray = probe_in_dressed_basis(system, basis)
    assert np.allclose(basis.transform @ w @ basis.transform.conj().T, system.probe_op, atol=1e-12)


def test_as_report():
    report = dress(build_system(2, 1, 1.0)).as_report()
    assert [d["m"] for d in report["doublets"]] == ["-1", "0", "1"]
    assert report["doublets"][1]["states"] == ["|0+>", "|0->"]
    assert report["bare_survivors"] == ["|-2>", "|2>"]
