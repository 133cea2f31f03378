import numpy as np
import pytest

from opent import (
    BipartitionDims,
    PureState,
    SpinSystem,
    diagonal_coupling,
    partial_trace_1,
    partial_trace_2,
    phi_p_state,
    phi_state,
    product_basis_state,
    product_rotation,
    state_entropy,
)
from opent.linalg import eigh, kron
from conftest import random_complex, random_unitary

HALF = SpinSystem(1)
ONE = SpinSystem(2)
J10 = SpinSystem.from_j(10)


def _random_state(rng, n, m):
    amps = random_complex(rng, n * m, 1).ravel()
    return PureState(BipartitionDims(n, m), amps / np.linalg.norm(amps))


def test_pure_state_validation():
    with pytest.raises(ValueError, match="normalized"):
        PureState(BipartitionDims(2, 2), np.array([1.0, 1.0, 0.0, 0.0]))
    with pytest.raises(ValueError, match="length"):
        PureState(BipartitionDims(2, 2), np.array([1.0, 0.0]))


def test_product_basis_state_index():
    psi = product_basis_state(HALF, HALF, 0.5, 0.5)
    np.testing.assert_array_equal(psi.amplitudes, [0, 0, 0, 1])
    assert state_entropy(psi) == pytest.approx(0, abs=1e-12)


def test_product_basis_state_eigenrelation():
    u = diagonal_coupling(ONE, ONE, 0.9)
    for m1 in ONE.m_values():
        for m2 in ONE.m_values():
            psi = product_basis_state(ONE, ONE, m1, m2).amplitudes
            np.testing.assert_allclose(u @ psi, np.exp(-0.9j * m1 * m2) * psi, atol=1e-13)


def test_product_basis_state_out_of_range():
    with pytest.raises(ValueError):
        product_basis_state(HALF, HALF, 1.5, 0.5)


def test_phi_state_entropy_ln2():
    psi = phi_state(J10, J10, 3, -5)
    assert state_entropy(psi) == pytest.approx(np.log(2), abs=1e-12)


def test_phi_state_one_sided_zero():
    # m1 = 0: subsystem-1 factor is pure, so no entanglement
    psi = phi_state(ONE, ONE, 0, 1)
    assert state_entropy(psi) == pytest.approx(0, abs=1e-12)
    rho1 = partial_trace_1(psi)
    w, _ = eigh(rho1)
    np.testing.assert_allclose(np.sort(w), [0, 0, 1], atol=1e-12)


def test_phi_state_rejects_double_zero():
    with pytest.raises(ValueError):
        phi_state(ONE, ONE, 0, 0)


def test_phi_state_coupling_eigenstate():
    u = diagonal_coupling(ONE, ONE, 1.3)
    psi = phi_state(ONE, ONE, 1, -1).amplitudes
    np.testing.assert_allclose(u @ psi, np.exp(1.3j) * psi, atol=1e-13)


def test_phi_p_state_bell_like():
    psi = phi_p_state(HALF)
    np.testing.assert_allclose(psi.amplitudes, [0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0])
    assert state_entropy(psi) == pytest.approx(np.log(2), abs=1e-12)


def test_phi_p_state_maximally_entangled():
    psi = phi_p_state(J10)
    assert state_entropy(psi) == pytest.approx(np.log(21), abs=1e-12)
    np.testing.assert_allclose(partial_trace_1(psi), np.eye(21) / 21, atol=1e-13)


def test_phi_p_state_fixed_by_product_rotation():
    psi = phi_p_state(ONE)
    u = product_rotation(ONE, ONE, 0.6)
    np.testing.assert_allclose(u @ psi.amplitudes, psi.amplitudes, atol=1e-13)


def test_partial_trace_product_state_is_projector():
    psi = product_basis_state(ONE, J10, 1, -4)
    rho1 = partial_trace_1(psi)
    np.testing.assert_allclose(rho1 @ rho1, rho1, atol=1e-13)
    assert np.trace(rho1).real == pytest.approx(1)


def test_partial_trace_properties(rng):
    for _ in range(5):
        psi = _random_state(rng, 3, 7)
        rho1 = partial_trace_1(psi)
        np.testing.assert_allclose(rho1, rho1.conj().T, atol=1e-13)
        w, _ = eigh(rho1)
        assert w.min() >= -1e-12
        assert np.trace(rho1).real == pytest.approx(1, abs=1e-12)


def test_entropy_two_sided_equality(rng):
    for _ in range(5):
        psi = _random_state(rng, 3, 6)
        w2, _ = eigh(partial_trace_2(psi))
        w2 = w2[w2 > 0]
        s2 = float(-np.sum(w2 * np.log(w2)))
        assert state_entropy(psi) == pytest.approx(s2, abs=1e-10)


def test_entropy_local_unitary_invariance(rng):
    psi = _random_state(rng, 3, 4)
    v = kron(random_unitary(rng, 3), random_unitary(rng, 4))
    rotated = PureState(psi.dims, v @ psi.amplitudes)
    assert state_entropy(rotated) == pytest.approx(state_entropy(psi), abs=1e-10)
