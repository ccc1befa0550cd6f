import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diracmr.algebra import PAULI, levi_civita3
from diracmr.polarization import (
    CommonBasis,
    HelicityBasis,
    PoleError,
    common_spinor,
    eta_from_xi,
    helicity_spinor,
    make_basis,
    omega_connection,
    sigma_matrices,
    spinor_pair,
)
from diracmr.sampling import sample_momenta

ID2 = np.eye(2)


def _unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


directions = st.tuples(
    st.floats(-1, 1), st.floats(-1, 1), st.floats(-0.9, 1)
).filter(lambda t: 1e-2 < np.linalg.norm(t) and (1 + t[2] / np.linalg.norm(t)) > 1e-2)


@settings(max_examples=60, deadline=None)
@given(directions)
def test_common_spinors_orthonormal_complete(direction):
    n = _unit(direction)
    xi = spinor_pair(n)
    eta = eta_from_xi(xi)
    assert np.allclose(xi.conj().T @ xi, ID2, atol=1e-14)
    assert np.allclose(xi @ xi.conj().T, ID2, atol=1e-14)
    assert np.allclose(eta.conj().T @ eta, ID2, atol=1e-14)
    ns = sum(n[i] * PAULI[i] for i in range(3)) / 2
    assert np.allclose(ns @ xi[:, 0], 0.5 * xi[:, 0], atol=1e-13)
    assert np.allclose(ns @ xi[:, 1], -0.5 * xi[:, 1], atol=1e-13)
    assert np.allclose(ns @ eta[:, 0], -0.5 * eta[:, 0], atol=1e-13)
    assert np.allclose(ns @ eta[:, 1], 0.5 * eta[:, 1], atol=1e-13)


def test_common_spinor_special_values():
    assert np.allclose(common_spinor([0, 0, 1], 0.5), [1, 0])
    assert np.allclose(common_spinor([0, 0, 1], -0.5), [0, 1])
    # closed form along e1
    assert np.allclose(common_spinor([1, 0, 0], 0.5), np.array([1, 1]) / np.sqrt(2))


def test_weighted_completeness():
    # sum over 2 sigma xi xi^+ reproduces n.sigma
    rng = np.random.default_rng(2)
    for _ in range(20):
        n = _unit(rng.standard_normal(3))
        if 1 + n[2] < 1e-2:
            continue
        xi = spinor_pair(n)
        lhs = np.outer(xi[:, 0], xi[:, 0].conj()) - np.outer(xi[:, 1], xi[:, 1].conj())
        assert np.allclose(lhs, sum(n[i] * PAULI[i] for i in range(3)), atol=1e-13)


def test_pole_errors():
    with pytest.raises(PoleError):
        spinor_pair([0, 0, -1])
    with pytest.raises(PoleError):
        common_spinor(_unit([1e-7, 0, -1]), 0.5)
    hel = HelicityBasis()
    with pytest.raises(PoleError):
        hel.xi(np.array([0.0, 0.0, -2.0]))
    with pytest.raises(PoleError):
        hel.xi(np.array([0.0, 0.0, 0.0]))
    # just off the pole ray must evaluate
    hel.xi(np.array([0.05, 0.0, -1.0]))


def test_helicity_spinor_eigenvector():
    for q in sample_momenta(50, 1.0, seed=3, avoid_poles=True):
        n = q.p / q.mag
        ns = sum(n[i] * PAULI[i] for i in range(3)) / 2
        xp = helicity_spinor(q.p, 0.5)
        xm = helicity_spinor(q.p, -0.5)
        assert np.allclose(ns @ xp, 0.5 * xp, atol=1e-12)
        assert np.allclose(ns @ xm, -0.5 * xm, atol=1e-12)
    assert np.allclose(helicity_spinor(np.array([0, 0, 1.0]), 0.5), [1, 0])


def test_sigma_matrices_common_basis():
    # n = e3 gives the Pauli matrices themselves
    basis = CommonBasis()
    assert np.allclose(basis.sigma(None), PAULI, atol=1e-15)
    assert np.allclose(basis.omega(None), 0.0)


def test_sigma_matrices_helicity():
    hel = HelicityBasis()
    for q in sample_momenta(100, 1.0, seed=5, avoid_poles=True):
        p = q.p
        sig = hel.sigma(p)
        # closed form agrees with the defining bilinears
        xi = hel.xi(p)
        direct = np.stack([xi.conj().T @ PAULI[i] @ xi for i in range(3)])
        assert np.max(np.abs(sig - direct)) < 1e-13
        # momentum contraction collapses to p sigma_3
        assert np.max(np.abs(np.einsum("i,iab->ab", p, sig) - q.mag * PAULI[2])) < 1e-12
        # Pauli algebra
        for i in range(3):
            assert np.max(np.abs(sig[i] - sig[i].conj().T)) < 1e-13
            assert np.max(np.abs(sig[i] @ sig[i] - ID2)) < 1e-13
            for j in range(3):
                rhs = 2j * sum(levi_civita3(i, j, k) * sig[k] for k in range(3))
                assert np.max(np.abs(sig[i] @ sig[j] - sig[j] @ sig[i] - rhs)) < 1e-12
    # alignment with e3
    sig = hel.sigma(np.array([0.0, 0.0, 2.3]))
    assert np.allclose(sig, PAULI, atol=1e-14)


def test_omega_helicity_closed_form_and_fd():
    hel = HelicityBasis()
    for q in sample_momenta(100, 1.0, seed=9, avoid_poles=True):
        p = q.p
        om = hel.omega(p)
        for i in range(3):
            assert np.max(np.abs(om[i] + om[i].conj().T)) < 1e-12
        assert np.max(np.abs(np.einsum("i,iab->ab", p, om))) < 1e-12
        # FD oracle with step matched to the direction-variation scale
        fd = hel.omega_fd(p, h=1e-4 * q.mag)
        assert np.max(np.abs(om - fd)) < 1e-6
        for i in range(3):
            assert np.max(np.abs(fd[i] + fd[i].conj().T)) < 1e-6


def test_omega_fd_at_diagonal_direction():
    hel = HelicityBasis()
    for mag in (0.5, 1.0, 3.0):
        p = mag * np.array([1.0, 1.0, 1.0]) / np.sqrt(3.0)
        fd = hel.omega_fd(p, h=1e-4 * mag)
        assert np.max(np.abs(fd - hel.omega(p))) < 1e-6


def test_sigma_omega_wrappers():
    from diracmr.algebra import Momentum

    q = Momentum.of(0.3, 0.1, 0.8)
    hel = make_basis("helicity")
    assert np.allclose(sigma_matrices(hel, q), hel.sigma(q.p))
    assert np.allclose(omega_connection(hel, q), hel.omega(q.p))
    with pytest.raises(ValueError):
        make_basis("nope")
