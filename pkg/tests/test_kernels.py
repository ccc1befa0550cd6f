import numpy as np
import pytest

from diracmr.algebra import GAMMA, GAMMA5, Momentum, theta_tensor
from diracmr.associated import KERNEL_CATALOG, matrix_elements_offdiag, zitter_kernel
from diracmr.operators import OPERATOR_CATALOG, decompose_diag_osc
from diracmr.polarization import CommonBasis, HelicityBasis, PoleError
from diracmr.sampling import sample_momenta

BASES = (CommonBasis(), HelicityBasis())


def mx(a):
    return float(np.max(np.abs(a)))


def test_kernels_match_offdiag_machinery():
    t = 0.42
    for basis in BASES:
        for q in sample_momenta(25, 1.0, seed=95, avoid_poles=True):
            for name, ker in KERNEL_CATALOG.items():
                kv = ker(q, t, basis)
                assert mx(kv - ker.from_offdiag(q, t, basis)) < 1e-10, name


def test_phase_law_and_modulus():
    basis = CommonBasis()
    q = Momentum.of(0.5, -0.3, 0.4, m=1.2)
    e = q.energy
    for name, ker in KERNEL_CATALOG.items():
        k0 = ker(q, 0.0, basis)
        for t in (0.3, 1.1, 4.0):
            kt = ker(q, t, basis)
            assert mx(kt - np.exp(2j * e * t) * k0) < 1e-12
            assert mx(np.abs(kt) - np.abs(k0)) < 1e-12
        # half-period in the 2E phase negates the kernel
        half = np.pi / (2.0 * e)
        assert mx(ker(q, half, basis) + k0) < 1e-12


def test_time_derivative_fd_oracle():
    basis = HelicityBasis()
    for q in sample_momenta(10, 1.0, seed=97, avoid_poles=True):
        e = q.energy
        t = 0.2
        h = 1e-6 / e
        for name, ker in KERNEL_CATALOG.items():
            kv = ker(q, t, basis)
            dk = (
                -ker(q, t + 2 * h, basis)
                + 8 * ker(q, t + h, basis)
                - 8 * ker(q, t - h, basis)
                + ker(q, t - 2 * h, basis)
            ) / (12 * h)
            scale = max(mx(2j * e * kv), 1e-30)
            assert mx(dk - 2j * e * kv) / scale < 1e-6, name


def test_delta_x_kernel_closed_form():
    basis = CommonBasis()
    q = Momentum.of(0.3, 0.7, -0.2, m=0.9)
    t = 0.15
    _, theta_inv = theta_tensor(q)
    xi = basis.xi(q.p)
    eta_m = basis.eta(-q.p)
    bil = np.stack([xi.conj().T @ p @ eta_m for p in __import__("diracmr").algebra.PAULI])
    expect = (-0.5j * np.exp(2j * q.energy * t) / q.energy) * np.einsum(
        "ij,jab->iab", theta_inv, bil
    )
    assert mx(zitter_kernel("delta_x_osc", q, t, basis) - expect) < 1e-13


def test_pseudoscalar_parent_has_no_diagonal_part():
    for q in sample_momenta(25, 1.0, seed=99):
        parts = decompose_diag_osc(GAMMA[0] @ GAMMA5, q)
        assert mx(parts[0]) < 1e-12
        assert mx(parts[1]) < 1e-12
    # and the kernel is the pair contraction without spin structure
    basis = CommonBasis()
    q = Momentum.of(0.2, 0.1, 0.4)
    k = zitter_kernel("pseudoscalar_osc", q, 0.0, basis)[0]
    xi = basis.xi(q.p)
    eta_m = basis.eta(-q.p)
    assert mx(k + xi.conj().T @ eta_m) < 1e-13


def test_hermitian_pairing_of_offdiag_parts():
    # adjoint pairing holds for Hermitian parents; the Chakrabarti matrices
    # are not Hermitian (s(p)^+ = s(-p)) and are excluded
    t = 0.7
    for basis in BASES:
        for q in sample_momenta(10, 1.0, seed=101, avoid_poles=True):
            for name in ("delta_x", "gamma0", "pauli_dirac_spin", "h_dirac"):
                pm, mp = matrix_elements_offdiag(OPERATOR_CATALOG[name], q, t, basis)
                assert mx(np.transpose(pm.conj(), (0, 2, 1)) - mp) < 1e-12


def test_kernel_pole_and_name_errors():
    hel = HelicityBasis()
    q = Momentum.of(0.0, 0.0, 1.0)  # -p sits on the helicity pole ray
    with pytest.raises(PoleError):
        zitter_kernel("delta_x_osc", q, 0.0, hel)
    with pytest.raises(KeyError):
        zitter_kernel("not_a_kernel", q, 0.0, CommonBasis())
