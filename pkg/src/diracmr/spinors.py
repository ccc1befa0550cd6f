"""Rest-frame and boosted Dirac spinors and plane-wave mode spinors.

Normalization follows n(p) = sqrt(m/E(p)) so that boosted spinors satisfy
u^+_sigma(p) u_sigma'(p) = delta_{sigma sigma'}; mode spinors carry the
(2 pi)^{-3/2} plane-wave factor.  Distributional orthonormality is asserted
elsewhere in stripped pointwise form only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import CCONJ, GAMMA, Momentum, boost_for_momentum
from .polarization import PolarizationBasis, sigma_index

_TWO_PI_32 = (2.0 * np.pi) ** 1.5


def rest_u_matrix(basis: PolarizationBasis, p) -> np.ndarray:
    """Rest-frame particle spinors as a 4x2 matrix of columns (xi; xi)/sqrt(2)."""
    xi = basis.xi(p)
    return np.vstack([xi, xi]) / np.sqrt(2.0)


def rest_v_matrix(basis: PolarizationBasis, p) -> np.ndarray:
    """Rest-frame antiparticle spinors, columns (eta; -eta)/sqrt(2)."""
    eta = basis.eta(p)
    return np.vstack([eta, -eta]) / np.sqrt(2.0)


def rest_spinors(basis: PolarizationBasis, q: Momentum, sigma: float):
    """Pair (u_ring, v_ring) of gamma^0 eigenspinors for one polarization label."""
    idx = sigma_index(sigma)
    return rest_u_matrix(basis, q.p)[:, idx], rest_v_matrix(basis, q.p)[:, idx]


def norm_factor(q: Momentum) -> float:
    """n(p) = sqrt(m / E(p)), with n(0) = 1."""
    return float(np.sqrt(q.m / q.energy))


def u_matrix(basis: PolarizationBasis, q: Momentum) -> np.ndarray:
    """Boosted particle spinors u_sigma(p) = n(p) l_p u_ring_sigma(p), as columns."""
    return norm_factor(q) * boost_for_momentum(q) @ rest_u_matrix(basis, q.p)


def v_matrix(basis: PolarizationBasis, q: Momentum) -> np.ndarray:
    """Boosted antiparticle spinors v_sigma(p) = C u_sigma^*(p), as columns."""
    return CCONJ @ u_matrix(basis, q).conj()


def u_spinor(basis: PolarizationBasis, q: Momentum, sigma: float) -> np.ndarray:
    return u_matrix(basis, q)[:, sigma_index(sigma)]


def v_spinor(basis: PolarizationBasis, q: Momentum, sigma: float) -> np.ndarray:
    return v_matrix(basis, q)[:, sigma_index(sigma)]


def dirac_residuals(basis: PolarizationBasis, q: Momentum) -> tuple[float, float]:
    """Max norms of (gamma p - m) u and (gamma p + m) v over both polarizations."""
    gp = q.energy * GAMMA[0] - sum(q.p[i] * GAMMA[i + 1] for i in range(3))
    ru = np.max(np.abs((gp - q.m * np.eye(4)) @ u_matrix(basis, q)))
    rv = np.max(np.abs((gp + q.m * np.eye(4)) @ v_matrix(basis, q)))
    return float(ru), float(rv)


def projector_from_spinors(basis: PolarizationBasis, q: Momentum):
    """Projectors rebuilt from spinor sums.

    Returns (sum_sigma u u^+ at p, sum_sigma v v^+ at -p), which reproduce the
    positive/negative frequency projectors at momentum p.
    """
    u = u_matrix(basis, q)
    v = v_matrix(basis, q.flipped())
    return u @ u.conj().T, v @ v.conj().T


@dataclass(frozen=True)
class ModeSpinorField:
    """Plane-wave mode spinor, evaluable at (t, x).

    Species "U" carries exp(-iEt + ip.x), species "V" the conjugate phase;
    both include the (2 pi)^{-3/2} normalization.
    """

    q: Momentum
    sigma: float
    basis: PolarizationBasis
    species: str = "U"

    def __post_init__(self):
        if self.species not in ("U", "V"):
            raise ValueError("species must be 'U' or 'V'")

    def amplitude(self) -> np.ndarray:
        if self.species == "U":
            return u_spinor(self.basis, self.q, self.sigma)
        return v_spinor(self.basis, self.q, self.sigma)

    def at(self, t: float, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        phase = self.q.energy * t - float(np.dot(self.q.p, x))
        if self.species == "U":
            return self.amplitude() * np.exp(-1j * phase) / _TWO_PI_32
        return self.amplitude() * np.exp(1j * phase) / _TWO_PI_32
