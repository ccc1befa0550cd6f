"""Chiral-representation Dirac algebra, SL(2,C) matrices and Lorentz boosts.

Fixed conventions used throughout the package:

* metric  eta = diag(+1, -1, -1, -1)
* Levi-Civita  eps^{0123} = -eps_{0123} = -1  (spatial eps_{123} = +1)
* natural units  hbar = c = 1
* chiral (Weyl) gamma matrices; no representation switching

All matrices are dense complex ``numpy`` arrays and every identity is
checked numerically against a stated tolerance, never symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
EPS0123 = -1.0  # eps^{0123}

DEFAULT_IDENTITY_TOL = 1e-12

PAULI = np.array(
    [
        [[0.0, 1.0], [1.0, 0.0]],
        [[0.0, -1.0j], [1.0j, 0.0]],
        [[1.0, 0.0], [0.0, -1.0]],
    ],
    dtype=complex,
)

ID2 = np.eye(2, dtype=complex)
ID4 = np.eye(4, dtype=complex)


def levi_civita3(i: int, j: int, k: int) -> float:
    """Spatial Levi-Civita symbol with eps_{123} = +1 (0-based indices)."""
    return float((i - j) * (j - k) * (k - i)) / 2.0


# eps3[i, j, k] as an array, handy for contractions
EPS3 = np.zeros((3, 3, 3))
for _i in range(3):
    for _j in range(3):
        for _k in range(3):
            EPS3[_i, _j, _k] = levi_civita3(_i, _j, _k)


def _block(a, b, c, d) -> np.ndarray:
    return np.block([[a, b], [c, d]])


_Z2 = np.zeros((2, 2), dtype=complex)

GAMMA = np.empty((4, 4, 4), dtype=complex)
GAMMA[0] = _block(_Z2, ID2, ID2, _Z2)
for _i in range(3):
    GAMMA[_i + 1] = _block(_Z2, PAULI[_i], -PAULI[_i], _Z2)

GAMMA5 = np.diag([-1.0, -1.0, 1.0, 1.0]).astype(complex)

# charge conjugation acting on conjugated spinors, v = C u*; C = C^-1
CCONJ = 1j * GAMMA[2]


def gamma(mu: int) -> np.ndarray:
    """Chiral-representation gamma matrix, mu in 0..3."""
    if mu not in (0, 1, 2, 3):
        raise IndexError(f"gamma index must be 0..3, got {mu}")
    return GAMMA[mu].copy()


def gamma5() -> np.ndarray:
    return GAMMA5.copy()


def sl2c_generator(mu: int, nu: int) -> np.ndarray:
    """SL(2,C) generator s^{mu nu} = (i/4)[gamma^mu, gamma^nu].

    Returns the zero matrix for mu == nu.
    """
    if mu not in (0, 1, 2, 3) or nu not in (0, 1, 2, 3):
        raise IndexError("generator indices must be 0..3")
    gm, gn = GAMMA[mu], GAMMA[nu]
    return 0.25j * (gm @ gn - gn @ gm)


def spin_matrix(i: int) -> np.ndarray:
    """Pauli-Dirac spin matrix s_i = (1/2) eps_{ijk} s^{jk} = diag(sigma_i, sigma_i)/2."""
    if i not in (0, 1, 2):
        raise IndexError("spatial index must be 0..2")
    return _block(PAULI[i] / 2.0, _Z2, _Z2, PAULI[i] / 2.0)


SPIN = np.stack([spin_matrix(i) for i in range(3)])


def boost_generator(i: int) -> np.ndarray:
    """Boost generator s^{0i} = diag(-i sigma_i, +i sigma_i)/2 = (i/2) gamma^0 gamma^i."""
    if i not in (0, 1, 2):
        raise IndexError("spatial index must be 0..2")
    return 0.5j * (GAMMA[0] @ GAMMA[i + 1])


def rotation(theta) -> np.ndarray:
    """Spinor rotation r(theta) = diag(rhat, rhat), rhat = exp(-i theta.sigma/2)."""
    theta = np.asarray(theta, dtype=float)
    rhat = rotation_su2(theta)
    return _block(rhat, _Z2, _Z2, rhat)


def rotation_su2(theta) -> np.ndarray:
    """SU(2) rotation exp(-i theta.sigma/2) via the half-angle closed form."""
    theta = np.asarray(theta, dtype=float)
    angle = float(np.linalg.norm(theta))
    if angle == 0.0:
        return ID2.copy()
    n = theta / angle
    nsig = np.einsum("i,ijk->jk", n, PAULI)
    return np.cos(angle / 2.0) * ID2 - 1j * np.sin(angle / 2.0) * nsig


def boost_su2(tau) -> np.ndarray:
    """Upper-block boost exp(tau.sigma/2); the lower block carries its inverse."""
    tau = np.asarray(tau, dtype=float)
    rap = float(np.linalg.norm(tau))
    if rap == 0.0:
        return ID2.copy()
    n = tau / rap
    nsig = np.einsum("i,ijk->jk", n, PAULI)
    return np.cosh(rap / 2.0) * ID2 + np.sinh(rap / 2.0) * nsig


def boost_param(tau) -> np.ndarray:
    """SL(2,C) boost l(tau) = diag(lhat, lhat^-1) with lhat = exp(tau.sigma/2)."""
    lhat = boost_su2(tau)
    return _block(lhat, _Z2, _Z2, np.linalg.inv(lhat))


@dataclass(frozen=True)
class Momentum:
    """Three-momentum with mass context, E(p) = sqrt(p^2 + m^2).

    Treated as immutable; the stored vector must not be mutated.
    """

    p: np.ndarray = field()
    m: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "p", np.asarray(self.p, dtype=float).reshape(3))
        if self.m <= 0.0:
            raise ValueError(f"mass must be positive, got {self.m}")

    @property
    def mag(self) -> float:
        return float(np.linalg.norm(self.p))

    @property
    def energy(self) -> float:
        return float(np.sqrt(self.mag**2 + self.m**2))

    @property
    def four(self) -> np.ndarray:
        """On-shell four-momentum (E, p)."""
        return np.concatenate(([self.energy], self.p))

    def flipped(self) -> "Momentum":
        return Momentum(-self.p, self.m)

    @staticmethod
    def of(px: float, py: float, pz: float, m: float = 1.0) -> "Momentum":
        return Momentum(np.array([px, py, pz]), m)


def boost_for_momentum(q: Momentum) -> np.ndarray:
    """Standard boost l_p = (E + m + gamma^0 gamma.p) / sqrt(2m(E+m)).

    Hermitian, with l_p^-1 = l_{-p} and l_p^2 = (E + gamma^0 gamma.p)/m.
    """
    e, m = q.energy, q.m
    g0gp = sum(q.p[i] * (GAMMA[0] @ GAMMA[i + 1]) for i in range(3))
    return ((e + m) * ID4 + g0gp) / np.sqrt(2.0 * m * (e + m))


def lorentz_boost_matrix(q: Momentum) -> np.ndarray:
    """Vector-representation boost L_p taking (m,0,0,0) to (E,p)."""
    e, m = q.energy, q.m
    L = np.zeros((4, 4))
    L[0, 0] = e / m
    L[0, 1:] = q.p / m
    L[1:, 0] = q.p / m
    L[1:, 1:] = np.eye(3) + np.outer(q.p, q.p) / (m * (e + m))
    return L


def theta_tensor(q: Momentum) -> tuple[np.ndarray, np.ndarray]:
    """Space block of L_p and its 3x3 inverse.

    Theta_ij = delta_ij + p^i p^j / (m(E+m)),
    Theta^-1_ij = delta_ij - p^i p^j / (E(E+m)).
    """
    e, m = q.energy, q.m
    pp = np.outer(q.p, q.p)
    theta = np.eye(3) + pp / (m * (e + m))
    theta_inv = np.eye(3) - pp / (e * (e + m))
    return theta, theta_inv


def foldy_wouthuysen(q: Momentum) -> np.ndarray:
    """Unitary transformation (E + m + gamma.p)/sqrt(2E(E+m)) diagonalising H_D."""
    e, m = q.energy, q.m
    gp = sum(q.p[i] * GAMMA[i + 1] for i in range(3))
    return ((e + m) * ID4 + gp) / np.sqrt(2.0 * e * (e + m))


def lorentz_of(lam: np.ndarray) -> np.ndarray:
    """Vector-representation image of a spinor transformation.

    Uses the canonical homomorphism lam^-1 gamma^a lam = Lambda^a_b gamma^b
    and trace orthogonality Tr(gamma^a gamma^b) = 4 eta^{ab}.
    """
    lam_inv = np.linalg.inv(lam)
    L = np.empty((4, 4))
    for a in range(4):
        conj = lam_inv @ GAMMA[a] @ lam
        for b in range(4):
            L[a, b] = np.real(np.trace(conj @ (METRIC[b, b] * GAMMA[b]))) / 4.0
    return L


def lorentz_inverse(L: np.ndarray) -> np.ndarray:
    """Inverse of a Lorentz matrix via eta L^T eta."""
    return METRIC @ L.T @ METRIC


def dirac_adjoint_deviation(mat: np.ndarray) -> float:
    """Deviation from Dirac self-adjointness, || gamma^0 M^+ gamma^0 - M ||."""
    return float(np.max(np.abs(GAMMA[0] @ mat.conj().T @ GAMMA[0] - mat)))
