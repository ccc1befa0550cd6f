"""One-particle wave packets: preparation, detection and statistics.

A packet is a normalized scalar profile phi(p) times a constant polarization
spinor (cos(theta_s/2), sin(theta_s/2)) and a translation phase
exp(-i x0.p).  Expectation values and dispersions of the one-particle
observables are momentum-space quadratures; no position grids ever appear.

The packet engine works in a common (momentum independent) polarization
basis, where the covariant derivative reduces to d/dp.  Peculiar bases are
handled by the associated-operator machinery, not here.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln

from .algebra import PAULI
from .polarization import CommonBasis, PolarizationBasis

OBSERVABLES = (
    "H",
    "P1",
    "P2",
    "P3",
    "P",
    "V1",
    "V2",
    "V3",
    "V",
    "X1",
    "X2",
    "X3",
    "S1",
    "S2",
    "S3",
    "Ws",
    "L1",
    "L2",
    "L3",
)

_NEG_DISP_TOL = 1e-10


class NormalizationError(ValueError):
    """Profile does not integrate to one on the quadrature grid."""


# ---------------------------------------------------------------------------
# quadrature grid


@dataclass(frozen=True)
class QuadratureGrid:
    """Product quadrature in spherical momentum coordinates.

    Gauss-Legendre radially on (0, p_max], Gauss-Legendre in cos(theta) and a
    uniform (trapezoidal, exact for trig polynomials) rule in phi.  Node
    arrays are flattened; ``weights`` include the p^2 Jacobian so that
    sum(w * f) approximates the d^3p integral of f.
    """

    p_max: float
    n_radial: int = 200
    n_cos: int = 32
    n_phi: int = 64

    # filled in __post_init__
    radial_nodes: np.ndarray = field(init=False, repr=False)
    radial_weights: np.ndarray = field(init=False, repr=False)
    nodes: np.ndarray = field(init=False, repr=False)
    weights: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        x, wx = np.polynomial.legendre.leggauss(self.n_radial)
        r = 0.5 * self.p_max * (x + 1.0)
        wr = 0.5 * self.p_max * wx
        c, wc = np.polynomial.legendre.leggauss(self.n_cos)
        phi = 2.0 * np.pi * np.arange(self.n_phi) / self.n_phi
        wphi = 2.0 * np.pi / self.n_phi

        sin_t = np.sqrt(1.0 - c**2)
        # node layout: radial slowest, then cos(theta), then phi
        pr = np.repeat(r, self.n_cos * self.n_phi)
        ct = np.tile(np.repeat(c, self.n_phi), self.n_radial)
        st = np.tile(np.repeat(sin_t, self.n_phi), self.n_radial)
        ph = np.tile(phi, self.n_radial * self.n_cos)
        nodes = np.column_stack(
            [pr * st * np.cos(ph), pr * st * np.sin(ph), pr * ct]
        )
        w = (
            np.repeat(wr * r**2, self.n_cos * self.n_phi)
            * np.tile(np.repeat(wc, self.n_phi), self.n_radial)
            * wphi
        )
        object.__setattr__(self, "radial_nodes", r)
        object.__setattr__(self, "radial_weights", wr)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", w)

    def integrate(self, values: np.ndarray) -> float | complex:
        # numpy reductions use pairwise summation: deterministic for a fixed grid
        return np.sum(self.weights * values)


# ---------------------------------------------------------------------------
# profiles


@dataclass(frozen=True)
class PacketProfile:
    """Scalar profile with gradient, polarization angle and preparation point.

    ``phi`` and ``grad_phi`` take an (N, 3) array of momenta; ``phi`` returns
    (N,), ``grad_phi`` returns (N, 3).  theta_s in [0, pi]; the polarization
    spinor is (cos(theta_s/2), sin(theta_s/2)) in the common basis.
    """

    phi: Callable[[np.ndarray], np.ndarray]
    grad_phi: Callable[[np.ndarray], np.ndarray]
    m: float
    theta_s: float = 0.0
    x0: np.ndarray = field(default_factory=lambda: np.zeros(3))
    basis: PolarizationBasis = field(default_factory=CommonBasis)

    def __post_init__(self):
        object.__setattr__(self, "x0", np.asarray(self.x0, dtype=float).reshape(3))
        if not 0.0 <= self.theta_s <= np.pi:
            raise ValueError("theta_s must lie in [0, pi]")
        if self.basis.kind != "common":
            raise NotImplementedError(
                "packet statistics are implemented for common polarization bases"
            )

    @property
    def chi(self) -> np.ndarray:
        return np.array(
            [np.cos(self.theta_s / 2.0), np.sin(self.theta_s / 2.0)], dtype=complex
        )


@dataclass(frozen=True)
class IsotropicProfile:
    """Radial profile phi(p) = N p^(g pbar - 3/2) exp(-g p).

    pbar is the radial-momentum expectation value and g pbar > 1 is required
    for the position dispersion to be finite.
    """

    gamma: float
    pbar: float
    m: float

    def __post_init__(self):
        if self.gamma <= 0 or self.pbar <= 0:
            raise ValueError("gamma and pbar must be positive")
        if self.gamma * self.pbar <= 1.0:
            raise ValueError(
                f"gamma*pbar = {self.gamma * self.pbar:g} <= 1: "
                "position dispersion would diverge"
            )

    @property
    def a(self) -> float:
        return self.gamma * self.pbar

    @property
    def norm(self) -> float:
        # N = (2 gamma)^(g pbar) / (2 sqrt(pi Gamma(2 g pbar)))
        logn = (
            self.a * np.log(2.0 * self.gamma)
            - 0.5 * np.log(np.pi)
            - 0.5 * gammaln(2.0 * self.a)
            - np.log(2.0)
        )
        return float(np.exp(logn))

    def radial(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return self.norm * p ** (self.a - 1.5) * np.exp(-self.gamma * p)

    def radial_derivative(self, p: np.ndarray) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        return ((self.a - 1.5) / p - self.gamma) * self.radial(p)

    def profile(self, theta_s: float = 0.0, x0=(0.0, 0.0, 0.0)) -> PacketProfile:
        def phi(pts: np.ndarray) -> np.ndarray:
            return self.radial(np.linalg.norm(pts, axis=-1))

        def grad_phi(pts: np.ndarray) -> np.ndarray:
            mag = np.linalg.norm(pts, axis=-1)
            return pts * (self.radial_derivative(mag) / mag)[..., None]

        return PacketProfile(phi, grad_phi, self.m, theta_s, np.asarray(x0))

    def default_grid(self, n_radial: int = 200, n_cos: int = 32, n_phi: int = 64):
        # p_max chosen so the exp(-2 gamma p) tail is far below double precision
        return QuadratureGrid(
            (self.a + 40.0) / self.gamma, n_radial, n_cos, n_phi
        )


def make_isotropic(gamma: float, pbar: float, m: float) -> IsotropicProfile:
    return IsotropicProfile(gamma, pbar, m)


def expectation_and_dispersion(
    profile: PacketProfile, observable: str, grid: "QuadratureGrid"
) -> "StatisticsReport":
    """Grid-quadrature statistics of one observable for an arbitrary profile."""
    return PacketStatistics(profile, grid).report(observable)


def position_dispersion_at_time(
    profile: PacketProfile, t: float, grid: "QuadratureGrid"
) -> np.ndarray:
    """disp(X^i(t)) = disp(X^i) + t^2 disp(V^i) for each component."""
    return PacketStatistics(profile, grid).position_dispersion_at_time(t)


# ---------------------------------------------------------------------------
# statistics


@dataclass(frozen=True)
class StatisticsReport:
    observable: str
    expectation: float
    dispersion: float
    uncertainty: float
    quad_error: float
    closed_expectation: float | None = None
    closed_dispersion: float | None = None

    @property
    def rel_error(self) -> float | None:
        ref_pairs = [
            (self.expectation, self.closed_expectation),
            (self.dispersion, self.closed_dispersion),
        ]
        errs = []
        for got, ref in ref_pairs:
            if ref is None:
                continue
            scale = max(abs(ref), 1.0)
            errs.append(abs(got - ref) / scale)
        return max(errs) if errs else None


def _clip_dispersion(value: float, name: str) -> float:
    if value < -_NEG_DISP_TOL:
        raise ValueError(f"dispersion of {name} is negative beyond tolerance: {value}")
    if value < 0.0:
        warnings.warn(f"clipping tiny negative dispersion of {name} ({value:.2e})")
        return 0.0
    return value


class PacketStatistics:
    """Grid-quadrature engine for expectation values and dispersions.

    All observables act on alpha(p) = phi(p) exp(-i x0.p) chi; the engine
    evaluates <A> = <alpha, A alpha> and disp = <A alpha, A alpha> - <A>^2
    as plain reductions over the grid nodes.
    """

    def __init__(self, profile: PacketProfile, grid: QuadratureGrid):
        self.profile = profile
        self.grid = grid
        pts = grid.nodes
        self.phi = profile.phi(pts)
        self.gphi = profile.grad_phi(pts)
        self.pmag = np.linalg.norm(pts, axis=1)
        self.energy = np.sqrt(self.pmag**2 + profile.m**2)
        self.norm = float(grid.integrate(self.phi**2))
        self.tail = self._tail_estimate()
        if abs(self.norm - 1.0) > 1e-6:
            raise NormalizationError(
                f"profile norm on grid is {self.norm!r}, expected 1"
            )

    def _tail_estimate(self) -> float:
        # crude upper bound on the radial tail mass beyond the grid
        r = self.grid.radial_nodes
        edge = r[-1]
        edge_density = float(np.max(self.phi[self.pmag > 0.98 * edge] ** 2, initial=0.0))
        return 4.0 * np.pi * edge**2 * edge_density * max(self.grid.p_max - edge, 0.0)

    @property
    def quad_error(self) -> float:
        return max(abs(self.norm - 1.0), self.tail)

    # -- helpers ---------------------------------------------------------

    def _mult_stats(self, values: np.ndarray) -> tuple[float, float]:
        dens = self.phi**2
        mean = float(self.grid.integrate(values * dens))
        second = float(self.grid.integrate(values**2 * dens))
        return mean, second - mean**2

    def _x_action(self, i: int) -> np.ndarray:
        """Scalar factor of (X~^i alpha)(p) relative to exp(-i x0.p) chi."""
        return 1j * self.gphi[:, i] + self.profile.x0[i] * self.phi

    def _l_action(self, i: int) -> np.ndarray:
        """Scalar factor of (L~_i alpha)(p), common basis."""
        j, k = (i + 1) % 3, (i + 2) % 3
        pts = self.grid.nodes
        gx = self.gphi - 1j * self.profile.x0[None, :] * self.phi[:, None]
        return -1j * (pts[:, j] * gx[:, k] - pts[:, k] * gx[:, j])

    def _spin_matrix(self, name: str) -> np.ndarray:
        if name == "Ws":
            return 0.5 * PAULI[2]
        return 0.5 * self.profile.basis.sigma(None)[int(name[1]) - 1]

    # -- public ----------------------------------------------------------

    def report(self, observable: str) -> StatisticsReport:
        if observable not in OBSERVABLES:
            raise KeyError(f"unknown observable {observable!r}")
        name = observable
        if name == "H":
            mean, disp = self._mult_stats(self.energy)
        elif name == "P":
            mean, disp = self._mult_stats(self.pmag)
        elif name == "V":
            mean, disp = self._mult_stats(self.pmag / self.energy)
        elif name[0] == "P":
            mean, disp = self._mult_stats(self.grid.nodes[:, int(name[1]) - 1])
        elif name[0] == "V":
            mean, disp = self._mult_stats(
                self.grid.nodes[:, int(name[1]) - 1] / self.energy
            )
        elif name[0] == "X":
            i = int(name[1]) - 1
            act = self._x_action(i)
            mean = float(np.real(self.grid.integrate(self.phi * act)))
            second = float(np.real(self.grid.integrate(np.abs(act) ** 2)))
            disp = second - mean**2
        elif name[0] == "L":
            i = int(name[1]) - 1
            act = self._l_action(i)
            mean = float(np.real(self.grid.integrate(self.phi * act)))
            second = float(np.real(self.grid.integrate(np.abs(act) ** 2)))
            disp = second - mean**2
        else:  # spin observables, profile independent
            chi = self.profile.chi
            sm = self._spin_matrix(name)
            mean = float(np.real(chi.conj() @ sm @ chi))
            second = float(np.real(chi.conj() @ sm @ sm @ chi))
            disp = second - mean**2
        return StatisticsReport(
            name,
            mean,
            _clip_dispersion(disp, name),
            float(np.sqrt(max(disp, 0.0))),
            self.quad_error,
        )

    def position_dispersion_at_time(self, t: float) -> np.ndarray:
        """disp(X^i(t)) = disp(X^i) + t^2 disp(V^i), componentwise."""
        if t < 0:
            raise ValueError("t must be nonnegative")
        out = np.empty(3)
        for i in range(3):
            dx = self.report(f"X{i + 1}").dispersion
            dv = self.report(f"V{i + 1}").dispersion
            out[i] = dx + t * t * dv
        return out


# ---------------------------------------------------------------------------
# closed forms for the isotropic packet


def isotropic_closed_forms(iso: IsotropicProfile) -> dict[str, tuple]:
    """(expectation, dispersion) closed forms; None where no closed form is used."""
    a, g = iso.a, iso.gamma
    e2 = iso.pbar**2 + iso.m**2 + iso.pbar / (2 * g)  # <H^2>
    mean_h = 4 * np.pi * iso.norm**2 * g_integral(a, 1.5, 2 * g, iso.m)
    mean_v = 4 * np.pi * iso.norm**2 * g_integral(a + 0.5, 0.5, 2 * g, iso.m)
    mean_v2 = 4 * np.pi * iso.norm**2 * g_integral(a + 1.0, 0.0, 2 * g, iso.m)
    disp_x = g**2 / (6.0 * (a - 1.0))
    disp_pi = (iso.pbar**2 + iso.pbar / (2 * g)) / 3.0
    out = {
        "H": (mean_h, e2 - mean_h**2),
        "P": (iso.pbar, iso.pbar / (2 * g)),
        "V": (mean_v, mean_v2 - mean_v**2),
    }
    for i in "123":
        out["P" + i] = (0.0, disp_pi)
        out["V" + i] = (0.0, mean_v2 / 3.0)
        out["X" + i] = (None, disp_x)
    return out


def spin_closed_forms(theta_s: float) -> dict[str, tuple[float, float]]:
    """Profile-independent spin statistics for polarization angle theta_s."""
    s, c = np.sin(theta_s), np.cos(theta_s)
    return {
        "S1": (s / 2.0, c * c / 4.0),
        "S2": (0.0, 0.25),
        "S3": (c / 2.0, s * s / 4.0),
        "Ws": (c / 2.0, s * s / 4.0),
    }


def packet_reports(
    iso: IsotropicProfile,
    theta_s: float = 0.0,
    x0=(0.0, 0.0, 0.0),
    grid: QuadratureGrid | None = None,
) -> list[StatisticsReport]:
    """Statistics table for an isotropic packet with closed forms attached."""
    profile = iso.profile(theta_s, x0)
    grid = grid or iso.default_grid()
    eng = PacketStatistics(profile, grid)
    closed = isotropic_closed_forms(iso)
    closed.update(spin_closed_forms(theta_s))
    x0 = np.asarray(x0, dtype=float)
    out = []
    for name in OBSERVABLES:
        rep = eng.report(name)
        ce, cd = closed.get(name, (None, None))
        if name[0] == "X":
            ce = float(x0[int(name[1]) - 1])
        out.append(
            StatisticsReport(
                name,
                rep.expectation,
                rep.dispersion,
                rep.uncertainty,
                rep.quad_error,
                ce,
                cd,
            )
        )
    return out


# ---------------------------------------------------------------------------
# detection: cone filtering and radial statistics


def cone_filter(profile: PacketProfile, n, d_omega: float, p_max: float, n_radial: int = 400):
    """Filter momenta into a narrow cone around direction n.

    Returns (kappa, radial profile values on the Gauss-Legendre nodes, nodes,
    weights, detection probability |d_omega * kappa|^2).  The filtered radial
    profile is phi'(p) = p phi(n p)/sqrt(kappa), normalized on (0, inf).
    """
    n = np.asarray(n, dtype=float)
    n = n / np.linalg.norm(n)
    if d_omega > 0.1:
        raise ValueError("cone solid angle must be small (<= 0.1 sr)")
    x, wx = np.polynomial.legendre.leggauss(n_radial)
    r = 0.5 * p_max * (x + 1.0)
    w = 0.5 * p_max * wx
    line = profile.phi(np.outer(r, n))
    kappa = float(np.sum(w * r**2 * line**2))
    if kappa <= 0.0:
        raise ValueError("profile vanishes along the filter direction")
    phi_rad = r * line / np.sqrt(kappa)
    prob = (d_omega * kappa) ** 2
    return kappa, phi_rad, r, w, prob


def radial_statistics(phi_rad: np.ndarray, r: np.ndarray, w: np.ndarray, m: float):
    """Radial H, P, V statistics of a normalized one-dimensional profile."""
    dens = phi_rad**2
    e = np.sqrt(r**2 + m**2)
    out = {}
    for name, vals in (("H", e), ("P", r), ("V", r / e)):
        mean = float(np.sum(w * vals * dens))
        second = float(np.sum(w * vals**2 * dens))
        out[name] = (mean, second - mean**2)
    return out


# ---------------------------------------------------------------------------
# auxiliary integrals and figure data


def g_integral(nu: float, rho: float, mu: float, m: float) -> float:
    """G(nu, rho; mu) = int_0^inf p^(2nu-1) (p^2+m^2)^(rho-1) exp(-mu p) dp.

    Evaluated by adaptive quadrature of the defining integral.
    """
    if mu <= 0:
        raise ValueError("mu must be positive for convergence")
    if m > 0 and nu <= 0:
        raise ValueError("nu must be positive for integrability at 0")
    if m == 0 and (2 * nu + 2 * rho - 2) <= 0:
        raise ValueError("2nu + 2rho - 2 must be positive for m = 0")

    def f(p):
        return p ** (2 * nu - 1) * (p * p + m * m) ** (rho - 1) * np.exp(-mu * p)

    val, _ = quad(f, 0.0, np.inf, epsabs=1e-13, epsrel=1e-12, limit=300)
    return float(val)


def figure_data(
    which: int, q_min: float = 1.0, q_max: float = 7.0, points: int = 60,
    gamma_m: float = 1.0,
) -> np.ndarray:
    """Ratio curves of packet energy/velocity statistics against q = gamma*pbar.

    Figure 1 columns: q, <H>/E(pbar), 2 gamma disp(H)/pbar.
    Figure 2 columns: q, <V>/V(pbar), disp(V).
    The sampled grid excludes q_min itself so the default range is (1, 7].
    """
    if which not in (1, 2):
        raise ValueError("figure index must be 1 or 2")
    if q_min < 1.0 or q_max <= q_min:
        raise ValueError("need 1 <= q_min < q_max")
    if points < 1:
        raise ValueError("need at least one point")
    m = 1.0
    gamma = gamma_m / m
    rows = np.empty((points, 3))
    for k in range(points):
        qv = q_min + (q_max - q_min) * (k + 1) / points
        if qv <= 1.0:
            raise ValueError("sampled q must exceed 1 (gamma*pbar > 1)")
        iso = IsotropicProfile(gamma, qv / gamma, m)
        pref = 4 * np.pi * iso.norm**2
        e_bar = np.sqrt(iso.pbar**2 + m**2)
        if which == 1:
            mean_h = pref * g_integral(iso.a, 1.5, 2 * gamma, m)
            disp_h = iso.pbar**2 + m**2 + iso.pbar / (2 * gamma) - mean_h**2
            rows[k] = (qv, mean_h / e_bar, 2 * gamma * disp_h / iso.pbar)
        else:
            mean_v = pref * g_integral(iso.a + 0.5, 0.5, 2 * gamma, m)
            mean_v2 = pref * g_integral(iso.a + 1.0, 0.0, 2 * gamma, m)
            rows[k] = (qv, mean_v / (iso.pbar / e_bar), mean_v2 - mean_v**2)
    return rows
