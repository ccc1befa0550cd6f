import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad
from scipy.special import gamma as gamma_fn

from diracmr.polarization import HelicityBasis
from diracmr.wavepacket import (
    NormalizationError,
    PacketProfile,
    PacketStatistics,
    cone_filter,
    expectation_and_dispersion,
    figure_data,
    g_integral,
    isotropic_closed_forms,
    make_isotropic,
    packet_reports,
    position_dispersion_at_time,
    radial_statistics,
    spin_closed_forms,
)

ISO = make_isotropic(1.0, 2.0, 1.0)
GRID = ISO.default_grid()


def report_map(theta_s=0.0, x0=(0, 0, 0)):
    return {r.observable: r for r in packet_reports(ISO, theta_s, x0, GRID)}


def test_parameter_validation():
    with pytest.raises(ValueError):
        make_isotropic(1.0, 0.9, 1.0)  # gamma*pbar <= 1
    with pytest.raises(ValueError):
        make_isotropic(-1.0, 2.0, 1.0)
    with pytest.raises(ValueError):
        ISO.profile(theta_s=4.0)


def test_grid_probe_gaussian():
    probe = np.exp(-np.sum(GRID.nodes**2, axis=1))
    assert abs(GRID.integrate(probe) - np.pi**1.5) < 1e-10
    assert np.all(GRID.weights > 0)


def test_normalization_against_adaptive_quadrature():
    # independent 1d oracle for the closed-form normalization constant
    val, _ = quad(lambda p: 4 * np.pi * p**2 * ISO.radial(p) ** 2, 0, np.inf)
    assert val == pytest.approx(1.0, abs=1e-10)
    # and the grid agrees
    prof = ISO.profile()
    assert abs(GRID.integrate(prof.phi(GRID.nodes) ** 2) - 1.0) < 1e-10


def test_normalization_guard():
    bad = PacketProfile(
        phi=lambda pts: 2.0 * ISO.radial(np.linalg.norm(pts, axis=-1)),
        grad_phi=lambda pts: np.zeros_like(pts),
        m=1.0,
    )
    with pytest.raises(NormalizationError):
        PacketStatistics(bad, GRID)


def test_radial_momentum_closed_forms():
    rep = report_map()
    assert rep["P"].expectation == pytest.approx(2.0, rel=1e-8)
    assert rep["P"].dispersion == pytest.approx(1.0, rel=1e-8)
    # <H^2> = E(pbar)^2 + pbar/(2 gamma) = 6
    h = rep["H"]
    assert h.dispersion + h.expectation**2 == pytest.approx(6.0, rel=1e-8)


def test_position_statistics():
    x0 = (0.5, -0.2, 1.0)
    rep = report_map(x0=x0)
    for i, name in enumerate(("X1", "X2", "X3")):
        assert rep[name].expectation == pytest.approx(x0[i], abs=1e-10)
        assert rep[name].dispersion == pytest.approx(1.0 / 6.0, rel=1e-6)


def test_cartesian_second_moment_is_angular_average():
    rep = report_map()
    for name in ("P1", "P2", "P3"):
        second = rep[name].dispersion + rep[name].expectation ** 2
        assert second == pytest.approx((4.0 + 1.0) / 3.0, rel=1e-6)
        assert rep[name].expectation == pytest.approx(0.0, abs=1e-12)


def test_spin_statistics_analytic():
    for theta in (0.0, 0.4, np.pi / 2, np.pi):
        rep = report_map(theta_s=theta)
        closed = spin_closed_forms(theta)
        for name, (ce, cd) in closed.items():
            assert rep[name].expectation == pytest.approx(ce, abs=1e-12)
            assert rep[name].dispersion == pytest.approx(cd, abs=1e-12)
    # total polarization measures the third spin component exactly
    rep = report_map(theta_s=0.0)
    assert rep["S3"].dispersion == 0.0


def test_velocity_statistics_match_g_integrals():
    rep = report_map()
    closed = isotropic_closed_forms(ISO)
    assert rep["V"].expectation == pytest.approx(closed["V"][0], rel=1e-8)
    assert rep["V"].dispersion == pytest.approx(closed["V"][1], rel=1e-8)
    assert rep["H"].expectation == pytest.approx(closed["H"][0], rel=1e-8)
    for name in ("V1", "V2", "V3"):
        assert rep[name].dispersion == pytest.approx(closed[name][1], rel=1e-8)


def test_angular_momentum_zero_mean():
    rep = report_map(x0=(0.3, 0.0, -0.5))
    for name in ("L1", "L2", "L3"):
        assert rep[name].expectation == pytest.approx(0.0, abs=1e-10)
        assert rep[name].dispersion >= 0.0


def test_dispersion_time_law():
    prof = ISO.profile()
    eng = PacketStatistics(prof, GRID)
    d0 = eng.position_dispersion_at_time(0.0)
    d10 = eng.position_dispersion_at_time(10.0)
    dv = np.array([eng.report(f"V{i}").dispersion for i in (1, 2, 3)])
    assert np.allclose(d10, d0 + 100.0 * dv, rtol=1e-12)
    assert np.allclose(
        position_dispersion_at_time(prof, 2.0, GRID), d0 + 4.0 * dv, rtol=1e-12
    )
    with pytest.raises(ValueError):
        eng.position_dispersion_at_time(-1.0)


def test_peculiar_basis_rejected_for_packets():
    with pytest.raises(NotImplementedError):
        PacketProfile(
            phi=lambda pts: ISO.radial(np.linalg.norm(pts, axis=-1)),
            grad_phi=lambda pts: np.zeros_like(pts),
            m=1.0,
            basis=HelicityBasis(),
        )


def test_cone_filter_isotropic():
    prof = ISO.profile()
    kappa, phir, r, w, prob = cone_filter(prof, (0.3, 0.5, 0.8), 0.01, GRID.p_max)
    assert kappa == pytest.approx(1.0 / (4 * np.pi), rel=1e-12)
    assert np.sum(w * phir**2) == pytest.approx(1.0, rel=1e-12)
    assert prob == pytest.approx((0.01 * kappa) ** 2)
    stats = radial_statistics(phir, r, w, 1.0)
    # filtered radial statistics coincide with the unfiltered ones
    assert stats["P"][0] == pytest.approx(2.0, rel=1e-10)
    assert stats["P"][1] == pytest.approx(1.0, rel=1e-10)
    rep = report_map()
    assert stats["H"][0] == pytest.approx(rep["H"].expectation, rel=1e-10)
    assert stats["V"][1] == pytest.approx(rep["V"].dispersion, rel=1e-8)
    with pytest.raises(ValueError):
        cone_filter(prof, (0, 0, 1), 0.5, GRID.p_max)  # solid angle too large


def test_cone_filter_direction_scaling():
    # <P^i>' = n^i <P>' after filtering along n
    prof = ISO.profile()
    n = np.array([0.3, 0.5, 0.8])
    n = n / np.linalg.norm(n)
    kappa, phir, r, w, _ = cone_filter(prof, n, 0.01, GRID.p_max)
    mean_p = float(np.sum(w * r * phir**2))
    for i in range(3):
        line = prof.phi(np.outer(r, n))
        mean_pi = float(np.sum(w * r**2 * (r * n[i]) * line**2)) / kappa
        assert mean_pi == pytest.approx(n[i] * mean_p, rel=1e-10)


@settings(max_examples=30, deadline=None)
@given(st.floats(0.3, 3.0), st.floats(0.5, 4.0))
def test_g_integral_gamma_reduction(nu, mu):
    # rho = 1 collapses to a Gamma integral
    got = g_integral(nu, 1.0, mu, m=1.7)
    expect = gamma_fn(2 * nu) / mu ** (2 * nu)
    assert got == pytest.approx(expect, rel=1e-10)


def test_g_integral_massless_reduction():
    got = g_integral(1.3, 0.7, 2.0, m=0.0)
    expo = 2 * 1.3 + 2 * 0.7 - 2
    assert got == pytest.approx(gamma_fn(expo) / 2.0**expo, rel=1e-10)


def test_g_integral_guards():
    with pytest.raises(ValueError):
        g_integral(1.0, 1.0, -2.0, 1.0)
    with pytest.raises(ValueError):
        g_integral(-0.2, 1.0, 2.0, 1.0)
    with pytest.raises(ValueError):
        g_integral(0.3, 0.5, 2.0, 0.0)


def test_mean_energy_g_integral_vs_grid():
    # 3d grid quadrature against the adaptive 1d G-integral path
    prof = ISO.profile()
    eng = PacketStatistics(prof, GRID)
    mean_h = eng.report("H").expectation
    closed = 4 * np.pi * ISO.norm**2 * g_integral(ISO.a, 1.5, 2 * ISO.gamma, ISO.m)
    assert mean_h == pytest.approx(closed, rel=1e-8)


def test_figure_data_shapes_and_limits():
    f1 = figure_data(1, points=60)
    f2 = figure_data(2, points=60)
    assert f1.shape == (60, 3) and f2.shape == (60, 3)
    assert np.all(f1[:, 0] > 1.0) and f1[-1, 0] == pytest.approx(7.0)
    assert np.all(f1[:, 1] > 1.0)
    assert np.all(np.diff(f1[:, 1]) < 0)
    assert np.all((f1[:, 2] > 0) & (f1[:, 2] < 1))
    assert np.all(np.diff(f1[:, 2]) > 0)
    assert np.all((f2[:, 1] > 0) & (f2[:, 1] < 1))
    assert np.all(np.diff(f2[:, 1]) > 0)
    assert np.all(f2[:, 2] > 0)
    assert f2[-1, 2] < f2[0, 2]
    # endpoints approach the classical values
    assert abs(f1[-1, 1] - 1.0) < 0.2
    assert abs(f1[-1, 2] - 1.0) < 0.2
    assert abs(f2[-1, 1] - 1.0) < 0.2


def test_figure_data_guards():
    with pytest.raises(ValueError):
        figure_data(3)
    with pytest.raises(ValueError):
        figure_data(1, q_min=0.5)
    with pytest.raises(ValueError):
        figure_data(1, q_min=2.0, q_max=1.0)


def test_expectation_and_dispersion_wrapper():
    prof = ISO.profile(theta_s=0.3)
    rep = expectation_and_dispersion(prof, "S1", GRID)
    assert rep.expectation == pytest.approx(np.sin(0.3) / 2, abs=1e-12)
    with pytest.raises(KeyError):
        expectation_and_dispersion(prof, "Q", GRID)


def test_dispersion_clipping():
    from diracmr.wavepacket import _clip_dispersion

    assert _clip_dispersion(1e-3, "x") == 1e-3
    with pytest.warns(UserWarning):
        assert _clip_dispersion(-1e-12, "x") == 0.0
    with pytest.raises(ValueError):
        _clip_dispersion(-1e-6, "x")
