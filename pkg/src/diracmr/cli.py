"""Command-line front end: verification suites, packet statistics, figure
data tables and oscillating-kernel evaluation.

Numbers are printed with 17 significant digits and runs are byte-reproducible
for identical configuration.  Exit codes: 0 success, 1 failed identity,
2 usage or configuration error.
"""

from __future__ import annotations

import sys

import click
import numpy as np

from .algebra import Momentum
from .associated import KERNEL_CATALOG, matrix_elements_diag
from .operators import OPERATOR_CATALOG
from .polarization import PoleError, make_basis
from .verify import SUITE_ORDER, run_suite
from .wavepacket import IsotropicProfile, figure_data, packet_reports

SUITE_CHOICES = ("all",) + SUITE_ORDER


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _parse_vec(value: str, name: str) -> np.ndarray:
    try:
        parts = [float(v) for v in value.split(",")]
    except ValueError:
        raise click.UsageError(f"{name} must be three comma-separated numbers")
    if len(parts) != 3:
        raise click.UsageError(f"{name} must have exactly three components")
    return np.array(parts)


def _load_config(ctx: click.Context, param, value):
    """Flat key=value file; keys use the flag names with '-' or '_'."""
    if not value:
        return value
    defaults: dict[str, str] = {}
    try:
        with open(value) as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise click.UsageError(
                        f"{value}:{lineno}: expected key=value, got {raw.strip()!r}"
                    )
                key, _, val = line.partition("=")
                defaults[key.strip().replace("-", "_")] = val.strip()
    except OSError as exc:
        raise click.UsageError(f"cannot read config file: {exc}")
    ctx.default_map = {**(ctx.default_map or {}), **defaults}
    return value


def config_option(fn):
    return click.option(
        "--config",
        type=str,
        default=None,
        is_eager=True,
        expose_value=False,
        callback=_load_config,
        help="Flat key=value config file; flags override file values.",
    )(fn)


@click.group()
def main():
    """Momentum-space operator toolkit for the free Dirac field."""


@main.command()
@config_option
@click.option("--suite", type=click.Choice(SUITE_CHOICES), default="all", show_default=True)
@click.option("--samples", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=7, show_default=True)
@click.option("--mass", type=float, default=1.0, show_default=True)
@click.option("--tol", type=float, default=None, help="Override every check tolerance.")
@click.option("--out", type=str, default=None, help="Write the report to a file.")
def verify(suite, samples, seed, mass, tol, out):
    """Run a named identity suite and report residuals."""
    if samples < 1:
        raise click.UsageError("samples must be positive")
    if mass <= 0:
        raise click.UsageError("mass must be positive")
    results = run_suite(suite, samples=samples, seed=seed, mass=mass, tol=tol)
    lines = [
        f"# diracmr verify suite={suite} samples={samples} seed={seed} "
        f"mass={_fmt(mass)} tol={'default' if tol is None else _fmt(tol)}"
    ]
    failures = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        failures += 0 if r.passed else 1
        lines.append(
            f"{status} {r.suite}/{r.name} residual={_fmt(r.residual)} tol={_fmt(r.tol)}"
        )
    lines.append(f"# summary: checks={len(results)} failures={failures}")
    _emit("\n".join(lines) + "\n", out)
    if failures:
        sys.exit(1)


@main.command()
@config_option
@click.option("--gamma", type=float, default=1.0, show_default=True)
@click.option("--pbar", type=float, default=2.0, show_default=True)
@click.option("--mass", type=float, default=1.0, show_default=True)
@click.option("--theta-s", type=float, default=0.0, show_default=True)
@click.option("--x0", type=str, default="0,0,0", show_default=True)
@click.option("--grid-radial", type=int, default=200, show_default=True)
@click.option("--grid-cos", type=int, default=32, show_default=True)
@click.option("--grid-phi", type=int, default=64, show_default=True)
@click.option("--out", type=str, default=None)
def packet(gamma, pbar, mass, theta_s, x0, grid_radial, grid_cos, grid_phi, out):
    """Statistics table of an isotropic one-particle wave packet."""
    x0v = _parse_vec(x0, "--x0")
    try:
        iso = IsotropicProfile(gamma, pbar, mass)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if not 0.0 <= theta_s <= np.pi:
        raise click.UsageError("theta-s must lie in [0, pi]")
    grid = iso.default_grid(grid_radial, grid_cos, grid_phi)
    reports = packet_reports(iso, theta_s, x0v, grid)
    rows = [
        "observable,expectation,dispersion,uncertainty,"
        "closed_expectation,closed_dispersion,rel_error,quad_error"
    ]
    for r in reports:
        ce = _fmt(r.closed_expectation) if r.closed_expectation is not None else ""
        cd = _fmt(r.closed_dispersion) if r.closed_dispersion is not None else ""
        re_ = _fmt(r.rel_error) if r.rel_error is not None else ""
        rows.append(
            f"{r.observable},{_fmt(r.expectation)},{_fmt(r.dispersion)},"
            f"{_fmt(r.uncertainty)},{ce},{cd},{re_},{_fmt(r.quad_error)}"
        )
    _emit("\n".join(rows) + "\n", out)


@main.command()
@config_option
@click.option("--which", type=click.IntRange(1, 2), default=1, show_default=True)
@click.option("--q-min", type=float, default=1.0, show_default=True)
@click.option("--q-max", type=float, default=7.0, show_default=True)
@click.option("--points", type=int, default=60, show_default=True)
@click.option("--gamma-m", type=float, default=1.0, show_default=True)
@click.option("--out", type=str, default=None)
def figures(which, q_min, q_max, points, gamma_m, out):
    """Emit the ratio curves of the energy/velocity statistics versus q."""
    try:
        rows = figure_data(which, q_min, q_max, points, gamma_m)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    header = (
        "q,mean_H_over_E,scaled_disp_H" if which == 1 else "q,mean_V_over_V,disp_V"
    )
    body = [header]
    for row in rows:
        body.append(",".join(_fmt(v) for v in row))
    _emit("\n".join(body) + "\n", out)


@main.command()
@config_option
@click.option("--name", type=click.Choice(tuple(KERNEL_CATALOG)), required=True)
@click.option("--p", type=str, default="0,0,1", show_default=True)
@click.option("--t", type=float, default=0.0, show_default=True)
@click.option("--mass", type=float, default=1.0, show_default=True)
@click.option(
    "--basis", type=click.Choice(("common", "helicity")), default="common",
    show_default=True,
)
@click.option("--out", type=str, default=None)
def kernel(name, p, t, mass, basis, out):
    """Evaluate an oscillating (zitterbewegung) kernel at (t, p)."""
    pv = _parse_vec(p, "--p")
    if mass <= 0:
        raise click.UsageError("mass must be positive")
    q = Momentum(pv, mass)
    b = make_basis(basis)
    ker = KERNEL_CATALOG[name]
    try:
        val = ker(q, t, b)
        val0 = ker(q, 0.0, b)
        cross = ker.from_offdiag(q, t, b)
        parent_plus, parent_minus = matrix_elements_diag(
            OPERATOR_CATALOG[ker.parent], q, b
        )
    except PoleError as exc:
        raise click.UsageError(f"momentum on a basis pole: {exc}")
    e = q.energy
    phase_resid = float(np.max(np.abs(val - np.exp(2j * e * t) * val0)))
    diag_norm = float(max(np.max(np.abs(parent_plus)), np.max(np.abs(parent_minus))))
    lines = [
        f"# kernel {name} parent={ker.parent} basis={basis}",
        f"# p=({_fmt(pv[0])}, {_fmt(pv[1])}, {_fmt(pv[2])}) t={_fmt(t)} "
        f"mass={_fmt(mass)} E={_fmt(e)}",
        f"# oscillation frequency 2E = {_fmt(2 * e)}",
        f"# phase check |K(t)-exp(2iEt)K(0)| = {_fmt(phase_resid)}",
        f"# machinery cross-check |K - scale*offdiag(parent)| = "
        f"{_fmt(float(np.max(np.abs(val - cross))))}",
        f"# parent diagonal associated part max|.| = {_fmt(diag_norm)}",
    ]
    for c in range(val.shape[0]):
        label = f"component {c + 1}" if val.shape[0] > 1 else "scalar"
        lines.append(f"{label}:")
        for row in val[c]:
            lines.append(
                "  " + "  ".join(f"{z.real:+.17g}{z.imag:+.17g}j" for z in row)
            )
        lines.append(
            "  |K| = " + "  ".join(_fmt(abs(z)) for z in val[c].ravel())
        )
    _emit("\n".join(lines) + "\n", out)


if __name__ == "__main__":
    main()
