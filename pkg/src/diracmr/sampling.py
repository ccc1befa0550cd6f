"""Reproducible random sampling for the verification suites.

Uses the counter-based Philox generator (64-bit, splittable) so residual
reports are bit-reproducible across platforms for a given seed.
"""

from __future__ import annotations

import numpy as np

from .algebra import Momentum


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def sample_momenta(
    n: int,
    m: float,
    seed: int,
    lo: float = 0.01,
    hi: float = 10.0,
    avoid_poles: bool = False,
    pole_margin: float = 0.05,
) -> list[Momentum]:
    """Seeded momenta with |p|/m log-uniform in [lo, hi], uniform direction.

    With ``avoid_poles`` directions within ``pole_margin`` of the +/- e3 rays
    are resampled, so helicity-basis evaluations at +p and -p stay far enough
    from the chart singularities for finite differences to be clean.
    """
    rng = make_rng(seed)
    out: list[Momentum] = []
    while len(out) < n:
        mag = m * np.exp(rng.uniform(np.log(lo), np.log(hi)))
        d = rng.standard_normal(3)
        norm = np.linalg.norm(d)
        if norm < 1e-12:
            continue
        d = d / norm
        if avoid_poles and min(1.0 - d[2], 1.0 + d[2]) < pole_margin:
            continue
        out.append(Momentum(d * mag, m))
    return out


def sample_boosts(n: int, seed: int, max_rapidity: float = 1.5) -> list[np.ndarray]:
    """Seeded SL(2,C) elements: random boost times random rotation."""
    from .algebra import boost_param, rotation

    rng = make_rng(seed)
    out = []
    for _ in range(n):
        tau = rng.standard_normal(3)
        tau *= rng.uniform(0.1, max_rapidity) / np.linalg.norm(tau)
        theta = rng.uniform(-np.pi, np.pi, size=3)
        out.append(boost_param(tau) @ rotation(theta))
    return out
