"""Closed-form limits: small/large coupling expansions of b_x, the massive
oscillator limit (m -> infinity at fixed m omega^2), and the saddle-point
analysis for a biased qubit.

The expansions are diagnostics; the grid solver is the authoritative route
at finite D.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DegenerateGroundStateError
from .model import DimensionlessParams, ModelParams
from .observables import QubitState

ROOT_TOL = 1e-12
DEGENERACY_TOL = 1e-12


def bx_small_alpha(dp: DimensionlessParams) -> float:
    """Weak-coupling expansion b_x = -1 + alpha/(2 D k), k = sqrt(1 - alpha);
    valid for W = 0 and alpha < 1."""
    if dp.big_w != 0.0:
        raise ValueError("small-alpha expansion requires W = 0")
    alpha = dp.alpha()
    if alpha >= 1.0:
        raise ValueError(f"small-alpha expansion requires alpha < 1, got {alpha}")
    return -1.0 + alpha / (2.0 * dp.big_d * math.sqrt(1.0 - alpha))


def bx_large_alpha(dp: DimensionlessParams) -> float:
    """Strong-coupling expansion b_x = -1/alpha - 2/(D alpha^2); valid for
    W = 0 and alpha > 1."""
    if dp.big_w != 0.0:
        raise ValueError("large-alpha expansion requires W = 0")
    alpha = dp.alpha()
    if alpha <= 1.0:
        raise ValueError(f"large-alpha expansion requires alpha > 1, got {alpha}")
    return -1.0 / alpha - 2.0 / (dp.big_d * alpha**2)


def massive_tangle(alpha: float) -> float:
    """Tangle in the massive limit: 0 for alpha <= 1, 1 - 1/alpha^2 above."""
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    if alpha <= 1.0:
        return 0.0
    return 1.0 - 1.0 / alpha**2


@dataclass(frozen=True)
class SaddleSet:
    """Real stationary points of the massive-limit potential
    V(q) = m omega^2 q^2 / 2 - sqrt(Delta^2 + (epsilon + lambda q)^2),
    with the global minimizer and a degeneracy flag (two minima of equal
    depth, as at epsilon = 0 with alpha > 1)."""

    roots: list[float]
    global_min: float
    degenerate: bool = False


def _massive_potential(p: ModelParams, q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    return 0.5 * p.mass * p.omega**2 * q**2 - np.sqrt(
        p.delta**2 + (p.epsilon + p.lambda_ * q) ** 2
    )


def _massive_stationarity(p: ModelParams, q) -> np.ndarray:
    """q - (lambda / m omega^2) (epsilon + lambda q) / Delta(q); zero at
    stationary points of the massive potential."""
    q = np.asarray(q, dtype=float)
    gap = np.sqrt(p.delta**2 + (p.epsilon + p.lambda_ * q) ** 2)
    return q - p.lambda_ / (p.mass * p.omega**2) * (p.epsilon + p.lambda_ * q) / gap


def saddle_points(p: ModelParams) -> SaddleSet:
    """All real solutions of the massive-limit stationarity condition, found
    by a sign-change scan plus bisection, and the lowest-potential root."""
    if p.delta <= 0:
        raise ValueError("saddle_points requires Delta > 0")
    half = 2.0 * (abs(p.epsilon) + p.lambda_ * _q0_scale(p) + p.delta) / (
        p.mass * p.omega**2
    )
    step = min(0.01, half / 1000.0) if p.lambda_ > 0 else half / 1000.0
    for _ in range(4):
        qs = np.arange(-half, half + step, step)
        fs = _massive_stationarity(p, qs)
        roots: list[float] = []
        for i in range(len(qs) - 1):
            if fs[i] == 0.0:
                roots.append(float(qs[i]))
            elif fs[i] * fs[i + 1] < 0.0:
                roots.append(
                    brentq(
                        lambda x: float(_massive_stationarity(p, x)),
                        float(qs[i]),
                        float(qs[i + 1]),
                        xtol=ROOT_TOL,
                    )
                )
        if fs[-1] == 0.0:
            roots.append(float(qs[-1]))
        if roots and abs(max(roots, key=abs)) < 0.9 * half:
            break
        half *= 2.0
    else:
        raise ValueError("saddle-point scan range exhausted")
    roots = sorted(set(roots))
    energies = [float(_massive_potential(p, r)) for r in roots]
    order = np.argsort(energies)
    best, second = order[0], (order[1] if len(order) > 1 else None)
    scale = max(abs(energies[best]), 1.0)
    degenerate = (
        second is not None
        and abs(energies[second] - energies[best]) < DEGENERACY_TOL * scale
        and abs(roots[best] - roots[second]) > ROOT_TOL
    )
    return SaddleSet(roots=roots, global_min=roots[best], degenerate=degenerate)


def _q0_scale(p: ModelParams) -> float:
    """Length scale of the displaced wells (W = 0 closed form, or 1 below
    threshold)."""
    alpha = p.lambda_**2 / (p.mass * p.omega**2 * p.delta)
    if alpha > 1.0 and p.lambda_ > 0:
        return p.delta * math.sqrt(alpha**2 - 1.0) / p.lambda_
    return 1.0


def massive_bloch(p: ModelParams, well: str | None = None) -> QubitState:
    """Bloch vector at the global saddle: b_x = -Delta/Delta(q_m),
    b_z = -(epsilon + lambda q_m)/Delta(q_m); unit norm by construction.

    When the two wells are exactly degenerate (epsilon = 0, alpha > 1) a
    well must be selected explicitly via well = "positive" or "negative",
    otherwise DegenerateGroundStateError is raised: the zero-temperature
    state is an equal mixture there and a single Bloch vector would
    fabricate symmetry breaking.
    """
    saddles = saddle_points(p)
    q_m = saddles.global_min
    if saddles.degenerate:
        if well == "positive":
            q_m = max(saddles.roots)
        elif well == "negative":
            q_m = min(saddles.roots)
        else:
            raise DegenerateGroundStateError(
                "degenerate wells: pass well='positive' or well='negative'"
            )
    gap = math.sqrt(p.delta**2 + (p.epsilon + p.lambda_ * q_m) ** 2)
    return QubitState(b_x=-p.delta / gap, b_z=-(p.epsilon + p.lambda_ * q_m) / gap)
