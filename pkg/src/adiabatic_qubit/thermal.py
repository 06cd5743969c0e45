"""Thermal state of the massive-limit model (oscillator kinetic energy
dropped) and its beta -> infinity Bloch vector.

All integrands are Gaussians times exp(+beta * gap), which overflows double
precision long before beta = 200 at Delta = 5.  Every integral is therefore
carried in log space: cosh/sinh enter through exponent-shifted logarithms and
only ratios of integrals are ever exponentiated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .asymptotics import saddle_points
from .errors import ConvergenceError, DegenerateGroundStateError
from .model import ModelParams
from .observables import QubitState

QUADRATURE_RTOL = 1e-8
WINDOW_SIGMAS = 10.0


@dataclass(frozen=True)
class ThermalParams:
    beta: float
    model: ModelParams

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")


@dataclass(frozen=True)
class ExtrapolatedBloch:
    """beta -> infinity Bloch vector from a 1/beta fit, with the worst
    pointwise fit residual over the input ladder."""

    state: QubitState
    residual: float


def _log_cosh(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    return ax + np.log1p(np.exp(-2.0 * ax)) - math.log(2.0)


def _log_sinh(x: np.ndarray) -> np.ndarray:
    """log sinh for x >= 0; -inf at x = 0."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore"):
        return x + np.log1p(-np.exp(-2.0 * x)) - math.log(2.0)


def _gap(p: ModelParams, q: np.ndarray) -> np.ndarray:
    return np.sqrt(p.delta**2 + (p.epsilon + p.lambda_ * np.asarray(q, float)) ** 2)


def _integration_window(tp: ThermalParams) -> tuple[float, float, list[float]]:
    """Window covering the Gaussian weight and every saddle region, plus the
    interior breakpoints handed to the quadrature."""
    p = tp.model
    sigma = 1.0 / math.sqrt(tp.beta * p.mass * p.omega**2)
    centers = [0.0]
    if p.delta > 0 and p.lambda_ > 0:
        centers.extend(saddle_points(p).roots)
    if p.lambda_ > 0:
        centers.append(-p.epsilon / p.lambda_)
    lo = min(centers) - WINDOW_SIGMAS * sigma
    hi = max(centers) + WINDOW_SIGMAS * sigma
    inner = sorted(c for c in centers if lo < c < hi)
    return lo, hi, inner


def _log_integral(log_f, lo: float, hi: float, inner: list[float]) -> float:
    """log of integral of exp(log_f) over [lo, hi], peak-shifted for range."""
    qs = np.linspace(lo, hi, 8001)
    with np.errstate(invalid="ignore"):
        shift = float(np.nanmax(log_f(qs)))
    if not math.isfinite(shift):
        return -math.inf
    with np.errstate(over="ignore", invalid="ignore"):
        val, err = quad(
            lambda q: float(np.exp(log_f(np.asarray([q]))[0] - shift)),
            lo,
            hi,
            points=inner,
            limit=400,
            epsabs=1e-300,
            epsrel=1e-11,
        )
    if val <= 0.0:
        return -math.inf
    if err / val > QUADRATURE_RTOL:
        raise ConvergenceError(
            f"quadrature relative error {err / val:.2e} above {QUADRATURE_RTOL}"
        )
    return shift + math.log(val)


def log_partition_function(tp: ThermalParams) -> float:
    """log Z(beta) for Z = 2 int dq exp(-beta m w^2 q^2 / 2) cosh(beta gap(q))."""
    p = tp.model
    lo, hi, inner = _integration_window(tp)

    def log_f(q):
        return -0.5 * tp.beta * p.mass * p.omega**2 * q**2 + _log_cosh(
            tp.beta * _gap(p, q)
        )

    return math.log(2.0) + _log_integral(log_f, lo, hi, inner)


def partition_function(tp: ThermalParams) -> float:
    """Z(beta); overflows to inf for very large beta * gap, use
    log_partition_function there."""
    return math.exp(log_partition_function(tp))


def _log_weighted_sinh_integral(tp: ThermalParams, log_weight, lo, hi, inner) -> float:
    p = tp.model

    def log_f(q):
        q = np.asarray(q, dtype=float)
        return (
            log_weight(q)
            - 0.5 * tp.beta * p.mass * p.omega**2 * q**2
            + _log_sinh(tp.beta * _gap(p, q))
        )

    return _log_integral(log_f, lo, hi, inner)


def thermal_bloch(tp: ThermalParams) -> QubitState:
    """Thermal Bloch vector of the reduced qubit in the massive limit:

        b_x = -(2/Z) int dq (Delta/gap) exp(-beta m w^2 q^2/2) sinh(beta gap)

    and the analogue for b_z with weight (epsilon + lambda q)/gap.
    """
    p = tp.model
    lo, hi, inner = _integration_window(tp)
    log_z = log_partition_function(tp)

    b_x = 0.0
    if p.delta > 0:

        def log_wx(q):
            return math.log(p.delta) - np.log(_gap(p, q))

        log_ix = _log_weighted_sinh_integral(tp, log_wx, lo, hi, inner)
        b_x = -math.exp(math.log(2.0) + log_ix - log_z)

    def log_wz(q):
        bias = p.epsilon + p.lambda_ * np.asarray(q, float)
        with np.errstate(divide="ignore"):
            return np.log(np.abs(bias)) - np.log(_gap(p, q))

    if p.lambda_ > 0:
        q_star = -p.epsilon / p.lambda_
        pos = neg = -math.inf
        if q_star < hi:
            a = max(q_star, lo)
            pos = _log_weighted_sinh_integral(
                tp, log_wz, a, hi, [c for c in inner if a < c < hi]
            )
        if q_star > lo:
            b = min(q_star, hi)
            neg = _log_weighted_sinh_integral(
                tp, log_wz, lo, b, [c for c in inner if lo < c < b]
            )
        b_z = -(math.exp(math.log(2.0) + pos - log_z) - math.exp(math.log(2.0) + neg - log_z))
    elif p.epsilon != 0.0:
        log_iz = _log_weighted_sinh_integral(tp, log_wz, lo, hi, inner)
        b_z = -math.copysign(math.exp(math.log(2.0) + log_iz - log_z), p.epsilon)
    else:
        b_z = 0.0

    # quadrature noise can push an essentially unit-length vector just past 1
    norm = math.hypot(b_x, b_z)
    if 1.0 < norm <= 1.0 + 1e-9:
        b_x, b_z = b_x / norm, b_z / norm
    return QubitState(b_x=b_x, b_z=b_z)


def zero_temperature_extrapolation(p: ModelParams, betas: list[float]) -> ExtrapolatedBloch:
    """Richardson-style 1/beta extrapolation of thermal_bloch to the ground
    state.  Refused when the massive-limit minima are degenerate
    (epsilon = 0, alpha > 1): b_z has no well-defined limit there.
    """
    if len(betas) < 3:
        raise ValueError("need at least 3 beta values")
    if any(b2 <= b1 for b1, b2 in zip(betas, betas[1:])):
        raise ValueError("beta list must be strictly increasing")
    if p.delta > 0:
        alpha = p.lambda_**2 / (p.mass * p.omega**2 * p.delta)
        if p.epsilon == 0.0 and alpha > 1.0:
            raise DegenerateGroundStateError(
                "degenerate wells at epsilon = 0, alpha > 1: the beta -> inf "
                "state is an equal mixture and b_z extrapolation is ill-posed"
            )
    states = [thermal_bloch(ThermalParams(beta=b, model=p)) for b in betas]
    x = np.array([1.0 / b for b in betas])
    comps = []
    residual = 0.0
    for values in (np.array([s.b_x for s in states]), np.array([s.b_z for s in states])):
        slope, intercept = np.polyfit(x, values, 1)
        comps.append(float(intercept))
        residual = max(residual, float(np.max(np.abs(slope * x + intercept - values))))
    b_x, b_z = comps
    norm = math.hypot(b_x, b_z)
    if norm > 1.0:
        b_x, b_z = b_x / norm, b_z / norm
    return ExtrapolatedBloch(state=QubitState(b_x=b_x, b_z=b_z), residual=residual)
