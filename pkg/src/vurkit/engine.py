"""The variance-floor engine.

A sum of unit-height Gaussians centered at the eigenvalues controls how much
measurement entropy a state can pack near its mean; maximizing that sum over
centers inside the eigenvalue interval turns a state-dependent floor into a
state-independent one.  The floor is then (C - sum of log-maxima) / alpha for
any entropy-sum constant C and any width parameter alpha > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import QuantumState, expectation
from .entropic import EntropicConstant
from .errors import InvalidAlphaError

_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def _check_alpha(alpha) -> float:
    a = float(alpha)
    if not math.isfinite(a) or a <= 0.0:
        raise InvalidAlphaError(f"alpha must be a positive finite real, got {alpha!r}")
    return a


def _ascending_eigenvalues(eigenvalues) -> np.ndarray:
    evals = np.asarray(eigenvalues, dtype=float)
    if evals.ndim != 1 or evals.size == 0:
        raise ValueError("expected a nonempty 1-d eigenvalue list")
    if np.any(np.diff(evals) < 0):
        raise ValueError("eigenvalues must be in ascending order")
    return evals


def gaussian_sum(eigenvalues, alpha: float, beta: float) -> float:
    """sum_k exp(-alpha (a_k - beta)^2); smooth in beta, valued in (0, n]."""
    a = _check_alpha(alpha)
    evals = np.asarray(eigenvalues, dtype=float)
    if evals.ndim != 1 or evals.size == 0:
        raise ValueError("expected a nonempty 1-d eigenvalue list")
    return float(np.exp(-a * (evals - beta) ** 2).sum())


def _golden_max(f, lo: float, hi: float, width_tol: float) -> tuple[float, float]:
    """Golden-section maximization on a bracket."""
    x1 = hi - _INV_GOLDEN * (hi - lo)
    x2 = lo + _INV_GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    while hi - lo > width_tol:
        if f1 < f2:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_GOLDEN * (hi - lo)
            f2 = f(x2)
        else:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_GOLDEN * (hi - lo)
            f1 = f(x1)
    mid = 0.5 * (lo + hi)
    return mid, f(mid)


@dataclass(frozen=True)
class InnerMaxResult:
    """Argmax and value of the Gaussian sum over the eigenvalue interval."""

    beta_star: float
    value: float
    bracket: tuple[float, float]


def inner_max(eigenvalues, alpha: float) -> InnerMaxResult:
    """Global maximum of the Gaussian sum over centers in [a_1, a_n].

    Scans a uniform grid augmented with the eigenvalues and adjacent midpoints
    (so narrow peaks at large alpha are never missed), then refines every
    grid-local maximum by golden section.  The objective is a sum of n
    Gaussians, so it has at most n local maxima and the refined best is the
    global one.
    """
    a = _check_alpha(alpha)
    evals = _ascending_eigenvalues(eigenvalues)
    lo, hi = float(evals[0]), float(evals[-1])
    n = evals.size
    if hi == lo:
        return InnerMaxResult(beta_star=lo, value=float(n), bracket=(lo, hi))

    def g(beta: float) -> float:
        return float(np.exp(-a * (evals - beta) ** 2).sum())

    uniform = np.linspace(lo, hi, max(256, 64 * n))
    extra = np.concatenate([evals, 0.5 * (evals[1:] + evals[:-1])])
    betas = np.unique(np.concatenate([uniform, extra]))
    vals = np.exp(-a * (evals[None, :] - betas[:, None]) ** 2).sum(axis=1)

    best_idx = int(np.argmax(vals))
    best_beta, best_val = float(betas[best_idx]), float(vals[best_idx])

    left_ok = np.empty(betas.size, dtype=bool)
    right_ok = np.empty(betas.size, dtype=bool)
    left_ok[0] = True
    left_ok[1:] = vals[1:] >= vals[:-1]
    right_ok[-1] = True
    right_ok[:-1] = vals[:-1] >= vals[1:]
    width_tol = max(1e-13 * (hi - lo), 8 * np.finfo(float).eps * max(1.0, abs(lo), abs(hi)))
    for i in np.flatnonzero(left_ok & right_ok):
        blo = float(betas[max(i - 1, 0)])
        bhi = float(betas[min(i + 1, betas.size - 1)])
        if bhi <= blo:
            continue
        beta, val = _golden_max(g, blo, bhi, width_tol)
        if val > best_val:
            best_beta, best_val = beta, val
    return InnerMaxResult(beta_star=best_beta, value=best_val, bracket=(lo, hi))


def state_dependent_bound(observables, state: QuantumState, alpha: float,
                          constant: EntropicConstant) -> float:
    """Variance-sum floor with each Gaussian sum centered at the state's mean.

    This is the raw pre-maximization value; it may be negative and is not
    clamped.
    """
    a = _check_alpha(alpha)
    obs = list(observables)
    if not obs:
        raise ValueError("need at least one observable")
    total = 0.0
    for o in obs:
        total += math.log(gaussian_sum(o.eigenvalues, a, expectation(o, state)))
    return (constant.value - total) / a


@dataclass(frozen=True)
class BoundReport:
    """Everything a variance-floor evaluation produced at one alpha."""

    alpha: float
    constant: EntropicConstant
    per_operator: tuple[InnerMaxResult, ...]
    raw_bound: float
    lower_bound: float
    clamped: bool


def bound_at_alpha(observables, alpha: float, constant: EntropicConstant) -> BoundReport:
    """State-independent variance-sum floor at a fixed width parameter.

    Variances are nonnegative, so a negative raw value is clamped to zero;
    the raw value is kept for diagnostics.
    """
    a = _check_alpha(alpha)
    obs = list(observables)
    if not obs:
        raise ValueError("need at least one observable")
    inner = tuple(inner_max(o.eigenvalues, a) for o in obs)
    raw = (constant.value - sum(math.log(r.value) for r in inner)) / a
    return BoundReport(alpha=a, constant=constant, per_operator=inner,
                       raw_bound=raw, lower_bound=max(0.0, raw), clamped=raw < 0.0)


def optimize_alpha(observables, constant: EntropicConstant, *,
                   alpha_range: tuple[float, float] = (1e-3, 1e3),
                   grid_points: int = 200) -> BoundReport:
    """Best variance-sum floor over the width parameter.

    Log-grid scan over ``alpha_range`` followed by golden-section refinement
    of every grid-local maximum; the floor vanishes at both ends of the range
    for the observable sets this toolkit targets, so the maximum is interior.
    """
    obs = list(observables)
    if not obs:
        raise ValueError("need at least one observable")
    lo, hi = float(alpha_range[0]), float(alpha_range[1])
    if not (0.0 < lo < hi) or not math.isfinite(hi):
        raise InvalidAlphaError(f"alpha range must satisfy 0 < lo < hi, got {alpha_range!r}")
    eigsets = [o.eigenvalues for o in obs]

    def raw_at_log(t: float) -> float:
        a = math.exp(t)
        return (constant.value - sum(math.log(inner_max(e, a).value) for e in eigsets)) / a

    logs = np.linspace(math.log(lo), math.log(hi), int(grid_points))
    vals = np.array([raw_at_log(t) for t in logs])
    best_idx = int(np.argmax(vals))
    best_log, best_val = float(logs[best_idx]), float(vals[best_idx])

    for i in range(logs.size):
        left = vals[i - 1] if i > 0 else -math.inf
        right = vals[i + 1] if i + 1 < logs.size else -math.inf
        if vals[i] < left or vals[i] < right:
            continue
        blo = float(logs[max(i - 1, 0)])
        bhi = float(logs[min(i + 1, logs.size - 1)])
        if bhi <= blo:
            continue
        t, v = _golden_max(raw_at_log, blo, bhi, 1e-8)
        if v > best_val:
            best_log, best_val = t, v
    return bound_at_alpha(obs, math.exp(best_log), constant)


def continuous_pair_bound(entropy_constant: float, alpha: float | None = None) -> tuple[float, float]:
    """Variance-sum floor for a continuous-spectrum pair, from the entropy
    constant alone: (C + ln(alpha/pi)) / alpha.

    With alpha omitted, the stationary point alpha* = pi e^(1-C) is used,
    giving the closed-form floor e^(C-1)/pi.  Returns (alpha_used, bound).
    """
    c = float(entropy_constant)
    if not math.isfinite(c):
        raise ValueError(f"entropy constant must be finite, got {entropy_constant!r}")
    if alpha is None:
        a = math.pi * math.exp(1.0 - c)
        return a, math.exp(c - 1.0) / math.pi
    a = _check_alpha(alpha)
    return a, (c + math.log(a / math.pi)) / a


def shannon_variance_bound(entropy: float) -> float:
    """Single-operator variance floor e^(2H-1)/(2 pi) from a differential entropy."""
    h = float(entropy)
    if not math.isfinite(h):
        raise ValueError(f"entropy must be finite, got {entropy!r}")
    return math.exp(2.0 * h - 1.0) / (2.0 * math.pi)
