"""Brute-force ground truth: minimize variance sums over pure states, and
randomized sweeps that back the property suites.

All sampling goes through per-task seed streams derived from one root seed,
so results are bit-identical at any parallelism degree.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES, thread_count
from .core import (QuantumState, SpectralObservable, eigendecompose,
                   measurement_distribution, phase_fix_columns, shannon_entropy, variance)
from .engine import gaussian_sum
from .errors import DimensionMismatchError

# strong enough that a step oscillating across a quadratic valley is rejected
# and backtracking finds the interior step instead
_ARMIJO = 0.25
_GRAD_TOL = 1e-12


@dataclass(frozen=True)
class OracleConfig:
    restarts: int = 64
    max_iters: int = 2000
    step_tol: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1 or self.max_iters < 1 or self.step_tol <= 0:
            raise ValueError("restarts, max_iters, and step_tol must be positive")


@dataclass(frozen=True)
class OracleResult:
    minimum: float
    argmin_state: QuantumState
    restarts_agreeing: int


def sample_random_pure(dim: int, rng: np.random.Generator) -> QuantumState:
    """Haar-random pure state: normalized i.i.d. complex Gaussian amplitudes,
    with the global phase fixed for canonical output."""
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    z /= np.linalg.norm(z)
    z = phase_fix_columns(z[:, None])[:, 0]
    return QuantumState.pure(z)


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Gaussian-ensemble random Hermitian matrix."""
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (z + z.conj().T)


def _operator_matrices(observables) -> tuple[list[np.ndarray], list[np.ndarray]]:
    mats, squares = [], []
    for o in observables:
        v = o.eigenvectors
        mats.append((v * o.eigenvalues) @ v.conj().T)
        squares.append((v * o.eigenvalues ** 2) @ v.conj().T)
    return mats, squares


def _ambient_value(mats, squares, x: np.ndarray) -> float:
    nsq = float(np.real(np.vdot(x, x)))
    total = 0.0
    for m, s in zip(mats, squares):
        e = float(np.real(np.vdot(x, m @ x))) / nsq
        total += float(np.real(np.vdot(x, s @ x))) / nsq - e * e
    return total


def _ambient_grad(mats, squares, x: np.ndarray) -> np.ndarray:
    """Wirtinger derivative d/d(conj x) of the normalized variance sum."""
    nsq = float(np.real(np.vdot(x, x)))
    g = np.zeros_like(x)
    for m, s in zip(mats, squares):
        mx = m @ x
        sx = s @ x
        e = float(np.real(np.vdot(x, mx))) / nsq
        sv = float(np.real(np.vdot(x, sx))) / nsq
        g += (sx - sv * x - 2.0 * e * (mx - e * x)) / nsq
    return g


def variance_sum(observables, state: QuantumState) -> float:
    """Objective the oracle minimizes: sum of variances on one state."""
    return sum(variance(o, state) for o in observables)


def ambient_variance_sum(observables, x) -> float:
    """Variance sum of the normalized version of an arbitrary nonzero vector."""
    mats, squares = _operator_matrices(observables)
    return _ambient_value(mats, squares, np.asarray(x, dtype=complex))


def ambient_variance_sum_gradient(observables, x) -> np.ndarray:
    """Gradient of ``ambient_variance_sum`` with respect to the stacked
    (real, imaginary) coordinates of the vector."""
    mats, squares = _operator_matrices(observables)
    g = _ambient_grad(mats, squares, np.asarray(x, dtype=complex))
    return np.concatenate([2.0 * g.real, 2.0 * g.imag])


def _descend(mats, squares, x0: np.ndarray, max_iters: int, step_tol: float) -> tuple[float, np.ndarray]:
    """Projected gradient descent on the unit sphere with backtracking;
    the objective never increases on an accepted step."""
    x = x0 / np.linalg.norm(x0)
    f = _ambient_value(mats, squares, x)
    step = 0.5
    for _ in range(max_iters):
        g = _ambient_grad(mats, squares, x)
        g = g - x * np.real(np.vdot(x, g))
        gnorm = float(np.linalg.norm(g))
        if gnorm <= _GRAD_TOL:
            break
        accepted = False
        while step >= step_tol:
            cand = x - step * g
            cand /= np.linalg.norm(cand)
            fc = _ambient_value(mats, squares, cand)
            if fc <= f - _ARMIJO * step * gnorm * gnorm:
                accepted = True
                break
            step *= 0.5
        if not accepted:
            break
        x, f = cand, fc
        step = min(2.0 * step, 1.0)
    return f, x


def minimize_variance_sum(observables, config: OracleConfig = OracleConfig()) -> OracleResult:
    """Minimum of the variance sum over pure states by multi-start descent.

    Restarts are independent tasks on derived seed streams, merged by minimum
    with the lowest restart index breaking ties, so the result is reproducible
    at any thread count.
    """
    obs = list(observables)
    if not obs:
        raise ValueError("need at least one observable")
    for o in obs[1:]:
        if o.dim != obs[0].dim:
            raise DimensionMismatchError(f"observables have mismatched dimensions {obs[0].dim} and {o.dim}")
    dim = obs[0].dim
    mats, squares = _operator_matrices(obs)
    seeds = np.random.SeedSequence(config.seed).spawn(config.restarts)

    def run(seed_seq) -> tuple[float, np.ndarray]:
        rng = np.random.default_rng(seed_seq)
        x0 = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return _descend(mats, squares, x0, config.max_iters, config.step_tol)

    workers = thread_count()
    if workers > 1 and config.restarts > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, seeds))
    else:
        results = [run(s) for s in seeds]

    best = min(range(len(results)), key=lambda i: (results[i][0], i))
    minimum, xbest = results[best]
    agreeing = sum(1 for f, _ in results if f <= minimum + DEFAULT_TOLERANCES.oracle_agreement)
    argmin = QuantumState.pure(phase_fix_columns(xbest[:, None])[:, 0])
    return OracleResult(minimum=minimum, argmin_state=argmin, restarts_agreeing=agreeing)


@dataclass(frozen=True)
class LemmaSweepReport:
    """Worst case seen while stress-testing the single-operator entropy-variance
    floor on random (state, observable, alpha) triples."""

    samples: int
    dims: tuple[int, ...]
    max_violation: float
    violations: int
    worst_alpha: float
    worst_observable: SpectralObservable
    worst_state: QuantumState


def lemma_sweep(n_samples: int, dims=(2, 3, 4, 5), seed: int = 0,
                violation_tol: float = 1e-9) -> LemmaSweepReport:
    """Evaluate V >= (H - ln gaussian_sum(eigs, alpha, mean)) / alpha on random
    triples; returns the maximum violation (positive = floor exceeded variance)
    and the worst triple for regression pinning."""
    if n_samples < 1:
        raise ValueError("need at least one sample")
    dims = tuple(int(d) for d in dims)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    max_violation = -math.inf
    violations = 0
    worst = None
    for i in range(n_samples):
        n = dims[i % len(dims)]
        obs = eigendecompose(random_hermitian(n, rng))
        state = sample_random_pure(n, rng)
        alpha = float(10.0 ** rng.uniform(-2.0, 2.0))
        p = measurement_distribution(obs, state)
        mu = float(p @ obs.eigenvalues)
        v = float(p @ (obs.eigenvalues - mu) ** 2)
        floor = (shannon_entropy(p) - math.log(gaussian_sum(obs.eigenvalues, alpha, mu))) / alpha
        violation = floor - v
        if violation > violation_tol:
            violations += 1
        if violation > max_violation:
            max_violation = violation
            worst = (alpha, obs, state)
    worst_alpha, worst_obs, worst_state = worst
    return LemmaSweepReport(samples=n_samples, dims=dims, max_violation=max_violation,
                            violations=violations, worst_alpha=worst_alpha,
                            worst_observable=worst_obs, worst_state=worst_state)
