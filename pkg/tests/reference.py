"""Independent reference implementations used as test oracles.

These deliberately avoid the library's own code paths: dense grids instead of
golden-section refinement, raw matrix moments instead of spectral
distributions.
"""

import numpy as np


def dense_grid_max(eigenvalues, alpha, points=1_000_001, chunk=250_000):
    """Brute-force maximum of sum_k exp(-alpha (a_k - beta)^2) over a uniform
    beta grid spanning [min eigenvalue, max eigenvalue]."""
    evals = np.asarray(eigenvalues, dtype=float)
    lo, hi = float(evals.min()), float(evals.max())
    if hi == lo:
        return float(evals.size), lo
    best_val, best_beta = -np.inf, lo
    for start in range(0, points, chunk):
        stop = min(start + chunk, points)
        betas = lo + (hi - lo) * np.arange(start, stop) / (points - 1)
        vals = np.exp(-alpha * (evals[None, :] - betas[:, None]) ** 2).sum(axis=1)
        i = int(np.argmax(vals))
        if vals[i] > best_val:
            best_val, best_beta = float(vals[i]), float(betas[i])
    return best_val, best_beta


def moment_variance(matrix, rho):
    """Tr(rho M^2) - Tr(rho M)^2 computed directly from dense matrices."""
    m = np.asarray(matrix, dtype=complex)
    r = np.asarray(rho, dtype=complex)
    first = float(np.real(np.trace(r @ m)))
    second = float(np.real(np.trace(r @ m @ m)))
    return second - first * first


def moment_expectation(matrix, rho):
    return float(np.real(np.trace(np.asarray(rho, complex) @ np.asarray(matrix, complex))))
