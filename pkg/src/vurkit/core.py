"""Dense complex Hermitian linear algebra: spectral observables, quantum states,
measurement statistics, variances, Shannon entropies, and basis overlaps.

Everything here is a pure function of immutable values; arrays are frozen after
construction and safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import DimensionMismatchError, InvalidStateError, NotHermitianError


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _require_same_dim(a: int, b: int, what: str = "operands") -> None:
    if a != b:
        raise DimensionMismatchError(f"{what} have mismatched dimensions {a} and {b}")


def as_square_matrix(m) -> np.ndarray:
    """Coerce input to an n-by-n complex array with finite entries."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise DimensionMismatchError(f"expected a nonempty square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise ValueError("matrix entries must be finite")
    return arr


def hermiticity_defect(m) -> float:
    """Max entrywise deviation of a matrix from its conjugate transpose."""
    arr = as_square_matrix(m)
    return float(np.max(np.abs(arr - arr.conj().T)))


def validate_hermitian(m, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return hermiticity_defect(m) <= tol.hermiticity


def _phase_fix(vec: np.ndarray) -> np.ndarray:
    """Rotate a vector so its first non-negligible component is real positive."""
    idx = np.flatnonzero(np.abs(vec) > 1e-12)
    if idx.size == 0:
        return vec
    pivot = vec[idx[0]]
    return vec * (abs(pivot) / pivot)


def phase_fix_columns(vectors: np.ndarray) -> np.ndarray:
    """Apply the deterministic phase convention to every column."""
    fixed = np.array(vectors, dtype=complex)
    for j in range(fixed.shape[1]):
        fixed[:, j] = _phase_fix(fixed[:, j])
    return fixed


@dataclass(frozen=True)
class SpectralObservable:
    """A Hermitian operator stored as ascending eigenvalues plus orthonormal
    eigenvector columns (column i pairs with eigenvalue i).

    Eigenvector ordering inside a degenerate cluster is solver-dependent and
    not part of the contract; all derived quantities depend only on the stored
    decomposition, so results are reproducible given the stored value.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        evals = np.asarray(self.eigenvalues, dtype=float)
        evecs = np.asarray(self.eigenvectors, dtype=complex)
        if evals.ndim != 1 or evals.size == 0:
            raise DimensionMismatchError("eigenvalues must be a nonempty 1-d list")
        if evecs.shape != (evals.size, evals.size):
            raise DimensionMismatchError(
                f"eigenvector block shape {evecs.shape} does not match {evals.size} eigenvalues"
            )
        if not np.all(np.isfinite(evals)):
            raise ValueError("eigenvalues must be finite")
        if np.any(np.diff(evals) < 0):
            raise ValueError("eigenvalues must be in ascending order")
        object.__setattr__(self, "eigenvalues", _readonly(evals))
        object.__setattr__(self, "eigenvectors", _readonly(evecs))

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.size)

    @property
    def matrix(self) -> np.ndarray:
        """Reconstruct the dense operator sum_i a_i |a_i><a_i|."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T

    def orthonormality_defect(self) -> float:
        gram = self.eigenvectors.conj().T @ self.eigenvectors
        return float(np.max(np.abs(gram - np.eye(self.dim))))

    @classmethod
    def from_matrix(cls, m, tol: Tolerances = DEFAULT_TOLERANCES) -> "SpectralObservable":
        return eigendecompose(m, tol)


def eigendecompose(m, tol: Tolerances = DEFAULT_TOLERANCES) -> SpectralObservable:
    """Spectral decomposition of a Hermitian matrix with ascending eigenvalues
    and phase-fixed eigenvectors."""
    arr = as_square_matrix(m)
    defect = float(np.max(np.abs(arr - arr.conj().T)))
    if defect > tol.hermiticity:
        raise NotHermitianError(
            f"matrix is not Hermitian: max asymmetry {defect:.3e} exceeds {tol.hermiticity:.1e}"
        )
    # decompose the Hermitized form so a loosened gate cannot leak asymmetry
    # into the reconstruction guard
    herm = 0.5 * (arr + arr.conj().T)
    evals, evecs = np.linalg.eigh(herm)
    obs = SpectralObservable(evals, phase_fix_columns(evecs))
    residual = float(np.max(np.abs(obs.matrix - herm)))
    if residual > tol.reconstruction:
        raise ValueError(f"eigendecomposition failed to reconstruct input (residual {residual:.3e})")
    return obs


@dataclass(frozen=True)
class QuantumState:
    """Pure state vector or density matrix; construct via ``pure`` or ``density``."""

    vector: np.ndarray | None = None
    matrix: np.ndarray | None = None

    def __post_init__(self):
        if (self.vector is None) == (self.matrix is None):
            raise InvalidStateError("state must hold exactly one of vector or matrix")

    @classmethod
    def pure(cls, amplitudes, tol: Tolerances = DEFAULT_TOLERANCES) -> "QuantumState":
        vec = np.asarray(amplitudes, dtype=complex)
        if vec.ndim != 1 or vec.size == 0:
            raise InvalidStateError(f"pure state must be a nonempty vector, got shape {vec.shape}")
        if not np.all(np.isfinite(vec.real)) or not np.all(np.isfinite(vec.imag)):
            raise InvalidStateError("amplitudes must be finite")
        norm = float(np.linalg.norm(vec))
        if abs(norm - 1.0) > tol.unit_norm:
            raise InvalidStateError(f"pure state must have unit norm, got {norm!r}")
        return cls(vector=_readonly(vec.copy()))

    @classmethod
    def density(cls, rho, tol: Tolerances = DEFAULT_TOLERANCES) -> "QuantumState":
        mat = as_square_matrix(rho)
        defect = float(np.max(np.abs(mat - mat.conj().T)))
        if defect > tol.hermiticity:
            raise InvalidStateError(f"density matrix must be Hermitian (asymmetry {defect:.3e})")
        trace = complex(np.trace(mat))
        if abs(trace - 1.0) > tol.trace:
            raise InvalidStateError(f"density matrix must have unit trace, got {trace!r}")
        smallest = float(np.linalg.eigvalsh(mat)[0])
        if smallest < -tol.density_eigenvalue:
            raise InvalidStateError(f"density matrix must be positive semidefinite "
                                    f"(smallest eigenvalue {smallest:.3e})")
        return cls(matrix=_readonly(mat.copy()))

    @property
    def is_pure(self) -> bool:
        return self.vector is not None

    @property
    def dim(self) -> int:
        return int(self.vector.size if self.is_pure else self.matrix.shape[0])

    def density_matrix(self) -> np.ndarray:
        """Dense density matrix of either variant."""
        if self.is_pure:
            return np.outer(self.vector, self.vector.conj())
        return np.asarray(self.matrix)


def measurement_distribution(obs: SpectralObservable, state: QuantumState) -> np.ndarray:
    """Outcome probabilities in ascending-eigenvalue order."""
    _require_same_dim(obs.dim, state.dim, "observable and state")
    v = obs.eigenvectors
    if state.is_pure:
        p = np.abs(v.conj().T @ state.vector) ** 2
    else:
        p = np.real(np.einsum("ji,jk,ki->i", v.conj(), state.matrix, v))
    p = np.clip(p, 0.0, None)
    return p / p.sum()


def expectation(obs: SpectralObservable, state: QuantumState) -> float:
    p = measurement_distribution(obs, state)
    return float(p @ obs.eigenvalues)


def variance(obs: SpectralObservable, state: QuantumState) -> float:
    p = measurement_distribution(obs, state)
    mu = float(p @ obs.eigenvalues)
    return float(p @ (obs.eigenvalues - mu) ** 2)


def shannon_entropy(p) -> float:
    """Shannon entropy of a probability vector, in nats; 0*ln(0) counts as 0."""
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError(f"expected a nonempty probability vector, got shape {arr.shape}")
    if np.any(arr < 0):
        raise ValueError(f"probabilities must be nonnegative, got min {arr.min()!r}")
    total = float(arr.sum())
    if abs(total - 1.0) > DEFAULT_TOLERANCES.distribution_sum:
        raise ValueError(f"probabilities must sum to 1, got {total!r}")
    positive = arr[arr > 0]
    return max(0.0, float(-(positive * np.log(positive)).sum()))


@dataclass(frozen=True)
class OverlapStats:
    """Moduli of inner products between two eigenbases and their maximum c."""

    c: float
    overlap_matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "overlap_matrix", _readonly(np.asarray(self.overlap_matrix, dtype=float)))


def overlap_stats(a: SpectralObservable, b: SpectralObservable) -> OverlapStats:
    _require_same_dim(a.dim, b.dim, "observables")
    overlaps = np.abs(a.eigenvectors.conj().T @ b.eigenvectors)
    return OverlapStats(c=float(overlaps.max()), overlap_matrix=overlaps)


def is_mub(bases, tol: float | None = None) -> bool:
    """Whether every pair of eigenbases has all overlaps equal to 1/sqrt(n)."""
    obs = list(bases)
    if len(obs) < 2:
        raise ValueError("need at least two observables")
    for o in obs[1:]:
        _require_same_dim(obs[0].dim, o.dim, "observables")
    if tol is None:
        tol = DEFAULT_TOLERANCES.mub
    target = 1.0 / math.sqrt(obs[0].dim)
    for i in range(len(obs)):
        for j in range(i + 1, len(obs)):
            overlaps = overlap_stats(obs[i], obs[j]).overlap_matrix
            if float(np.max(np.abs(overlaps - target))) > tol:
                return False
    return True


def robertson_bound(a: SpectralObservable, b: SpectralObservable, state: QuantumState) -> float:
    """Half the modulus of the commutator expectation (the classic product-form floor)."""
    _require_same_dim(a.dim, b.dim, "observables")
    _require_same_dim(a.dim, state.dim, "observable and state")
    comm = a.matrix @ b.matrix - b.matrix @ a.matrix
    if state.is_pure:
        value = complex(np.vdot(state.vector, comm @ state.vector))
    else:
        value = complex(np.trace(state.matrix @ comm))
    return 0.5 * abs(value)
