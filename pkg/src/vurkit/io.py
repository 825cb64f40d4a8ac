"""JSON interchange: observable and state documents, plus run reports.

Complex numbers are always [re, im] pairs; no complex-literal strings.  The
canonical serialized form of an observable is its spectral representation, so
parse(serialize(x)) reproduces x exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .config import DEFAULT_TOLERANCES, TOOL_VERSION, Tolerances
from .core import QuantumState, SpectralObservable, eigendecompose
from .engine import BoundReport
from .errors import FileFormatError
from .lur import LurReport
from .oracle import OracleResult


def _as_number(obj, what: str) -> float:
    if isinstance(obj, bool) or not isinstance(obj, (int, float)):
        raise FileFormatError(f"{what} must be a number, got {obj!r}")
    value = float(obj)
    if not np.isfinite(value):
        raise FileFormatError(f"{what} must be finite, got {obj!r}")
    return value


def _pair_to_complex(obj, what: str) -> complex:
    if not isinstance(obj, (list, tuple)) or len(obj) != 2:
        raise FileFormatError(f"{what} must be a [re, im] pair, got {obj!r}")
    return complex(_as_number(obj[0], what), _as_number(obj[1], what))


def _complex_to_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _parse_complex_matrix(rows, what: str) -> np.ndarray:
    if not isinstance(rows, list) or not rows:
        raise FileFormatError(f"{what} must be a nonempty list of rows")
    n = len(rows)
    out = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FileFormatError(f"{what} must be square; row {i} has length "
                                  f"{len(row) if isinstance(row, list) else 'N/A'}, expected {n}")
        for j, entry in enumerate(row):
            out[i, j] = _pair_to_complex(entry, f"{what}[{i}][{j}]")
    return out


def parse_observable(doc: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> SpectralObservable:
    """Build an observable from a document holding exactly one of ``matrix``
    (dense Hermitian entries) or ``spectral`` (eigenvalues plus eigenvector
    columns)."""
    if not isinstance(doc, dict):
        raise FileFormatError(f"observable document must be an object, got {type(doc).__name__}")
    has_matrix = "matrix" in doc
    has_spectral = "spectral" in doc
    if has_matrix == has_spectral:
        raise FileFormatError("observable document must contain exactly one of 'matrix' or 'spectral'")
    if has_matrix:
        return eigendecompose(_parse_complex_matrix(doc["matrix"], "matrix"), tol)

    spectral = doc["spectral"]
    if not isinstance(spectral, dict) or set(spectral) != {"eigenvalues", "eigenvectors"}:
        raise FileFormatError("'spectral' must be an object with 'eigenvalues' and 'eigenvectors'")
    raw_evals = spectral["eigenvalues"]
    raw_cols = spectral["eigenvectors"]
    if not isinstance(raw_evals, list) or not raw_evals:
        raise FileFormatError("'eigenvalues' must be a nonempty list")
    n = len(raw_evals)
    evals = np.array([_as_number(v, f"eigenvalues[{i}]") for i, v in enumerate(raw_evals)])
    if np.any(np.diff(evals) < 0):
        raise FileFormatError("eigenvalues must be in ascending order")
    if not isinstance(raw_cols, list) or len(raw_cols) != n:
        raise FileFormatError(f"'eigenvectors' must hold {n} columns")
    vecs = np.empty((n, n), dtype=complex)
    for j, col in enumerate(raw_cols):
        if not isinstance(col, list) or len(col) != n:
            raise FileFormatError(f"eigenvector column {j} must hold {n} [re, im] pairs")
        for i, entry in enumerate(col):
            vecs[i, j] = _pair_to_complex(entry, f"eigenvectors[{j}][{i}]")
    obs = SpectralObservable(evals, vecs)
    defect = obs.orthonormality_defect()
    if defect > tol.orthonormality:
        raise FileFormatError(f"eigenvector columns are not orthonormal (defect {defect:.3e})")
    return obs


def serialize_observable(obs: SpectralObservable) -> dict:
    """Canonical spectral document for an observable."""
    cols = [[_complex_to_pair(obs.eigenvectors[i, j]) for i in range(obs.dim)]
            for j in range(obs.dim)]
    return {"spectral": {"eigenvalues": [float(v) for v in obs.eigenvalues],
                         "eigenvectors": cols}}


def parse_state(doc: Any, tol: Tolerances = DEFAULT_TOLERANCES) -> QuantumState:
    """Build a state from a document holding exactly one of ``pure``
    (amplitude pairs) or ``density`` (matrix of pairs)."""
    if not isinstance(doc, dict):
        raise FileFormatError(f"state document must be an object, got {type(doc).__name__}")
    has_pure = "pure" in doc
    has_density = "density" in doc
    if has_pure == has_density:
        raise FileFormatError("state document must contain exactly one of 'pure' or 'density'")
    if has_pure:
        amp = doc["pure"]
        if not isinstance(amp, list) or not amp:
            raise FileFormatError("'pure' must be a nonempty list of [re, im] pairs")
        vec = np.array([_pair_to_complex(a, f"pure[{i}]") for i, a in enumerate(amp)])
        return QuantumState.pure(vec, tol)
    return QuantumState.density(_parse_complex_matrix(doc["density"], "density"), tol)


def serialize_state(state: QuantumState) -> dict:
    if state.is_pure:
        return {"pure": [_complex_to_pair(z) for z in state.vector]}
    return {"density": [[_complex_to_pair(z) for z in row] for row in state.matrix]}


def _load_json(path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path} is not valid JSON: {exc}") from exc


def load_observable(path, tol: Tolerances = DEFAULT_TOLERANCES) -> SpectralObservable:
    return parse_observable(_load_json(path), tol)


def load_state(path, tol: Tolerances = DEFAULT_TOLERANCES) -> QuantumState:
    return parse_state(_load_json(path), tol)


# --- run reports -----------------------------------------------------------

@dataclass(frozen=True)
class RunReport:
    """Echo of one CLI invocation: inputs, seed, versioned payload.

    Re-running the echoed command reproduces the payload byte for byte.
    """

    command: list[str]
    inputs: dict
    seed: int | None
    payload: dict
    version: str = TOOL_VERSION

    def to_json(self) -> str:
        doc = {"command": list(self.command), "inputs": self.inputs, "seed": self.seed,
               "version": self.version, "payload": self.payload}
        return json.dumps(doc, indent=2)


def constant_payload(constant) -> dict:
    return {"value": float(constant.value), "source": str(constant.source.value),
            "inputs_digest": constant.inputs_digest}


def bound_report_payload(report: BoundReport) -> dict:
    return {
        "alpha": float(report.alpha),
        "constant": constant_payload(report.constant),
        "per_operator": [
            {"beta_star": float(r.beta_star), "max_value": float(r.value),
             "bracket": [float(r.bracket[0]), float(r.bracket[1])]}
            for r in report.per_operator
        ],
        "raw_bound": float(report.raw_bound),
        "lower_bound": float(report.lower_bound),
        "clamped": bool(report.clamped),
    }


def oracle_result_payload(result: OracleResult, restarts: int) -> dict:
    return {
        "minimum": float(result.minimum),
        "restarts": int(restarts),
        "restarts_agreeing": int(result.restarts_agreeing),
        "argmin_state": serialize_state(result.argmin_state),
    }


def lur_report_payload(report: LurReport) -> dict:
    return {
        "lhs": float(report.lhs),
        "u_a": float(report.u_a),
        "u_b": float(report.u_b),
        "margin": float(report.margin),
        "verdict": str(report.verdict.value),
    }
