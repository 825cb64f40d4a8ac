"""Built-in observables and states used by the demos and the regression suite."""

from __future__ import annotations

import numpy as np

from .core import QuantumState, SpectralObservable, eigendecompose, is_mub, validate_hermitian
from .lur import LocalObservablePair

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_QUTRIT_DIAG = np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex)

# Integer multiples of pi collapse to exact signs, so the first cyclic matrix
# is (i/sqrt 3) times an integer antisymmetric pattern.
_QUTRIT_CYCLIC_INT = (1j / np.sqrt(3.0)) * np.array(
    [[0, -1, 1], [1, 0, -1], [-1, 1, 0]], dtype=complex)


def _cyclic_phase_matrix(prefactor_angle: float, unit_angle: float) -> np.ndarray:
    """(e^{i w}/sqrt 3) * [[0, e^{5iu}, e^{4iu}], [1, 0, e^{3iu}], [e^{iu}, e^{2iu}, 0]]."""
    def e(k: int) -> complex:
        return np.exp(1j * k * unit_angle)

    mat = np.array([[0, e(5), e(4)], [1, 0, e(3)], [e(1), e(2), 0]], dtype=complex)
    return (np.exp(1j * prefactor_angle) / np.sqrt(3.0)) * mat


def qutrit4_matrices(reading: str = "literal") -> list[np.ndarray]:
    """The four 3x3 matrices of the built-in qutrit set.

    ``literal`` uses integer-pi phases for the first cyclic matrix (exact
    signs); ``third-pi`` replaces them by pi/3 multiples to match the pattern
    of the other two cyclic matrices.  The third-pi variant turns out to be
    non-Hermitian, which is why ``qutrit4`` selects literal at runtime.
    """
    pi = np.pi
    if reading == "literal":
        first_cyclic = _QUTRIT_CYCLIC_INT
    elif reading == "third-pi":
        first_cyclic = _cyclic_phase_matrix(pi / 2, pi / 3)
    else:
        raise ValueError(f"unknown reading {reading!r}; expected 'literal' or 'third-pi'")
    return [
        _QUTRIT_DIAG.copy(),
        first_cyclic.copy(),
        _cyclic_phase_matrix(pi / 6, pi / 3),
        _cyclic_phase_matrix(-pi / 6, -pi / 3),
    ]


def qutrit4(reading: str | None = None) -> list[SpectralObservable]:
    """The built-in qutrit quadruple, asserting the mutually-unbiased property
    on whichever phase reading is selected."""
    candidates = [reading] if reading is not None else ["literal", "third-pi"]
    for r in candidates:
        mats = qutrit4_matrices(r)
        if not all(validate_hermitian(m) for m in mats):
            continue
        obs = [eigendecompose(m) for m in mats]
        if is_mub(obs):
            return obs
    raise ValueError("no qutrit phase reading yields Hermitian matrices with mutually unbiased eigenbases")


def pauli3() -> list[SpectralObservable]:
    """The three qubit spin observables; their eigenbases are mutually unbiased."""
    return [eigendecompose(m) for m in (PAULI_X, PAULI_Y, PAULI_Z)]


def singlet() -> QuantumState:
    v = np.zeros(4, dtype=complex)
    v[1] = 1.0 / np.sqrt(2.0)
    v[2] = -1.0 / np.sqrt(2.0)
    return QuantumState.pure(v)


def ket00() -> QuantumState:
    v = np.zeros(4, dtype=complex)
    v[0] = 1.0
    return QuantumState.pure(v)


def maximally_mixed(dim: int = 4) -> QuantumState:
    return QuantumState.density(np.eye(dim, dtype=complex) / dim)


def pauli_pairs() -> list[LocalObservablePair]:
    """The same spin observable on both qubits, for each of the three axes."""
    return [LocalObservablePair(o, o) for o in pauli3()]


# Name registries for the command line.
OBSERVABLE_SETS = {
    "pauli3": pauli3,
    "qutrit4": qutrit4,
    "qutrit4-literal": lambda: qutrit4("literal"),
}

SINGLE_OBSERVABLES = {
    "sigma-x": lambda: eigendecompose(PAULI_X),
    "sigma-y": lambda: eigendecompose(PAULI_Y),
    "sigma-z": lambda: eigendecompose(PAULI_Z),
    "qutrit-sigma0": lambda: qutrit4()[0],
    "qutrit-sigma1": lambda: qutrit4()[1],
    "qutrit-sigma2": lambda: qutrit4()[2],
    "qutrit-sigma3": lambda: qutrit4()[3],
}

STATES = {
    "singlet": singlet,
    "ket00": ket00,
    "mixed2": maximally_mixed,
}

PAIR_SETS = {
    "pauli-pairs": pauli_pairs,
}
