"""Central tolerance record and thread configuration."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

TOOL_VERSION = "0.1.0"


@dataclass(frozen=True)
class Tolerances:
    """Every numeric validation threshold used by the toolkit.

    Keeping them in one record makes CLI overrides (``--tol name=value``)
    and test pinning trivial.
    """

    hermiticity: float = 1e-10
    orthonormality: float = 1e-10
    reconstruction: float = 1e-9
    unit_norm: float = 1e-10
    trace: float = 1e-10
    density_eigenvalue: float = 1e-9
    distribution_sum: float = 1e-8
    doubly_stochastic: float = 1e-9
    mub: float = 1e-8
    alpha_optimum: float = 1e-6
    lur_margin: float = 1e-9
    oracle_agreement: float = 1e-6


DEFAULT_TOLERANCES = Tolerances()


def with_overrides(base: Tolerances, overrides: dict[str, float]) -> Tolerances:
    """Return a copy of ``base`` with the named thresholds replaced."""
    unknown = sorted(set(overrides) - set(base.__dataclass_fields__))
    if unknown:
        raise ValueError(f"unknown tolerance name(s): {', '.join(unknown)}")
    return replace(base, **{k: float(v) for k, v in overrides.items()})


def thread_count() -> int:
    """Worker cap from the VURKIT_THREADS environment variable (0 or unset = auto)."""
    raw = os.environ.get("VURKIT_THREADS", "0").strip() or "0"
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"VURKIT_THREADS must be a nonnegative integer, got {raw!r}") from exc
    if value < 0:
        raise ValueError(f"VURKIT_THREADS must be a nonnegative integer, got {raw!r}")
    if value == 0:
        return min(8, os.cpu_count() or 1)
    return value
