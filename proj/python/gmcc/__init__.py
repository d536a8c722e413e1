"""Quantum stabilizer codes from generalized monomial-Cartesian codes."""

from ._core import (
    InvariantViolation,
    UsageError,
    classify_singleton,
    delta,
    delta_size,
    dual_distance,
    field_info,
    gv_interval,
    hyperbolic_count,
    qgv,
    qgv_scan_threshold,
    qgv_threshold_d3,
    quantum_params,
    reproduce_tables,
    self_orthogonal,
    sweep,
)

__all__ = [
    "InvariantViolation",
    "UsageError",
    "classify_singleton",
    "delta",
    "delta_size",
    "dual_distance",
    "field_info",
    "gv_interval",
    "hyperbolic_count",
    "qgv",
    "qgv_scan_threshold",
    "qgv_threshold_d3",
    "quantum_params",
    "reproduce_tables",
    "self_orthogonal",
    "sweep",
]
