"""Small input-validation helpers shared by the metric modules."""

from __future__ import annotations

import numpy as np

from .errors import InputError


def as_float_array(values, name: str, ndim: int | None = None) -> np.ndarray:
    """Coerce to a float64 array, rejecting non-finite values."""
    arr = np.asarray(values, dtype=np.float64)
    if ndim is not None and arr.ndim != ndim:
        raise InputError(f"{name}: expected {ndim}-dimensional data, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise InputError(f"{name}: contains non-finite values")
    return arr


def as_score_vector(scores, name: str = "scores") -> np.ndarray:
    return as_float_array(scores, name, ndim=1)


def as_binary_labels(labels, name: str = "labels") -> np.ndarray:
    """Coerce to a 0/1 float vector."""
    arr = np.asarray(labels, dtype=np.float64)
    if arr.ndim != 1:
        raise InputError(f"{name}: expected a vector, got shape {arr.shape}")
    if not np.all(np.isin(arr, (0.0, 1.0))):
        raise InputError(f"{name}: values must be 0 or 1")
    return arr


def check_paired(a: np.ndarray, b: np.ndarray, name_a: str, name_b: str) -> None:
    if a.shape != b.shape:
        raise InputError(
            f"{name_a} and {name_b} must be paired: shapes {a.shape} vs {b.shape}"
        )
