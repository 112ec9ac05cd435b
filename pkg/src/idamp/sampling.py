"""Seeded random draws used by the verifier sweeps and the benchmark harness."""

from __future__ import annotations

import math

import numpy as np


def unit_disk_sample(rng: np.random.Generator) -> complex:
    """One complex number uniform on the closed unit disk."""
    radius = math.sqrt(rng.random())
    theta = 2.0 * math.pi * rng.random()
    return complex(radius * math.cos(theta), radius * math.sin(theta))


def unit_disk_matrix(rng: np.random.Generator, n_rows: int, n_cols: int | None = None) -> np.ndarray:
    """Matrix of independent uniform unit-disk entries."""
    if n_cols is None:
        n_cols = n_rows
    radius = np.sqrt(rng.random((n_rows, n_cols)))
    theta = 2.0 * np.pi * rng.random((n_rows, n_cols))
    return radius * np.exp(1j * theta)


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-random n x n unitary via QR of a complex Gaussian matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2.0)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
