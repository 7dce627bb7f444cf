"""Dense complex matrix helpers.

All matrices are square numpy arrays of complex128, treated as immutable
values: every operation returns a fresh array and never writes to its
inputs.
"""
from __future__ import annotations

import numpy as np

DEFAULT_MAX_DIM = 1 << 10


class MulCounter:
    """Tally of scalar complex multiplications performed by instrumented ops."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def add(self, n):
        self.count += n

    def __repr__(self):
        return f"MulCounter(count={self.count})"


def as_matrix(values) -> np.ndarray:
    """Coerce to a square complex matrix, rejecting NaN/Inf entries."""
    a = np.array(values, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return a


def mat_mul_naive(a: np.ndarray, b: np.ndarray, counter: MulCounter | None = None) -> np.ndarray:
    """Schoolbook matrix product, n^3 scalar multiplications.

    Baseline for the structured kernel; `counter` records exactly n^3
    multiplications.
    """
    n = a.shape[0]
    if b.shape[0] != n or a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} x {b.shape}")
    out = np.empty((n, n), dtype=complex)
    for i in range(n):
        out[i, :] = a[i, :] @ b  # row of sum-of-products
    if counter is not None:
        counter.add(n ** 3)
    return out


def kron(a: np.ndarray, b: np.ndarray, max_dim: int = DEFAULT_MAX_DIM) -> np.ndarray:
    """Kronecker product with a guard on the result dimension."""
    dim = a.shape[0] * b.shape[0]
    if dim > max_dim:
        raise ValueError(f"kron result dimension {dim} exceeds maximum {max_dim}")
    return np.kron(a, b)


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T.copy()


def trace(a: np.ndarray) -> complex:
    """Sum of diagonal entries."""
    return complex(np.trace(a))


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex)


def is_unitary(a: np.ndarray, tol: float = 1e-10) -> bool:
    """True iff max entrywise |a^dag a - I| <= tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = a.shape[0]
    dev = np.abs(a.conj().T @ a - np.eye(n))
    return bool(dev.max() <= tol)
