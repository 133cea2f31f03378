"""Dense complex linear algebra primitives used throughout the package.

All matrices are plain numpy arrays of complex128 in row-major (C) order.
These wrappers exist to pin down the contracts the rest of the code relies
on: shape checks, descending singular values, ascending real eigenvalues,
and explicit Hermiticity validation before eigendecompositions.
"""

from __future__ import annotations

import numpy as np

# Hermiticity check threshold, relative to the largest entry magnitude.
HERMITICITY_RTOL = 1e-10


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-d complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got ndim={m.ndim}")
    return m


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"incompatible shapes for product: {a.shape} x {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def hs_inner(a, b) -> complex:
    """Hilbert-Schmidt inner product Tr(a^dag b)."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    # vdot conjugates its first argument and sums entrywise, which is Tr(a^dag b)
    return complex(np.vdot(a, b))


def hs_norm_sq(a) -> float:
    return hs_inner(a, a).real


def singular_values(a) -> np.ndarray:
    """Singular values of a matrix, descending."""
    a = as_matrix(a)
    try:
        return np.linalg.svd(a, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(
            f"SVD failed to converge on shape {a.shape}, |a|_max={np.abs(a).max():g}"
        ) from exc


def eigh(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns (w, v) with real eigenvalues w ascending and unitary v whose
    columns are the eigenvectors. Raises if the input is not Hermitian
    within HERMITICITY_RTOL relative to its largest entry.
    """
    h = as_matrix(h)
    if h.shape[0] != h.shape[1]:
        raise ValueError(f"eigh requires a square matrix, got {h.shape}")
    scale = np.abs(h).max()
    if scale > 0 and np.abs(h - h.conj().T).max() > HERMITICITY_RTOL * scale:
        raise ValueError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(h)
    return w, v


def expi_hermitian(h, theta: float) -> np.ndarray:
    """exp(-i * theta * h) for Hermitian h, via eigendecomposition."""
    w, v = eigh(h)
    return (v * np.exp(-1j * theta * w)) @ v.conj().T


def unitarity_residual(u) -> float:
    """Max-norm of u^dag u - I; a drift monitor for repeated products."""
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got {u.shape}")
    g = u.conj().T @ u
    return float(np.abs(g - np.eye(u.shape[0])).max())
