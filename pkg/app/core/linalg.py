"""
linalg.py

Small dense matrix inversion.

    invert_real(m)          Gauss-Jordan with partial pivoting on a p x p real matrix
    invert_quaternion(m)    p x p quaternion matrix, through the 4p x 4p real
                            left-regular representation (quaternion.embed)

Both raise SingularMatrix when a pivot falls below
SINGULAR_RTOL x (largest absolute entry of the input).
"""

import numpy as np

from app.core.errors import SingularMatrix
from app.core.quaternion import as_quaternion_array, embed, unembed


SINGULAR_RTOL = 1e-12


def _check_square(m: np.ndarray, name: str) -> None:
    if m.ndim < 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    if m.shape[0] == 0:
        raise ValueError(f"{name} must not be empty")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")


def invert_real(m: np.ndarray, rtol: float = SINGULAR_RTOL) -> np.ndarray:
    """
    Invert a square real matrix by Gauss-Jordan elimination with partial pivoting.

    Parameters
    ----------
    m    : (p, p) array-like
    rtol : pivot threshold relative to max |m_ij|

    Returns
    -------
    np.ndarray — m^-1, a new array; the input is never modified.

    Raises
    ------
    SingularMatrix — a pivot's magnitude is below rtol * max|m_ij|
    """
    a = np.array(m, dtype=np.float64)
    _check_square(a, "matrix")

    size = a.shape[0]
    scale = float(np.max(np.abs(a)))
    threshold = rtol * scale
    if scale == 0.0:
        raise SingularMatrix(column=0, pivot=0.0, threshold=threshold)

    # augmented [a | I], reduced in place
    work = np.hstack((a, np.eye(size)))

    for col in range(size):
        pivot_row = col + int(np.argmax(np.abs(work[col:, col])))
        pivot = work[pivot_row, col]
        if abs(pivot) < threshold or pivot == 0.0:
            raise SingularMatrix(column=col, pivot=float(abs(pivot)), threshold=threshold)

        if pivot_row != col:
            work[[col, pivot_row]] = work[[pivot_row, col]]

        work[col] /= work[col, col]

        factors = work[:, col].copy()
        factors[col] = 0.0
        work -= np.outer(factors, work[col])

    return work[:, size:]


def invert_quaternion(m: np.ndarray, rtol: float = SINGULAR_RTOL) -> np.ndarray:
    """
    Invert a square quaternion matrix given as a (p, p, 4) array.

    Each entry is embedded as its 4x4 left-multiplication block; the 4p x 4p
    real matrix is inverted with `invert_real` and the quaternion entries are
    read back from the blocks. The result is a two-sided inverse under the
    Hamilton-product matrix multiplication.
    """
    q = as_quaternion_array(m, name="quaternion matrix")
    if q.ndim != 3:
        raise ValueError(f"quaternion matrix must have shape (p, p, 4), got {q.shape}")
    _check_square(q[..., 0], "quaternion matrix")
    if not np.all(np.isfinite(q)):
        raise ValueError("quaternion matrix has non-finite entries")

    return unembed(invert_real(embed(q), rtol=rtol))


def max_abs_deviation(a: np.ndarray, b: np.ndarray) -> float:
    """Max-norm distance used by the identity checks."""
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))
