"""
quaternion.py

Quaternion algebra on two levels:

Scalar level
------------
    Quaternion(q0, q1, q2, q3)     immutable value type, q = q0 + q1 i + q2 j + q3 k
    add, mul, conj, norm, sigma    the reference operations
    inner(x, y)                    sum_i conj(y_i) x_i   (conjugate on the SECOND argument)

Array level
-----------
Arrays whose trailing axis has length 4 hold quaternions component-wise
(dtype float64). These are what the networks iterate on:

    qmul, qconj, qnorm, qsigma, qinner, qmatmul
    left_matrix, embed, unembed    real 4x4 left-regular representation

The array functions follow the scalar definitions exactly; tests hold them
against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from app.core.errors import DomainError, LengthMismatch


DEFAULT_ATOL = 1e-9


# ============================================================
# Scalar value type
# ============================================================

@dataclass(frozen=True, slots=True)
class Quaternion:
    """
    Quaternion value q0 + q1 i + q2 j + q3 k with float64 components.

    Bipolar and complex values are quaternions with zero trailing parts;
    there is no separate scalar type.
    """

    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    def __post_init__(self):
        for name in ("q0", "q1", "q2", "q3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise DomainError(f"quaternion component {name} must be finite, got {value}")
            object.__setattr__(self, name, value)

    # ---------------- constructors ----------------

    @classmethod
    def real(cls, value: float) -> "Quaternion":
        return cls(value, 0.0, 0.0, 0.0)

    @classmethod
    def from_array(cls, values: Sequence[float] | np.ndarray) -> "Quaternion":
        if len(values) != 4:
            raise LengthMismatch(4, len(values), what="quaternion")
        return cls(*(float(v) for v in values))

    # ---------------- views ----------------

    @property
    def re(self) -> float:
        """Real part Re{q}."""
        return self.q0

    @property
    def ve(self) -> tuple[float, float, float]:
        """Vector part Ve{q}."""
        return (self.q1, self.q2, self.q3)

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.q0, self.q1, self.q2, self.q3)

    def to_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=np.float64)

    def isclose(self, other: "Quaternion", atol: float = DEFAULT_ATOL) -> bool:
        """Per-component absolute tolerance comparison."""
        return all(abs(a - b) <= atol for a, b in zip(self.as_tuple(), other.as_tuple()))

    # ---------------- operators ----------------

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return add(self, other)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return add(self, -other)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other: "Quaternion | float") -> "Quaternion":
        if isinstance(other, Quaternion):
            return mul(self, other)
        return Quaternion(self.q0 * other, self.q1 * other, self.q2 * other, self.q3 * other)

    def __rmul__(self, other: float) -> "Quaternion":
        # real scalars commute with every quaternion
        return self * other

    def __abs__(self) -> float:
        return norm(self)


ZERO = Quaternion()
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


# ============================================================
# Scalar operations
# ============================================================

def add(p: Quaternion, q: Quaternion) -> Quaternion:
    """Componentwise sum."""
    return Quaternion(p.q0 + q.q0, p.q1 + q.q1, p.q2 + q.q2, p.q3 + q.q3)


def mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """
    Hamilton product pq = p0 q0 - p.q + p0 q + q0 p + p x q.

    Not commutative: mul(I, J) == K while mul(J, I) == -K.
    """
    return Quaternion(
        p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
        p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
        p.q0 * q.q2 - p.q1 * q.q3 + p.q2 * q.q0 + p.q3 * q.q1,
        p.q0 * q.q3 + p.q1 * q.q2 - p.q2 * q.q1 + p.q3 * q.q0,
    )


def conj(q: Quaternion) -> Quaternion:
    return Quaternion(q.q0, -q.q1, -q.q2, -q.q3)


def norm(q: Quaternion) -> float:
    return math.sqrt(q.q0 * q.q0 + q.q1 * q.q1 + q.q2 * q.q2 + q.q3 * q.q3)


def sigma(q: Quaternion) -> Quaternion:
    """
    Project a non-zero quaternion onto the unit hypersphere, q / |q|.

    Raises
    ------
    DomainError — |q| == 0 or not finite. Callers in the dynamics treat this as
    the keep-previous-state branch of the update rule.
    """
    size = norm(q)
    if size == 0.0 or not math.isfinite(size):
        raise DomainError(f"sigma is undefined for |q| = {size}")
    return Quaternion(q.q0 / size, q.q1 / size, q.q2 / size, q.q3 / size)


def inner(x: Sequence[Quaternion], y: Sequence[Quaternion]) -> Quaternion:
    """
    Quaternionic inner product <x, y> = sum_i conj(y_i) x_i.

    Satisfies inner(x, y) == conj(inner(y, x)).
    """
    if len(x) != len(y):
        raise LengthMismatch(len(x), len(y))
    total = ZERO
    for xi, yi in zip(x, y):
        total = add(total, mul(conj(yi), xi))
    return total


def vector_isclose(
    x: Iterable[Quaternion],
    y: Iterable[Quaternion],
    atol: float = DEFAULT_ATOL,
) -> bool:
    x, y = list(x), list(y)
    if len(x) != len(y):
        return False
    return all(a.isclose(b, atol) for a, b in zip(x, y))


# ============================================================
# Array operations (trailing axis = 4 components)
# ============================================================

def as_quaternion_array(values, name: str = "array") -> np.ndarray:
    """Coerce to float64 and check the trailing axis holds 4 components."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim == 0 or arr.shape[-1] != 4:
        raise ValueError(f"{name} must have a trailing axis of length 4, got shape {arr.shape}")
    return arr


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product of quaternion arrays."""
    a0, a1, a2, a3 = np.moveaxis(np.asarray(a, dtype=np.float64), -1, 0)
    b0, b1, b2, b3 = np.moveaxis(np.asarray(b, dtype=np.float64), -1, 0)
    return np.stack(
        (
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ),
        axis=-1,
    )


_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])


def qconj(a: np.ndarray) -> np.ndarray:
    return np.asarray(a, dtype=np.float64) * _CONJ_SIGNS


def qnorm(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    return np.sqrt(np.sum(a * a, axis=-1))


def qsigma(a: np.ndarray, floor: np.ndarray | float = 0.0) -> tuple[np.ndarray, np.ndarray]:
    """
    Vectorised sigma.

    Parameters
    ----------
    a     : (..., 4) array
    floor : magnitudes at or below it count as zero; broadcasts against a[..., 0]

    Returns
    -------
    (unit, valid) — `unit` holds a/|a| where `valid`, zeros elsewhere;
    `valid` marks entries with finite components and floor < |a| < inf.
    """
    a = np.asarray(a, dtype=np.float64)
    finite = np.all(np.isfinite(a), axis=-1)
    with np.errstate(over="ignore", invalid="ignore"):
        sizes = qnorm(np.where(finite[..., None], a, 0.0))
    valid = finite & (sizes > 0.0) & (sizes > floor) & np.isfinite(sizes)
    safe = np.where(valid, sizes, 1.0)
    unit = np.where(valid[..., None], a / safe[..., None], 0.0)
    return unit, valid


def qinner(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Array inner product sum_i conj(y_i) x_i over the second-to-last axis."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape[-2] != y.shape[-2]:
        raise LengthMismatch(x.shape[-2], y.shape[-2])
    return np.sum(qmul(qconj(y), x), axis=-2)


def qinner_real(x: np.ndarray, y: np.ndarray) -> float:
    """Re{<x, y>}: the real dot product of the concatenated 4n components."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape:
        raise LengthMismatch(y.shape[0], x.shape[0])
    return float(np.dot(x.ravel(), y.ravel()))


def qmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Quaternion matrix product of (m, k, 4) and (k, l, 4) arrays.

    Evaluated as embed(a) @ embed(b) in the real representation, then read back.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape[1] != b.shape[0]:
        raise LengthMismatch(a.shape[1], b.shape[0], what="inner matrix dimension")
    # only the first column of each right-hand block is needed
    right = embed(b)[:, 0::4]
    product = embed(a) @ right                      # (4m, l)
    m, l = a.shape[0], b.shape[1]
    return product.reshape(m, 4, l).transpose(0, 2, 1).copy()


def left_matrix(q: np.ndarray) -> np.ndarray:
    """
    Real 4x4 block L(q) with L(q) @ r == q * r for every quaternion r.

    Broadcasts: input (..., 4) gives output (..., 4, 4).
    """
    q0, q1, q2, q3 = np.moveaxis(np.asarray(q, dtype=np.float64), -1, 0)
    return np.stack(
        (
            np.stack((q0, -q1, -q2, -q3), axis=-1),
            np.stack((q1, q0, -q3, q2), axis=-1),
            np.stack((q2, q3, q0, -q1), axis=-1),
            np.stack((q3, -q2, q1, q0), axis=-1),
        ),
        axis=-2,
    )


def embed(m: np.ndarray) -> np.ndarray:
    """Map an (r, c, 4) quaternion matrix to its (4r, 4c) real block matrix."""
    m = np.asarray(m, dtype=np.float64)
    rows, cols = m.shape[0], m.shape[1]
    blocks = left_matrix(m)  # (r, c, 4, 4)
    return blocks.transpose(0, 2, 1, 3).reshape(4 * rows, 4 * cols)


def unembed(real: np.ndarray) -> np.ndarray:
    """Inverse of `embed`: read each block's first column back as a quaternion."""
    real = np.asarray(real, dtype=np.float64)
    rows, cols = real.shape[0] // 4, real.shape[1] // 4
    blocks = real.reshape(rows, 4, cols, 4).transpose(0, 2, 1, 3)
    return blocks[:, :, :, 0].copy()


def to_quaternions(values: np.ndarray) -> list[Quaternion]:
    """(n, 4) array → list of Quaternion values."""
    return [Quaternion.from_array(row) for row in as_quaternion_array(values)]


def from_quaternions(values: Iterable[Quaternion]) -> np.ndarray:
    """Sequence of Quaternion values → (n, 4) array."""
    return np.array([q.as_tuple() for q in values], dtype=np.float64).reshape(-1, 4)
