"""
memory_set.py

Value objects the networks operate on.

    FundamentalMemorySet   p unit-quaternion vectors of length n, array (p, n, 4)
    NetworkState           current unit-quaternion state x(t), array (n, 4), and t

Both are immutable: the wrapped arrays are copied on construction and
flagged read-only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from app.core.errors import DomainError, LengthMismatch
from app.core.quaternion import (
    DEFAULT_ATOL,
    Quaternion,
    as_quaternion_array,
    from_quaternions,
    qnorm,
)


UNIT_ATOL = DEFAULT_ATOL


def _frozen(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=np.float64, copy=True)
    out.setflags(write=False)
    return out


def check_unit(values: np.ndarray, atol: float = UNIT_ATOL, what: str = "vector") -> None:
    """Raise DomainError unless every quaternion in `values` has norm 1 within atol."""
    if not np.all(np.isfinite(values)):
        raise DomainError(f"{what} has non-finite components")
    deviation = np.abs(qnorm(values) - 1.0)
    if deviation.size and float(np.max(deviation)) > atol:
        worst = np.unravel_index(int(np.argmax(deviation)), deviation.shape)
        raise DomainError(
            f"{what} component {tuple(int(i) for i in worst)} has norm "
            f"{1.0 + float(deviation[worst]):.12g}, expected 1"
        )


# ============================================================
# Fundamental memory set
# ============================================================

@dataclass(frozen=True, eq=False)
class FundamentalMemorySet:
    """
    p fundamental memories u^1..u^p, each a unit-quaternion vector of length n.

    `memories[xi, i]` is the quaternion u_i^(xi+1) as a 4-component row.
    """

    memories: np.ndarray
    _flat: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        arr = as_quaternion_array(self.memories, name="memories")
        if arr.ndim != 3:
            raise ValueError(f"memories must have shape (p, n, 4), got {arr.shape}")
        p, n = arr.shape[0], arr.shape[1]
        if p < 1:
            raise ValueError("a memory set needs at least one memory (p >= 1)")
        if n < 1:
            raise ValueError("memories must have length n >= 1")
        check_unit(arr, what="memory set")

        frozen = _frozen(arr)
        object.__setattr__(self, "memories", frozen)
        object.__setattr__(self, "_flat", _frozen(frozen.reshape(p, 4 * n)))

    # ---------------- constructors ----------------

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[Quaternion]]) -> "FundamentalMemorySet":
        rows = [from_quaternions(v) for v in vectors]
        lengths = {len(r) for r in rows}
        if len(lengths) > 1:
            raise LengthMismatch(min(lengths), max(lengths), what="memory")
        return cls(np.stack(rows))

    @classmethod
    def from_bipolar(cls, values) -> "FundamentalMemorySet":
        """(p, n) array of +-1 → memory set with zero imaginary parts."""
        real = np.asarray(values, dtype=np.float64)
        if real.ndim != 2:
            raise ValueError(f"bipolar memories must have shape (p, n), got {real.shape}")
        arr = np.zeros(real.shape + (4,))
        arr[..., 0] = real
        return cls(arr)

    # ---------------- views ----------------

    @property
    def p(self) -> int:
        return self.memories.shape[0]

    @property
    def n(self) -> int:
        return self.memories.shape[1]

    def __len__(self) -> int:
        return self.p

    def __getitem__(self, index: int) -> np.ndarray:
        return self.memories[index]

    def real_view(self) -> np.ndarray:
        """(p, 4n) concatenated components; Re{<x, u^xi>} = real_view() @ vec(x)."""
        return self._flat

    def is_bipolar(self) -> bool:
        return bool(np.all(self.memories[..., 1:] == 0.0) and np.all(np.abs(self.memories[..., 0]) == 1.0))


# ============================================================
# Network state
# ============================================================

@dataclass(frozen=True, eq=False)
class NetworkState:
    """State x(t) in S^n at iteration t."""

    x: np.ndarray
    t: int = 0

    def __post_init__(self):
        arr = as_quaternion_array(self.x, name="state")
        if arr.ndim != 2:
            raise ValueError(f"state must have shape (n, 4), got {arr.shape}")
        if arr.shape[0] < 1:
            raise ValueError("state must have length n >= 1")
        if self.t < 0:
            raise ValueError(f"iteration counter must be non-negative, got {self.t}")
        check_unit(arr, what="state")
        object.__setattr__(self, "x", _frozen(arr))

    @classmethod
    def from_quaternions(cls, values: Sequence[Quaternion], t: int = 0) -> "NetworkState":
        return cls(from_quaternions(values), t)

    @property
    def n(self) -> int:
        return self.x.shape[0]

    def flat(self) -> np.ndarray:
        return self.x.reshape(-1)

    def distance(self, other: "NetworkState | np.ndarray") -> float:
        """Max absolute component difference."""
        target = other.x if isinstance(other, NetworkState) else np.asarray(other, dtype=np.float64)
        if target.shape != self.x.shape:
            raise LengthMismatch(self.n, target.shape[0], what="state")
        return float(np.max(np.abs(self.x - target)))

    def is_bipolar(self) -> bool:
        return bool(np.all(self.x[:, 1:] == 0.0) and np.all(np.abs(self.x[:, 0]) == 1.0))
