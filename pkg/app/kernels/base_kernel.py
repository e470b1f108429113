from abc import ABC, abstractmethod
from typing import Any

import numpy as np

from app.kernels.utils import clamp_overlap, check_positive_real


class BaseKernel(ABC):
    """
    Abstract base class for all activation kernels.

    A kernel is a continuous, monotone non-decreasing real function f on
    [-1, 1]. It turns the normalised overlap Re{<x, u>}/n between the
    network state and a stored memory into the weight of that memory.

    All kernels must:
    - Accept a scalar or ndarray of overlaps
    - Return float64 values of the same shape
    - Never modify their input
    - Be immutable after __init__

    Calling a kernel clamps its argument to [-1, 1] first; rounding can push an
    overlap to 1 + 1e-16.
    """

    def __init__(self, **params: float):
        # stored private, exposed read-only through `params`
        self._params: dict[str, float] = {
            key: check_positive_real(key, value) for key, value in params.items()
        }

    # ------------------------------------------------------------------
    # Read-only attributes (frozen after __init__)
    # ------------------------------------------------------------------

    @property
    def params(self) -> dict[str, float]:
        return dict(self._params)

    # ------------------------------------------------------------------
    # Abstract interface
    # ------------------------------------------------------------------

    @property
    @abstractmethod
    def name(self) -> str:
        """Short kernel name (e.g. 'exponential')."""
        ...

    @abstractmethod
    def evaluate(self, x: np.ndarray) -> np.ndarray:
        """
        Apply f to overlaps already inside [-1, 1].

        Parameters
        ----------
        x : np.ndarray — overlaps in [-1, 1]

        Returns
        -------
        np.ndarray — f(x), float64, same shape
        """
        ...

    # ------------------------------------------------------------------
    # Shared behaviour
    # ------------------------------------------------------------------

    def __call__(self, x: Any) -> np.ndarray:
        return self.evaluate(clamp_overlap(x))

    def peak(self) -> float:
        """f(1), the largest value on [-1, 1]; inf when it overflows float64."""
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            return float(self.evaluate(np.float64(1.0)))

    def describe(self) -> str:
        """Compact parameter string for CSV rows, e.g. 'L=3;eps_p=1e-05'."""
        return ";".join(f"{key}={value:g}" for key, value in self._params.items())

    def __repr__(self) -> str:
        args = ", ".join(f"{key}={value!r}" for key, value in self._params.items())
        return f"{type(self).__name__}({args})"

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self._params == other._params  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(sorted(self._params.items()))))
