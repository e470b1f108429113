from abc import ABC, abstractmethod
from enum import Enum

import numpy as np

from app.core.errors import LengthMismatch


class ModelKind(Enum):
    """
    The four trained-memory families.

    QHNN kinds carry an explicit n x n quaternion weight matrix; QRCNN and
    QRPNN keep the memory set and a kernel (plus projected memories for QRPNN).
    """
    QHNN_HEBBIAN = "qhnn-hebbian"
    QHNN_PROJECTION = "qhnn-projection"
    QRCNN = "qrcnn"
    QRPNN = "qrpnn"

    @property
    def is_hopfield(self) -> bool:
        return self in (ModelKind.QHNN_HEBBIAN, ModelKind.QHNN_PROJECTION)


class UpdateMode(Enum):
    """
    SYNCHRONOUS  — every neuron computed from the same old state
    ASYNCHRONOUS — neurons 1..n in fixed cyclic order, each seeing the
                   updates made earlier in the same sweep
    """
    SYNCHRONOUS = "synchronous"
    ASYNCHRONOUS = "asynchronous"


def default_mode(kind: ModelKind) -> UpdateMode:
    """Asynchronous for Hopfield kinds (their convergence guarantee), synchronous otherwise."""
    return UpdateMode.ASYNCHRONOUS if kind.is_hopfield else UpdateMode.SYNCHRONOUS


class TrainedMemory(ABC):
    """
    Abstract base class for a ready-to-run associative memory.

    Subclasses must:
    - Be immutable after __init__
    - Compute activation potentials for all neurons (`potentials`) and for a
      single neuron (`potential_at`, used by asynchronous sweeps)
    - Never normalise: the update rule in `dynamics` applies sigma and the
      keep-previous branch
    """

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        self._n = n

    # ------------------------------------------------------------------
    # Read-only attributes
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    # ------------------------------------------------------------------
    # Abstract interface
    # ------------------------------------------------------------------

    @property
    @abstractmethod
    def kind(self) -> ModelKind:
        ...

    @property
    @abstractmethod
    def name(self) -> str:
        """Model name as used on the command line, e.g. 'qrpnn-exponential'."""
        ...

    @abstractmethod
    def potentials(self, x: np.ndarray) -> np.ndarray:
        """
        Activation potentials a(t) for every neuron.

        Parameters
        ----------
        x : np.ndarray — state, shape (n, 4)

        Returns
        -------
        np.ndarray — shape (n, 4)
        """
        ...

    @abstractmethod
    def potential_at(self, x: np.ndarray, j: int) -> np.ndarray:
        """Activation potential a_j(t) of a single neuron, shape (4,)."""
        ...

    @abstractmethod
    def term_scales(self, x: np.ndarray) -> np.ndarray:
        """
        Summed magnitudes of the terms that add up to each potential,
        shape (n,). A potential that is tiny against its scale is a
        cancellation and counts as zero in the update rule.
        """
        ...

    def potentials_with_scales(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return self.potentials(x), self.term_scales(x)

    def potential_with_scale_at(self, x: np.ndarray, j: int) -> tuple[np.ndarray, float]:
        return self.potential_at(x, j), float(self.term_scales(x)[j])

    # ------------------------------------------------------------------
    # Shared helpers
    # ------------------------------------------------------------------

    @property
    def default_mode(self) -> UpdateMode:
        return default_mode(self.kind)

    def check_state(self, x: np.ndarray) -> None:
        if x.shape != (self._n, 4):
            raise LengthMismatch(self._n, x.shape[0] if x.ndim else 0, what="state")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, n={self.n})"
