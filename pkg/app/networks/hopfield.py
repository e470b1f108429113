"""
hopfield.py

Continuous-valued quaternionic Hopfield networks (CV-QHNN).

    train_hebbian(memories)      correlation rule   w_ij = (1/n) sum_xi u_i conj(u_j)
    train_projection(memories)   projection rule    w_ij = (1/n) sum_eta,xi u_i^eta c^-1_eta,xi conj(u_j^xi)
    HopfieldMemory.from_weights  any weight matrix satisfying w_ij = conj(w_ji), w_ii real >= 0

Potentials a_i = sum_j w_ij x_j are evaluated as one real matrix-vector
product against the embedded weight matrix.
"""

import numpy as np

from app.core.errors import DomainError
from app.core.linalg import invert_quaternion
from app.core.quaternion import as_quaternion_array, embed, qconj, qmatmul, qnorm
from app.networks.base_network import ModelKind, TrainedMemory
from app.networks.memory_set import FundamentalMemorySet


HERMITIAN_ATOL = 1e-9


def check_hermitian(weights: np.ndarray, atol: float = HERMITIAN_ATOL) -> tuple[bool, str | None]:
    """
    Check the convergence conditions on a quaternion weight matrix.

    w_ij = conj(w_ji) and w_ii a non-negative real, all within `atol`.

    Returns
    -------
    (ok, reason) — reason is None when ok
    """
    w = np.asarray(weights, dtype=np.float64)
    if w.ndim != 3 or w.shape[0] != w.shape[1] or w.shape[2] != 4:
        return False, "WEIGHTS_NOT_SQUARE"
    if not np.all(np.isfinite(w)):
        return False, "WEIGHTS_NOT_FINITE"

    adjoint = qconj(w.transpose(1, 0, 2))
    if w.size and float(np.max(np.abs(w - adjoint))) > atol:
        return False, "WEIGHTS_NOT_HERMITIAN"

    diagonal = w[np.arange(w.shape[0]), np.arange(w.shape[0])]
    if np.any(np.abs(diagonal[:, 1:]) > atol):
        return False, "DIAGONAL_NOT_REAL"
    if np.any(diagonal[:, 0] < -atol):
        return False, "DIAGONAL_NEGATIVE"

    return True, None


class HopfieldMemory(TrainedMemory):
    """
    CV-QHNN with an explicit quaternion weight matrix W (n x n).

    Parameters
    ----------
    weights : (n, n, 4) array
    kind    : ModelKind.QHNN_HEBBIAN or ModelKind.QHNN_PROJECTION

    Raises
    ------
    DomainError — W violates the convergence conditions
    """

    def __init__(self, weights: np.ndarray, kind: ModelKind = ModelKind.QHNN_HEBBIAN):
        w = as_quaternion_array(weights, name="weights")
        if not kind.is_hopfield:
            raise ValueError(f"HopfieldMemory needs a QHNN kind, got {kind.value}")
        ok, reason = check_hermitian(w)
        if not ok:
            raise DomainError(f"weight matrix rejected: {reason}")
        super().__init__(w.shape[0])

        self._kind = kind
        self._weights = np.array(w, copy=True)
        self._weights.setflags(write=False)
        self._real = embed(self._weights)
        self._real.setflags(write=False)
        self._magnitudes = qnorm(self._weights)
        self._magnitudes.setflags(write=False)

    @classmethod
    def from_weights(cls, weights: np.ndarray, kind: ModelKind = ModelKind.QHNN_HEBBIAN) -> "HopfieldMemory":
        """Wrap a hand-built weight matrix (e.g. W = 0, or a non-PSD Hermitian W)."""
        return cls(weights, kind)

    @property
    def kind(self) -> ModelKind:
        return self._kind

    @property
    def name(self) -> str:
        return self._kind.value

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    def potentials(self, x: np.ndarray) -> np.ndarray:
        self.check_state(x)
        return (self._real @ x.reshape(-1)).reshape(self.n, 4)

    def potential_at(self, x: np.ndarray, j: int) -> np.ndarray:
        return self._real[4 * j:4 * j + 4] @ x.reshape(-1)

    def term_scales(self, x: np.ndarray) -> np.ndarray:
        # sum_j |w_ij| |x_j|
        return self._magnitudes @ qnorm(x)

    def potential_with_scale_at(self, x: np.ndarray, j: int) -> tuple[np.ndarray, float]:
        return self.potential_at(x, j), float(self._magnitudes[j] @ qnorm(x))


# ============================================================
# Training
# ============================================================

def hebbian_weights(memories: FundamentalMemorySet) -> np.ndarray:
    u = memories.memories
    # (n, p) @ (p, n): w_ij = sum_xi u_i^xi conj(u_j^xi)
    return qmatmul(u.transpose(1, 0, 2), qconj(u)) / memories.n


def quaternion_gram(memories: FundamentalMemorySet) -> np.ndarray:
    """c_eta,xi = (1/n) <u^xi, u^eta> = (1/n) sum_j conj(u_j^eta) u_j^xi, shape (p, p, 4)."""
    u = memories.memories
    return qmatmul(qconj(u), u.transpose(1, 0, 2)) / memories.n


def projection_weights(memories: FundamentalMemorySet) -> np.ndarray:
    """
    Raises
    ------
    SingularMatrix — the quaternion Gram matrix is not invertible
    """
    u = memories.memories
    c_inv = invert_quaternion(quaternion_gram(memories))
    projected = qmatmul(u.transpose(1, 0, 2), c_inv)        # (n, p): sum_eta u_i^eta c^-1_eta,xi
    weights = qmatmul(projected, qconj(u)) / memories.n     # (n, n)
    # symmetrise away rounding so the convergence check holds to machine precision
    return 0.5 * (weights + qconj(weights.transpose(1, 0, 2)))


def train_hebbian(memories: FundamentalMemorySet) -> HopfieldMemory:
    """Correlation (Hebbian) rule; w_ii = p/n for every i."""
    return HopfieldMemory(hebbian_weights(memories), ModelKind.QHNN_HEBBIAN)


def train_projection(memories: FundamentalMemorySet) -> HopfieldMemory:
    """
    Projection (generalised-inverse) rule. Every stored memory is a fixed point.

    Raises
    ------
    SingularMatrix — degenerate memory set (e.g. duplicates)
    """
    return HopfieldMemory(projection_weights(memories), ModelKind.QHNN_PROJECTION)
