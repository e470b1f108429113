"""
correlation.py

Quaternion-valued recurrent correlation networks (QRCNN).

Training keeps the memory set and kernel verbatim. At every step the
potential is a kernel-weighted sum of the stored memories:

    w_xi(t) = f( Re{<x(t), u^xi>} / n )
    a_i(t)  = sum_xi w_xi(t) u_i^xi
"""

from functools import cached_property

import numpy as np

from app.core.errors import LengthMismatch
from app.core.quaternion import qnorm
from app.kernels import BaseKernel, normalized_overlaps
from app.networks.base_network import ModelKind, TrainedMemory
from app.networks.memory_set import FundamentalMemorySet, NetworkState


def kernel_weights(
    state: NetworkState | np.ndarray,
    memories: FundamentalMemorySet,
    kernel: BaseKernel,
) -> np.ndarray:
    """
    Real weight of every stored memory for the given state.

    The normalised overlap is clamped to [-1, 1] before f is applied.

    Returns
    -------
    np.ndarray — shape (p,)
    """
    x = state.x if isinstance(state, NetworkState) else np.asarray(state, dtype=np.float64)
    if x.shape != (memories.n, 4):
        raise LengthMismatch(memories.n, x.shape[0] if x.ndim else 0, what="state")
    return kernel(normalized_overlaps(x.reshape(-1), memories.real_view(), memories.n))


class CorrelationMemory(TrainedMemory):
    """
    QRCNN: memory set + kernel, no precomputation.

    Subclasses swap the output-layer vectors (see ProjectionMemory).
    """

    def __init__(self, memories: FundamentalMemorySet, kernel: BaseKernel):
        if not isinstance(memories, FundamentalMemorySet):
            raise TypeError(f"memories must be a FundamentalMemorySet, got {type(memories).__name__}")
        if not isinstance(kernel, BaseKernel):
            raise TypeError(f"kernel must be a BaseKernel, got {type(kernel).__name__}")
        super().__init__(memories.n)
        self._memories = memories
        self._kernel = kernel

    # ------------------------------------------------------------------

    @property
    def kind(self) -> ModelKind:
        return ModelKind.QRCNN

    @property
    def name(self) -> str:
        return f"{self.kind.value}-{self._kernel.name}"

    @property
    def memories(self) -> FundamentalMemorySet:
        return self._memories

    @property
    def kernel(self) -> BaseKernel:
        return self._kernel

    @property
    def p(self) -> int:
        return self._memories.p

    @property
    def output_vectors(self) -> np.ndarray:
        """Vectors combined by the output layer, shape (p, n, 4)."""
        return self._memories.memories

    # ------------------------------------------------------------------

    def weights_for(self, x: np.ndarray) -> np.ndarray:
        return kernel_weights(x, self._memories, self._kernel)

    @cached_property
    def output_norms(self) -> np.ndarray:
        """|out_i^xi| for every output vector, shape (p, n)."""
        return qnorm(self.output_vectors)

    def potentials(self, x: np.ndarray) -> np.ndarray:
        return self.potentials_with_scales(x)[0]

    def potential_at(self, x: np.ndarray, j: int) -> np.ndarray:
        return self.potential_with_scale_at(x, j)[0]

    def term_scales(self, x: np.ndarray) -> np.ndarray:
        return self.potentials_with_scales(x)[1]

    def potentials_with_scales(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        self.check_state(x)
        w = self.weights_for(x)
        vectors = self.output_vectors
        a = (w @ vectors.reshape(vectors.shape[0], -1)).reshape(self.n, 4)
        # sum_xi |w_xi| |out_i^xi|
        return a, np.abs(w) @ self.output_norms

    def potential_with_scale_at(self, x: np.ndarray, j: int) -> tuple[np.ndarray, float]:
        w = self.weights_for(x)
        return w @ self.output_vectors[:, j, :], float(np.abs(w) @ self.output_norms[:, j])


def train_qrcnn(memories: FundamentalMemorySet, kernel: BaseKernel) -> CorrelationMemory:
    return CorrelationMemory(memories, kernel)
