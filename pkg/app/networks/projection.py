"""
projection.py

Quaternion-valued recurrent projection networks (QRPNN).

Training builds the real p x p kernel matrix

    c_eta,xi = f( Re{<u^xi, u^eta>} / n )

inverts it, and stores the projected memories

    v_i^xi = sum_eta u_i^eta c^-1_eta,xi

The potential is a_i(t) = sum_xi w_xi(t) v_i^xi with the same kernel
weights as the correlation network. If C is invertible every stored
memory is a fixed point: probing with u^gamma gives w(0) = C[:, gamma],
hence a(0) = u^gamma.
"""

import numpy as np

from app.core.errors import KernelOverflow
from app.core.linalg import invert_real
from app.kernels import BaseKernel, clamp_overlap
from app.networks.base_network import ModelKind
from app.networks.correlation import CorrelationMemory
from app.networks.memory_set import FundamentalMemorySet


def kernel_matrix(memories: FundamentalMemorySet, kernel: BaseKernel) -> np.ndarray:
    """Real kernel matrix C; symmetric, diagonal entries f(1)."""
    flat = memories.real_view()
    return kernel(clamp_overlap((flat @ flat.T) / memories.n))


class ProjectionMemory(CorrelationMemory):
    """
    QRPNN: memory set + kernel + projected memories V.

    Raises
    ------
    SingularMatrix — C is not invertible (duplicate or dependent memories)
    KernelOverflow — f(1) overflows, so C has non-finite entries
    """

    def __init__(self, memories: FundamentalMemorySet, kernel: BaseKernel):
        super().__init__(memories, kernel)

        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            c = kernel_matrix(memories, kernel)
        if not np.all(np.isfinite(c)):
            raise KernelOverflow(kernel.peak())
        c_inv = invert_real(c)
        # V[xi] = sum_eta c^-1[eta, xi] u^eta
        projected = (c_inv.T @ memories.real_view()).reshape(memories.p, memories.n, 4)

        self._c = c
        self._c_inv = c_inv
        self._projected = projected
        for arr in (self._c, self._c_inv, self._projected):
            arr.setflags(write=False)

    @property
    def kind(self) -> ModelKind:
        return ModelKind.QRPNN

    @property
    def c(self) -> np.ndarray:
        return self._c

    @property
    def c_inv(self) -> np.ndarray:
        return self._c_inv

    @property
    def projected(self) -> np.ndarray:
        """Projected memories v^1..v^p, shape (p, n, 4); not unit in general."""
        return self._projected

    @property
    def output_vectors(self) -> np.ndarray:
        return self._projected


def train_qrpnn(memories: FundamentalMemorySet, kernel: BaseKernel) -> ProjectionMemory:
    return ProjectionMemory(memories, kernel)
