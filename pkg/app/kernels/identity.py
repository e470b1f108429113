import numpy as np

from app.kernels.base_kernel import BaseKernel


class IdentityKernel(BaseKernel):
    """
    Identity (correlation) kernel, f(x) = x.

    With this kernel the correlation network reduces to the Hebbian Hopfield
    network on bipolar vectors, and the projection network to the
    projection-rule Hopfield network. Weights may be negative or zero.
    """

    def __init__(self):
        super().__init__()

    @property
    def name(self) -> str:
        return "identity"

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.array(x, dtype=np.float64)
