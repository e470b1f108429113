import numpy as np

from app.kernels.base_kernel import BaseKernel


class HighOrderKernel(BaseKernel):
    """
    High-order kernel.

    Formula
    -------
        f(x; q) = (1 + x) ** q,   q > 1

    Parameters
    ----------
    q : float — order (preset example1 uses 5, example2 uses 20)
    """

    def __init__(self, q: float = 5.0):
        super().__init__(q=q)
        if self.q <= 1:
            raise ValueError(f"q must be greater than 1, got {q}")

    @property
    def q(self) -> float:
        return self._params["q"]

    @property
    def name(self) -> str:
        return "high-order"

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.power(1.0 + x, self.q)
