import numpy as np

from app.kernels.base_kernel import BaseKernel


class ExponentialKernel(BaseKernel):
    """
    Exponential kernel.

    Formula
    -------
        f(x; alpha) = exp(alpha * x),   alpha > 0

    Parameters
    ----------
    alpha : float — sharpness (preset example1 uses 4, example2 uses 14)
    """

    def __init__(self, alpha: float = 4.0):
        super().__init__(alpha=alpha)

    @property
    def alpha(self) -> float:
        return self._params["alpha"]

    @property
    def name(self) -> str:
        return "exponential"

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return np.exp(self.alpha * x)
