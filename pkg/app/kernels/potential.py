import numpy as np

from app.kernels.base_kernel import BaseKernel


DEFAULT_EPSILON_P = 1e-5


class PotentialKernel(BaseKernel):
    """
    Potential-function kernel.

    Formula
    -------
        f(x; L) = 1 / (1 - x + eps_p) ** L,   L >= 1, eps_p > 0

    eps_p keeps the denominator away from zero at x = 1; at x = 1 the weight
    is eps_p ** -L (1e15 for L = 3 with the default eps_p).

    Parameters
    ----------
    L     : float — exponent (both presets use 3)
    eps_p : float — denominator offset (default: 1e-5)
    """

    def __init__(self, L: float = 3.0, eps_p: float = DEFAULT_EPSILON_P):
        super().__init__(L=L, eps_p=eps_p)
        if self.L < 1:
            raise ValueError(f"L must be at least 1, got {L}")

    @property
    def L(self) -> float:
        return self._params["L"]

    @property
    def eps_p(self) -> float:
        return self._params["eps_p"]

    @property
    def name(self) -> str:
        return "potential"

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        return 1.0 / np.power(1.0 - x + self.eps_p, self.L)
