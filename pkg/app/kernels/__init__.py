"""
kernels/
--------
Activation kernels for correlation and projection networks. Pure
computation with no state and no I/O.

Public API
----------
    from app.kernels import make_kernel, IdentityKernel, HighOrderKernel
    from app.kernels import PotentialKernel, ExponentialKernel

Usage pattern
-------------
    f = make_kernel("exponential", alpha=4)
    weights = f(overlaps)            # overlaps clamped to [-1, 1] first
    f.describe()                     # 'alpha=4'
"""

from typing import Any

from app.kernels.base_kernel import BaseKernel
from app.kernels.identity import IdentityKernel
from app.kernels.high_order import HighOrderKernel
from app.kernels.potential import PotentialKernel, DEFAULT_EPSILON_P
from app.kernels.exponential import ExponentialKernel
from app.kernels.utils import clamp_overlap, normalized_overlaps

_REGISTRY: dict[str, type[BaseKernel]] = {
    "identity": IdentityKernel,
    "high-order": HighOrderKernel,
    "potential": PotentialKernel,
    "exponential": ExponentialKernel,
}

KERNEL_NAMES: tuple[str, ...] = tuple(_REGISTRY)


def make_kernel(name: str, **params: Any) -> BaseKernel:
    """
    Build a kernel by name.

    Raises
    ------
    ValueError — unknown kernel name
    TypeError  — unexpected parameter for that kernel
    """
    try:
        cls = _REGISTRY[name]
    except KeyError:
        raise ValueError(
            f"Unknown kernel '{name}'. Choose from: {', '.join(KERNEL_NAMES)}"
        ) from None
    return cls(**params)


__all__ = [
    # Classes
    "BaseKernel",
    "IdentityKernel",
    "HighOrderKernel",
    "PotentialKernel",
    "ExponentialKernel",
    # Factory
    "make_kernel",
    "KERNEL_NAMES",
    "DEFAULT_EPSILON_P",
    # Utils
    "clamp_overlap",
    "normalized_overlaps",
]
