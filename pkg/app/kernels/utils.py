import math
from typing import Any

import numpy as np


def check_positive_real(name: str, value: Any) -> float:
    """
    Coerce a kernel parameter to float and require it to be finite and > 0.

    Raises
    ------
    TypeError  — value is not a real number (bools rejected)
    ValueError — value is not finite or not strictly positive
    """
    if isinstance(value, bool) or not isinstance(value, (int, float, np.integer, np.floating)):
        raise TypeError(f"{name} must be a real number, got {type(value).__name__}")
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def clamp_overlap(x: Any) -> np.ndarray:
    """
    Clamp normalised overlaps to [-1, 1].

    Returns a float64 copy; the input is never modified.
    """
    return np.clip(np.asarray(x, dtype=np.float64), -1.0, 1.0)


def normalized_overlaps(state_flat: np.ndarray, memories_flat: np.ndarray, n: int) -> np.ndarray:
    """
    Re{<x, u^xi>} / n for every stored memory.

    Parameters
    ----------
    state_flat    : (4n,) concatenated components of x
    memories_flat : (p, 4n) concatenated components of u^1..u^p
    n             : vector length

    Returns
    -------
    np.ndarray — (p,) overlaps, clamped to [-1, 1]
    """
    return clamp_overlap((memories_flat @ state_flat) / n)
