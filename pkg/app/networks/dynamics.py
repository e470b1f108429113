"""
dynamics.py

Update rule shared by every model:

    x_j(t+1) = sigma(a_j(t))   if 0 < |a_j(t)| < inf
             = x_j(t)          otherwise

    step(model, state, mode)                       one synchronous step or one asynchronous sweep
    run(model, initial, mode, max_iters, tol)      iterate until successive states differ by <= tol

Non-finite potentials (overflowing kernels) take the keep-previous branch,
and so do potentials lost in rounding: a sum of terms that cancels to
within ZERO_RTOL of the terms' total magnitude is treated as exactly 0.
"""

from typing import NamedTuple

import numpy as np

from app.core.quaternion import qsigma
from app.networks.base_network import TrainedMemory, UpdateMode
from app.networks.memory_set import NetworkState


DEFAULT_MAX_ITERS = 1000
DEFAULT_TOL = 1e-6

# |a_j| at or below ZERO_RTOL * (sum of |terms| in a_j) is a cancellation: exact potential 0
ZERO_RTOL = 1e-12


class RunResult(NamedTuple):
    state: NetworkState
    iterations: int
    converged: bool


def _resolve_mode(model: TrainedMemory, mode: UpdateMode | None) -> UpdateMode:
    return model.default_mode if mode is None else UpdateMode(mode)


def _synchronous(model: TrainedMemory, x: np.ndarray) -> np.ndarray:
    a, scales = model.potentials_with_scales(x)
    unit, valid = qsigma(a, floor=ZERO_RTOL * scales)
    return np.where(valid[:, None], unit, x)


def _asynchronous(model: TrainedMemory, x: np.ndarray) -> np.ndarray:
    out = np.array(x, copy=True)
    for j in range(model.n):
        a, scale = model.potential_with_scale_at(out, j)
        unit, valid = qsigma(a, floor=ZERO_RTOL * scale)
        if valid:
            out[j] = unit
    return out


def advance(model: TrainedMemory, x: np.ndarray, mode: UpdateMode) -> np.ndarray:
    """Array-level step: (n, 4) → (n, 4). `x` is never modified."""
    with np.errstate(over="ignore", invalid="ignore"):
        if mode is UpdateMode.SYNCHRONOUS:
            return _synchronous(model, x)
        return _asynchronous(model, x)


def step(
    model: TrainedMemory,
    state: NetworkState,
    mode: UpdateMode | None = None,
) -> NetworkState:
    """
    Apply the update rule once.

    Parameters
    ----------
    model : TrainedMemory
    state : NetworkState — length must equal model.n
    mode  : UpdateMode | None — None picks the model's default

    Returns
    -------
    NetworkState — new state with t incremented
    """
    model.check_state(state.x)
    return NetworkState(advance(model, state.x, _resolve_mode(model, mode)), state.t + 1)


def run(
    model: TrainedMemory,
    initial: NetworkState,
    mode: UpdateMode | None = None,
    max_iters: int = DEFAULT_MAX_ITERS,
    tol: float = DEFAULT_TOL,
) -> RunResult:
    """
    Iterate `step` until the max component distance between successive
    states is <= tol, or until max_iters steps have been taken.

    Returns
    -------
    RunResult(state, iterations, converged)
    """
    if not isinstance(max_iters, int) or max_iters < 1:
        raise ValueError(f"max_iters must be a positive integer, got {max_iters!r}")
    if not tol >= 0:
        raise ValueError(f"tol must be non-negative, got {tol!r}")

    model.check_state(initial.x)
    resolved = _resolve_mode(model, mode)

    current = initial.x
    for iteration in range(1, max_iters + 1):
        following = advance(model, current, resolved)
        if float(np.max(np.abs(following - current))) <= tol:
            return RunResult(NetworkState(following, initial.t + iteration), iteration, True)
        current = following

    return RunResult(NetworkState(current, initial.t + max_iters), max_iters, False)
