"""
networks/
---------
Trainable, steppable associative memories on unit quaternions.

Public API
----------
    from app.networks import FundamentalMemorySet, NetworkState
    from app.networks import train_hebbian, train_projection, train_qrcnn, train_qrpnn
    from app.networks import step, run, UpdateMode, build_model

Usage pattern
-------------
    memories = FundamentalMemorySet(u)                 # (p, n, 4) unit quaternions
    model = train_qrpnn(memories, ExponentialKernel(alpha=4))
    result = run(model, NetworkState(x0))              # RunResult(state, iterations, converged)
"""

from app.networks.base_network import ModelKind, TrainedMemory, UpdateMode, default_mode
from app.networks.memory_set import FundamentalMemorySet, NetworkState, check_unit
from app.networks.hopfield import (
    HopfieldMemory,
    check_hermitian,
    train_hebbian,
    train_projection,
)
from app.networks.correlation import CorrelationMemory, kernel_weights, train_qrcnn
from app.networks.projection import ProjectionMemory, kernel_matrix, train_qrpnn
from app.networks.dynamics import (
    DEFAULT_MAX_ITERS,
    DEFAULT_TOL,
    ZERO_RTOL,
    RunResult,
    advance,
    run,
    step,
)
from app.networks.factory import MODEL_NAMES, ModelSpec, build_model

__all__ = [
    # Types
    "ModelKind",
    "UpdateMode",
    "TrainedMemory",
    "FundamentalMemorySet",
    "NetworkState",
    "HopfieldMemory",
    "CorrelationMemory",
    "ProjectionMemory",
    "RunResult",
    "ModelSpec",
    # Training
    "train_hebbian",
    "train_projection",
    "train_qrcnn",
    "train_qrpnn",
    "build_model",
    "MODEL_NAMES",
    # Dynamics
    "kernel_weights",
    "kernel_matrix",
    "step",
    "run",
    "advance",
    "default_mode",
    "DEFAULT_MAX_ITERS",
    "DEFAULT_TOL",
    "ZERO_RTOL",
    # Checks
    "check_hermitian",
    "check_unit",
]
