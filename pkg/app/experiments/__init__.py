"""
experiments/
------------
Monte-Carlo recall experiments.

Responsibilities
----------------
- Draw random fundamental memories (bipolar, complex, quaternion)
- Corrupt probes with a given noise probability
- Run single trials and noise sweeps with reproducible per-trial seeds
- Validate configurations before anything runs

Public API
----------
    from app.experiments import TrialConfig, Domain, preset
    from app.experiments import run_trial, run_sweep, run_sweeps
"""

from app.experiments.models import (
    DEFAULT_SUCCESS_TOL,
    SWEEP_COLUMNS,
    Domain,
    SweepPoint,
    SweepResult,
    TrialConfig,
    TrialOutcome,
)
from app.experiments.validation import require_valid, validate_noise_grid, validate_trial_config
from app.experiments.sampling import (
    inject_noise,
    inject_noise_bipolar,
    inject_noise_complex,
    inject_noise_quaternion,
    rand_q,
    rand_q_array,
    rand_q_from_angles,
    random_bipolar_memories,
    random_complex_memories,
    random_memories,
    random_quaternion_memories,
)
from app.experiments.trials import run_trial
from app.experiments.sweep import DEFAULT_NOISE_GRID, run_sweep, run_sweeps, trial_rng
from app.experiments.presets import PRESET_NAMES, PRESETS, hebbian_capacity, preset

__all__ = [
    # Types
    "Domain",
    "TrialConfig",
    "TrialOutcome",
    "SweepPoint",
    "SweepResult",
    "SWEEP_COLUMNS",
    "DEFAULT_SUCCESS_TOL",
    # Validation
    "validate_trial_config",
    "validate_noise_grid",
    "require_valid",
    # Sampling
    "rand_q",
    "rand_q_array",
    "rand_q_from_angles",
    "random_bipolar_memories",
    "random_quaternion_memories",
    "random_complex_memories",
    "random_memories",
    "inject_noise",
    "inject_noise_bipolar",
    "inject_noise_quaternion",
    "inject_noise_complex",
    # Harness
    "run_trial",
    "run_sweep",
    "run_sweeps",
    "trial_rng",
    "DEFAULT_NOISE_GRID",
    # Presets
    "PRESETS",
    "PRESET_NAMES",
    "preset",
    "hebbian_capacity",
]
