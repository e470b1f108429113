from typing import Iterable, Optional, Tuple
import math

from app.core.errors import ConfigError
from app.core.logger import log
from app.experiments.models import Domain, TrialConfig
from app.networks import UpdateMode
from app.networks.factory import MODEL_NAMES


# ============================================================
# Limits
# ============================================================

MAX_SEED = 2**64 - 1

# kernel name → reason when its peak f(1) overflows float64
_OVERFLOW_REASONS = {
    "high-order": "Q_OVERFLOWS",
    "potential": "POTENTIAL_OVERFLOWS",
    "exponential": "ALPHA_OVERFLOWS",
}


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_real(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool) and math.isfinite(value)


# ============================================================
# Trial configuration validation
# ============================================================

def validate_trial_config(config: TrialConfig) -> Tuple[bool, Optional[str]]:
    """
    Answers ONLY:
    'Can this configuration be run as written?'

    Returns (True, None) or (False, REASON_CODE).
    """

    # --------------------------------------------------------
    # 1. Domain and model
    # --------------------------------------------------------
    if not isinstance(config.domain, Domain):
        return False, "UNKNOWN_DOMAIN"

    if config.model not in MODEL_NAMES:
        return False, "UNKNOWN_MODEL"

    if config.update_mode is not None and not isinstance(config.update_mode, UpdateMode):
        return False, "UNKNOWN_UPDATE_MODE"

    # --------------------------------------------------------
    # 2. Sizes
    # --------------------------------------------------------
    if not _is_int(config.n) or config.n < 1:
        return False, "N_NOT_POSITIVE"

    if not _is_int(config.p) or config.p < 1:
        return False, "P_NOT_POSITIVE"

    # --------------------------------------------------------
    # 3. Kernel parameters
    # --------------------------------------------------------
    if not _is_real(config.q) or config.q <= 1:
        return False, "Q_NOT_ABOVE_ONE"

    if not _is_real(config.L) or config.L < 1:
        return False, "L_BELOW_ONE"

    if not _is_real(config.eps_p) or config.eps_p <= 0:
        return False, "EPSILON_P_NOT_POSITIVE"

    if not _is_real(config.alpha) or config.alpha <= 0:
        return False, "ALPHA_NOT_POSITIVE"

    kernel = config.spec.make_kernel(config.kernel_params)
    if kernel is not None and not math.isfinite(kernel.peak()):
        return False, _OVERFLOW_REASONS[kernel.name]

    # --------------------------------------------------------
    # 4. Protocol
    # --------------------------------------------------------
    if not _is_real(config.noise_prob) or not 0.0 <= config.noise_prob <= 1.0:
        return False, "NOISE_OUT_OF_RANGE"

    if not _is_int(config.trials) or config.trials < 1:
        return False, "TRIALS_NOT_POSITIVE"

    if not _is_int(config.max_iters) or config.max_iters < 1:
        return False, "MAX_ITERS_NOT_POSITIVE"

    if not _is_real(config.tol) or config.tol < 0:
        return False, "TOL_NEGATIVE"

    if not _is_real(config.success_tol) or config.success_tol < 0:
        return False, "SUCCESS_TOL_NEGATIVE"

    if not _is_int(config.seed) or not 0 <= config.seed <= MAX_SEED:
        return False, "SEED_OUT_OF_RANGE"

    return True, None


def require_valid(config: TrialConfig) -> TrialConfig:
    """
    Return `config` unchanged, or log and raise ConfigError with the reason code.
    """
    ok, reason = validate_trial_config(config)
    if not ok:
        log(
            "CONFIG_REJECTED",
            layer="experiments",
            model=str(config.model),
            reason=reason,
        )
        raise ConfigError(reason, repr(config))
    return config


def validate_noise_grid(grid: Iterable[float]) -> Tuple[bool, Optional[str]]:
    values = list(grid)
    if not values:
        return False, "NOISE_GRID_EMPTY"
    for value in values:
        if not _is_real(value) or not 0.0 <= value <= 1.0:
            return False, "NOISE_OUT_OF_RANGE"
    if len(set(values)) != len(values):
        return False, "NOISE_GRID_DUPLICATES"
    return True, None
