"""
presets.py

The two published experiments as ready-made configurations.

    example1   bipolar memories,    q=5,  L=3, alpha=4
    example2   quaternion memories, q=20, L=3, alpha=14

Both use n=100, p=36, 100 trials per noise level and at most 1000
iterations per run. The model field is a placeholder; callers set it
with TrialConfig.with_model.
"""

from dataclasses import replace
import math

from app.experiments.models import Domain, TrialConfig


PRESETS: dict[str, TrialConfig] = {
    "example1": TrialConfig(
        domain=Domain.BIPOLAR,
        n=100,
        p=36,
        model="qrpnn-exponential",
        q=5.0,
        L=3.0,
        alpha=4.0,
        trials=100,
        max_iters=1000,
    ),
    "example2": TrialConfig(
        domain=Domain.QUATERNION,
        n=100,
        p=36,
        model="qrpnn-exponential",
        q=20.0,
        L=3.0,
        alpha=14.0,
        trials=100,
        max_iters=1000,
    ),
}

PRESET_NAMES: tuple[str, ...] = tuple(PRESETS)


def preset(name: str, **overrides) -> TrialConfig:
    """
    Raises
    ------
    KeyError — unknown preset name
    """
    if name not in PRESETS:
        raise KeyError(f"Unknown preset '{name}'. Choose from: {', '.join(PRESET_NAMES)}")
    return replace(PRESETS[name], **overrides)


def hebbian_capacity(n: int) -> float:
    """Approximate number of items a Hebbian network of n neurons recalls: n / (2 ln n)."""
    if n < 2:
        raise ValueError(f"capacity needs n >= 2, got {n}")
    return n / (2.0 * math.log(n))
