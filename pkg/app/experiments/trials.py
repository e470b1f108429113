"""
trials.py

One Monte-Carlo trial:

    1. draw a fresh memory set u^1..u^p for the configured domain
    2. corrupt u^1 with the configured noise probability
    3. train the configured model (SingularMatrix or KernelOverflow →
       failed trial, flagged)
    4. run the dynamics from the corrupted probe
    5. success iff the final state is within success_tol of u^1
       (max absolute component difference)

Random draws happen in that order and never depend on the model, so
every model sees the same memories and probes for a given stream.
"""

import numpy as np

from app.core.errors import KernelOverflow, SingularMatrix
from app.core.logger import log
from app.experiments.models import TrialConfig, TrialOutcome
from app.experiments.sampling import inject_noise, random_memories
from app.networks import NetworkState, build_model, run


def run_trial(
    config: TrialConfig,
    rng: np.random.Generator,
    correlation_id: str | None = None,
) -> TrialOutcome:
    """
    Parameters
    ----------
    config : TrialConfig — assumed valid (see require_valid)
    rng    : numpy Generator owned by this trial
    correlation_id : optional tag carried into anomaly logs

    Returns
    -------
    TrialOutcome
    """
    memories = random_memories(config.domain, config.n, config.p, rng)
    target = memories[0]
    probe = inject_noise(config.domain, target, config.noise_prob, rng)

    try:
        model = build_model(config.spec, memories, config.kernel_params)
    except SingularMatrix as exc:
        log(
            "TRAINING_SINGULAR",
            layer="training",
            model=config.model,
            correlation_id=correlation_id,
            column=exc.column,
            pivot=exc.pivot,
            threshold=exc.threshold,
        )
        return TrialOutcome(
            success=False,
            iterations=0,
            converged=False,
            final_distance=float("inf"),
            singular=True,
        )
    except KernelOverflow as exc:
        log(
            "TRAINING_OVERFLOW",
            layer="training",
            model=config.model,
            correlation_id=correlation_id,
            peak=exc.peak,
        )
        return TrialOutcome(
            success=False,
            iterations=0,
            converged=False,
            final_distance=float("inf"),
            overflow=True,
        )

    result = run(
        model,
        NetworkState(probe),
        mode=config.effective_mode,
        max_iters=config.max_iters,
        tol=config.tol,
    )

    if not result.converged:
        log(
            "RUN_NOT_CONVERGED",
            layer="dynamics",
            model=config.model,
            correlation_id=correlation_id,
            iterations=result.iterations,
            noise_prob=config.noise_prob,
        )

    distance = result.state.distance(target)
    return TrialOutcome(
        success=distance <= config.success_tol,
        iterations=result.iterations,
        converged=result.converged,
        final_distance=distance,
    )
