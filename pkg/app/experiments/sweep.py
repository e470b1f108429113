"""
sweep.py

Recall probability by noise intensity.

For every noise value in the grid, `trials` independent trials are run.
Trial (grid_index, trial_index) draws from its own generator seeded with
SeedSequence([seed, grid_index, trial_index]), so the outcome of a trial
depends on nothing but those three integers and the configuration. Serial
and parallel runs therefore agree bit for bit, and different models
swept with one seed see identical memory sets and probes.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence
import math

import numpy as np

from app.core.config import get_settings
from app.core.errors import ConfigError
from app.core.logger import log
from app.experiments.models import SweepPoint, SweepResult, TrialConfig, TrialOutcome
from app.experiments.trials import run_trial
from app.experiments.validation import require_valid, validate_noise_grid


DEFAULT_NOISE_GRID: tuple[float, ...] = tuple(round(0.1 * k, 1) for k in range(11))


def trial_rng(seed: int, grid_index: int, trial_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, grid_index, trial_index]))


def _run_chunk(
    config: TrialConfig,
    grid_index: int,
    trial_indices: Sequence[int],
) -> list[TrialOutcome]:
    """Module-level so worker processes can unpickle it."""
    outcomes = []
    for trial_index in trial_indices:
        rng = trial_rng(config.seed, grid_index, trial_index)
        outcomes.append(
            run_trial(config, rng, correlation_id=f"{config.model}/{grid_index}/{trial_index}")
        )
    return outcomes


def _chunks(trials: int, workers: int) -> list[range]:
    size = max(1, math.ceil(trials / workers))
    return [range(start, min(start + size, trials)) for start in range(0, trials, size)]


def _aggregate(noise_prob: float, outcomes: list[TrialOutcome]) -> SweepPoint:
    trials = len(outcomes)
    return SweepPoint(
        noise_prob=noise_prob,
        trials=trials,
        successes=sum(1 for o in outcomes if o.success),
        mean_iterations=sum(o.iterations for o in outcomes) / trials,
        converged=sum(1 for o in outcomes if o.converged),
        singular=sum(1 for o in outcomes if o.singular),
        overflow=sum(1 for o in outcomes if o.overflow),
    )


def _resolve_grid(noise_grid: Iterable[float] | None) -> list[float]:
    grid = list(DEFAULT_NOISE_GRID if noise_grid is None else noise_grid)
    ok, reason = validate_noise_grid(grid)
    if not ok:
        raise ConfigError(reason, f"noise grid {grid!r}")
    return sorted(float(v) for v in grid)


def run_sweep(
    config: TrialConfig,
    noise_grid: Iterable[float] | None = None,
    workers: int | None = None,
) -> SweepResult:
    """
    Parameters
    ----------
    config     : TrialConfig — noise_prob is ignored; the grid supplies it
    noise_grid : noise probabilities in [0, 1]; default 0.0, 0.1, ..., 1.0
    workers    : process count; None reads QMEM_WORKERS (default 1)

    Returns
    -------
    SweepResult — one point per grid value, ascending noise

    Raises
    ------
    ConfigError — invalid configuration or grid
    """
    grid = _resolve_grid(noise_grid)
    require_valid(config)
    workers = get_settings().workers if workers is None else int(workers)
    if workers < 1:
        raise ConfigError("WORKERS_NOT_POSITIVE", f"workers={workers}")

    log(
        "SWEEP_STARTED",
        layer="experiments",
        model=config.model,
        domain=config.domain.value,
        n=config.n,
        p=config.p,
        trials=config.trials,
        grid=grid,
        seed=config.seed,
        workers=workers,
    )

    points = []
    if workers == 1:
        for grid_index, noise in enumerate(grid):
            outcomes = _run_chunk(config.with_noise(noise), grid_index, range(config.trials))
            points.append(_point_done(config, grid_index, noise, outcomes))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                [
                    pool.submit(_run_chunk, config.with_noise(noise), grid_index, chunk)
                    for chunk in _chunks(config.trials, workers)
                ]
                for grid_index, noise in enumerate(grid)
            ]
            # reduce in (grid index, trial index) order regardless of completion order
            for grid_index, noise in enumerate(grid):
                outcomes = [o for future in futures[grid_index] for o in future.result()]
                points.append(_point_done(config, grid_index, noise, outcomes))

    result = SweepResult(config=config, points=tuple(points))
    log(
        "SWEEP_COMPLETED",
        layer="experiments",
        model=config.model,
        recall=result.recall_probabilities,
        convergence_rate=result.convergence_rate,
    )
    return result


def _point_done(
    config: TrialConfig,
    grid_index: int,
    noise: float,
    outcomes: list[TrialOutcome],
) -> SweepPoint:
    point = _aggregate(noise, outcomes)
    log(
        "SWEEP_POINT_DONE",
        layer="experiments",
        model=config.model,
        sequence_number=grid_index,
        noise_prob=noise,
        successes=point.successes,
        trials=point.trials,
        converged=point.converged,
        singular=point.singular,
        overflow=point.overflow,
    )
    return point


def run_sweeps(
    config: TrialConfig,
    models: Sequence[str],
    noise_grid: Iterable[float] | None = None,
    workers: int | None = None,
) -> list[SweepResult]:
    """One sweep per model name, same seed (paired trials across models)."""
    return [run_sweep(config.with_model(model), noise_grid, workers) for model in models]
