import json
import math
from dataclasses import replace

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from app.core.errors import ConfigError, KernelOverflow, SingularMatrix
from app.experiments import (
    DEFAULT_NOISE_GRID,
    PRESETS,
    SWEEP_COLUMNS,
    Domain,
    SweepPoint,
    SweepResult,
    TrialConfig,
    hebbian_capacity,
    preset,
    random_memories,
    require_valid,
    run_sweep,
    run_sweeps,
    run_trial,
    trial_rng,
    validate_noise_grid,
    validate_trial_config,
)
from app.networks import UpdateMode


SMALL = TrialConfig(domain=Domain.BIPOLAR, n=30, p=4, model="qrpnn-exponential", trials=8, seed=42)


# =========================
# 1. CONFIGURATION
# =========================

def test_trial_config_defaults():
    cfg = TrialConfig(domain=Domain.QUATERNION, n=100, p=36, model="qrcnn-potential")
    assert (cfg.q, cfg.L, cfg.eps_p, cfg.alpha) == (5.0, 3.0, 1e-5, 4.0)
    assert cfg.max_iters == 1000
    assert cfg.tol == 1e-6
    assert cfg.success_tol == 1e-3
    assert cfg.kernel_description == "L=3;eps_p=1e-05"


def test_effective_mode():
    assert SMALL.effective_mode is UpdateMode.SYNCHRONOUS
    assert SMALL.with_model("qhnn-hebbian").effective_mode is UpdateMode.ASYNCHRONOUS
    forced = replace(SMALL, update_mode=UpdateMode.ASYNCHRONOUS)
    assert forced.effective_mode is UpdateMode.ASYNCHRONOUS
    assert forced.as_record()["update_mode"] == "asynchronous"
    assert SMALL.as_record()["domain"] == "bipolar"


def test_valid_config_passes():
    assert validate_trial_config(SMALL) == (True, None)
    assert require_valid(SMALL) is SMALL


@pytest.mark.parametrize(
    "changes, reason",
    [
        ({"noise_prob": -0.2}, "NOISE_OUT_OF_RANGE"),
        ({"noise_prob": 1.01}, "NOISE_OUT_OF_RANGE"),
        ({"trials": 0}, "TRIALS_NOT_POSITIVE"),
        ({"n": 0}, "N_NOT_POSITIVE"),
        ({"p": 0}, "P_NOT_POSITIVE"),
        ({"model": "qrcnn-gaussian"}, "UNKNOWN_MODEL"),
        ({"q": 1.0}, "Q_NOT_ABOVE_ONE"),
        ({"L": 0.5}, "L_BELOW_ONE"),
        ({"eps_p": 0.0}, "EPSILON_P_NOT_POSITIVE"),
        ({"alpha": -4.0}, "ALPHA_NOT_POSITIVE"),
        ({"alpha": 800.0}, "ALPHA_OVERFLOWS"),
        ({"model": "qrcnn-high-order", "q": 1100.0}, "Q_OVERFLOWS"),
        ({"model": "qrpnn-potential", "eps_p": 1e-200}, "POTENTIAL_OVERFLOWS"),
        ({"max_iters": 0}, "MAX_ITERS_NOT_POSITIVE"),
        ({"tol": -1e-6}, "TOL_NEGATIVE"),
        ({"success_tol": -1.0}, "SUCCESS_TOL_NEGATIVE"),
        ({"seed": -1}, "SEED_OUT_OF_RANGE"),
        ({"seed": 2**64}, "SEED_OUT_OF_RANGE"),
        ({"domain": "bipolar"}, "UNKNOWN_DOMAIN"),
    ],
)
def test_invalid_configs_report_reason(changes, reason):
    cfg = replace(SMALL, **changes)
    assert validate_trial_config(cfg) == (False, reason)
    with pytest.raises(ConfigError) as info:
        require_valid(cfg)
    assert info.value.reason == reason


def test_overflow_check_only_applies_to_the_models_kernel():
    assert validate_trial_config(replace(SMALL, model="qhnn-hebbian", alpha=800.0)) == (True, None)
    assert validate_trial_config(replace(SMALL, model="qrpnn-identity", q=1100.0)) == (True, None)
    assert validate_trial_config(replace(SMALL, alpha=700.0)) == (True, None)


def test_noise_grid_validation():
    assert validate_noise_grid(DEFAULT_NOISE_GRID) == (True, None)
    assert validate_noise_grid([]) == (False, "NOISE_GRID_EMPTY")
    assert validate_noise_grid([0.1, 1.2]) == (False, "NOISE_OUT_OF_RANGE")
    assert validate_noise_grid([0.1, 0.1]) == (False, "NOISE_GRID_DUPLICATES")


def test_default_noise_grid():
    assert DEFAULT_NOISE_GRID == (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0)


def test_presets():
    example1, example2 = preset("example1"), preset("example2")
    assert (example1.domain, example1.n, example1.p) == (Domain.BIPOLAR, 100, 36)
    assert (example1.q, example1.L, example1.alpha) == (5.0, 3.0, 4.0)
    assert (example2.domain, example2.n, example2.p) == (Domain.QUATERNION, 100, 36)
    assert (example2.q, example2.L, example2.alpha) == (20.0, 3.0, 14.0)
    for cfg in PRESETS.values():
        assert (cfg.trials, cfg.max_iters) == (100, 1000)
        assert validate_trial_config(cfg) == (True, None)
    assert preset("example2", seed=9).seed == 9
    with pytest.raises(KeyError):
        preset("example3")


def test_hebbian_capacity():
    assert hebbian_capacity(100) == pytest.approx(100 / (2 * math.log(100)))
    assert 10.8 < hebbian_capacity(100) < 10.9
    with pytest.raises(ValueError):
        hebbian_capacity(1)


# =========================
# 2. SINGLE TRIALS
# =========================

def test_noiseless_projection_trial_succeeds():
    outcome = run_trial(SMALL, trial_rng(1, 0, 0))
    assert outcome.success
    assert outcome.converged
    assert outcome.iterations == 1
    assert outcome.final_distance == 0.0
    assert not outcome.singular


def test_trial_is_reproducible():
    cfg = replace(SMALL, domain=Domain.QUATERNION, noise_prob=0.3)
    assert run_trial(cfg, trial_rng(3, 1, 2)) == run_trial(cfg, trial_rng(3, 1, 2))


def test_models_see_the_same_memories_and_noisy_inputs(monkeypatch):
    from app.experiments import trials

    seen = []
    original = trials.build_model

    def recording(spec, memories, params):
        seen.append(memories.memories.copy())
        return original(spec, memories, params)

    monkeypatch.setattr(trials, "build_model", recording)
    cfg = replace(SMALL, noise_prob=0.2)
    run_trial(cfg, trial_rng(5, 0, 0))
    run_trial(cfg.with_model("qhnn-hebbian"), trial_rng(5, 0, 0))
    assert_array_equal(seen[0], seen[1])


def test_fresh_memories_per_trial():
    cfg = replace(SMALL, domain=Domain.QUATERNION)
    firsts = [random_memories(cfg.domain, cfg.n, cfg.p, trial_rng(cfg.seed, 0, t))[0][0] for t in range(100)]
    differing = sum(not np.array_equal(a, b) for a, b in zip(firsts, firsts[1:] + firsts[:1]))
    assert differing >= 95


def test_singular_training_is_a_flagged_failure(monkeypatch, capsys):
    from app.experiments import trials

    def singular(*args, **kwargs):
        raise SingularMatrix(column=3, pivot=0.0, threshold=1e-12)

    monkeypatch.setattr(trials, "build_model", singular)
    outcome = run_trial(SMALL, trial_rng(0, 0, 0))
    assert outcome.singular
    assert not outcome.success
    assert outcome.iterations == 0
    assert "TRAINING_SINGULAR" in capsys.readouterr().err


def test_kernel_overflow_is_a_flagged_failure(capsys):
    # bypasses validation, as a library caller might
    outcome = run_trial(replace(SMALL, alpha=800.0), trial_rng(0, 0, 0))
    assert outcome.overflow
    assert not outcome.singular
    assert not outcome.success
    assert outcome.iterations == 0
    assert outcome.final_distance == math.inf
    events = [json.loads(line) for line in capsys.readouterr().err.splitlines() if line.strip()]
    overflow = [e for e in events if e["event"] == "TRAINING_OVERFLOW"]
    assert len(overflow) == 1
    assert overflow[0]["model"] == "qrpnn-exponential"


def test_overflow_counts_reach_the_sweep_point(monkeypatch):
    from app.experiments import trials

    def overflowing(*args, **kwargs):
        raise KernelOverflow(math.inf)

    monkeypatch.setattr(trials, "build_model", overflowing)
    result = run_sweep(SMALL, noise_grid=[0.0], workers=1)
    point = result.points[0]
    assert (point.overflow, point.singular, point.successes) == (8, 0, 0)
    assert result.to_frame(extended=True)["overflow"].tolist() == [8]


def test_sweep_rejects_overflowing_kernel():
    with pytest.raises(ConfigError) as info:
        run_sweep(replace(SMALL, alpha=800.0), noise_grid=[0.0])
    assert info.value.reason == "ALPHA_OVERFLOWS"


def test_non_convergence_is_logged(capsys):
    cfg = replace(SMALL, domain=Domain.QUATERNION, model="qrcnn-identity", noise_prob=0.5, max_iters=1)
    outcome = run_trial(cfg, trial_rng(0, 0, 0))
    assert not outcome.converged
    assert outcome.iterations == 1
    events = [json.loads(line)["event"] for line in capsys.readouterr().err.splitlines() if line.strip()]
    assert "RUN_NOT_CONVERGED" in events


# =========================
# 3. SWEEPS
# =========================

def test_sweep_points_are_sorted_and_bounded():
    result = run_sweep(SMALL, noise_grid=[0.4, 0.0, 0.2])
    assert result.noise_grid == [0.0, 0.2, 0.4]
    for point in result.points:
        assert point.trials == 8
        assert 0.0 <= point.recall_probability <= 1.0
        assert point.recall_probability == point.successes / point.trials
    assert result.points[0].recall_probability == 1.0


def test_sweep_is_deterministic():
    a = run_sweep(SMALL, noise_grid=[0.0, 0.3])
    b = run_sweep(SMALL, noise_grid=[0.0, 0.3])
    assert a == b
    assert a.to_frame().equals(b.to_frame())


def test_parallel_sweep_matches_serial_sweep():
    cfg = replace(SMALL, domain=Domain.QUATERNION, trials=7)
    serial = run_sweep(cfg, noise_grid=[0.0, 0.3, 0.6], workers=1)
    parallel = run_sweep(cfg, noise_grid=[0.0, 0.3, 0.6], workers=3)
    assert serial == parallel


def test_sweep_rejects_bad_input():
    with pytest.raises(ConfigError) as info:
        run_sweep(SMALL, noise_grid=[0.0, 1.5])
    assert info.value.reason == "NOISE_OUT_OF_RANGE"
    with pytest.raises(ConfigError) as info:
        run_sweep(replace(SMALL, trials=0), noise_grid=[0.0])
    assert info.value.reason == "TRIALS_NOT_POSITIVE"


def test_sweeps_over_several_models():
    results = run_sweeps(SMALL, ["qrcnn-high-order", "qrpnn-high-order"], noise_grid=[0.0])
    assert [r.config.model for r in results] == ["qrcnn-high-order", "qrpnn-high-order"]


def test_sweep_frame():
    cfg = replace(SMALL, model="qrcnn-potential")
    result = SweepResult(
        config=cfg,
        points=(
            SweepPoint(noise_prob=0.5, trials=4, successes=1, mean_iterations=3.0, converged=4, singular=0),
            SweepPoint(noise_prob=0.0, trials=4, successes=4, mean_iterations=1.0, converged=4, singular=0),
        ),
    )
    frame = result.to_frame()
    assert list(frame.columns) == SWEEP_COLUMNS
    assert frame["noise_prob"].tolist() == [0.0, 0.5]
    assert frame["recall_prob"].tolist() == [1.0, 0.25]
    assert frame["kernel_params"].tolist() == ["L=3;eps_p=1e-05"] * 2
    assert list(result.to_frame(extended=True).columns) == SWEEP_COLUMNS + ["converged", "singular", "overflow"]
    assert result.convergence_rate == 1.0
