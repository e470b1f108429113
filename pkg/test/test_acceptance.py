"""
End-to-end recall experiments on the two presets.

Full sweeps take minutes; run with `pytest -m slow` or deselect with
`-m "not slow"`.
"""

from dataclasses import replace

import numpy as np
import pytest
from numpy.testing import assert_allclose

from app.experiments import Domain, preset, random_quaternion_memories, run_sweep, run_sweeps
from app.networks import NetworkState, UpdateMode, build_model, step
from app.networks.factory import ModelSpec


pytestmark = pytest.mark.slow

PROJECTION_MODELS = [
    "qhnn-projection",
    "qrpnn-identity",
    "qrpnn-high-order",
    "qrpnn-potential",
    "qrpnn-exponential",
]

DOMINANCE_PAIRS = [
    ("qrcnn-high-order", "qrpnn-high-order"),
    ("qrcnn-exponential", "qrpnn-exponential"),
]

SLACK = 0.05


# =========================
# 1. FIXED POINTS
# =========================

@pytest.mark.parametrize("model", PROJECTION_MODELS)
def test_projection_models_hold_every_memory(model):
    cfg = preset("example2", model=model)
    spec = ModelSpec.parse(model)
    rng = np.random.default_rng(2024)
    for _ in range(20):
        memories = random_quaternion_memories(cfg.n, cfg.p, rng)
        trained = build_model(spec, memories, cfg.kernel_params)
        for xi in range(memories.p):
            for mode in UpdateMode:
                after = step(trained, NetworkState(memories[xi]), mode)
                assert_allclose(after.x, memories[xi], rtol=0, atol=1e-6)


# =========================
# 2. ZERO-NOISE RECALL
# =========================

@pytest.mark.parametrize("name", ["example1", "example2"])
@pytest.mark.parametrize("model", PROJECTION_MODELS)
def test_projection_models_always_recall_clean_inputs(name, model):
    result = run_sweep(preset(name, model=model, seed=7), noise_grid=[0.0])
    point = result.points[0]
    assert point.trials == 100
    assert point.recall_probability == 1.0
    assert point.converged >= 99


def test_identity_correlation_network_fails_at_capacity():
    result = run_sweep(preset("example1", model="qrcnn-identity", seed=7), noise_grid=[0.0])
    assert result.points[0].recall_probability < 0.5


# =========================
# 3. PROJECTION VS CORRELATION
# =========================

@pytest.fixture(scope="module")
def dominance_sweeps():
    sweeps = {}
    for name in ("example1", "example2"):
        models = [model for pair in DOMINANCE_PAIRS for model in pair]
        for result in run_sweeps(preset(name, seed=11), models):
            sweeps[(name, result.config.model)] = result
    return sweeps


@pytest.mark.parametrize("name", ["example1", "example2"])
@pytest.mark.parametrize("correlation, projection", DOMINANCE_PAIRS)
def test_projection_recall_dominates(dominance_sweeps, name, correlation, projection):
    worse = dominance_sweeps[(name, correlation)]
    better = dominance_sweeps[(name, projection)]
    assert worse.noise_grid == better.noise_grid
    assert len(better.points) == 11
    for a, b in zip(worse.points, better.points):
        assert b.recall_probability >= a.recall_probability - SLACK, a.noise_prob


@pytest.mark.parametrize("name", ["example1", "example2"])
def test_sweeps_converge(dominance_sweeps, name):
    for model in (model for pair in DOMINANCE_PAIRS for model in pair):
        assert dominance_sweeps[(name, model)].convergence_rate >= 0.99
        assert dominance_sweeps[(name, model)].points[0].converged >= 99


def test_recall_falls_with_noise(dominance_sweeps):
    recall = [p.recall_probability for p in dominance_sweeps[("example1", "qrpnn-exponential")].points]
    assert recall[0] == 1.0
    for earlier, later in zip(recall, recall[1:]):
        assert later <= earlier + 0.1
    assert recall[-1] < recall[0]


# =========================
# 4. HEBBIAN CAPACITY
# =========================

@pytest.mark.parametrize("p, check", [(5, lambda r: r >= 0.9), (36, lambda r: r <= 0.5)])
def test_hebbian_capacity(p, check):
    cfg = preset("example1", model="qhnn-hebbian", p=p, seed=3)
    assert cfg.domain is Domain.BIPOLAR
    result = run_sweep(cfg, noise_grid=[0.0])
    assert check(result.points[0].recall_probability)


# =========================
# 5. DETERMINISM
# =========================

def test_sweep_csv_is_byte_identical(tmp_path):
    from app.cli import emit_csv

    cfg = replace(preset("example2", model="qrpnn-high-order", seed=5), trials=20)
    paths = [tmp_path / "serial.csv", tmp_path / "again.csv", tmp_path / "parallel.csv"]
    emit_csv([run_sweep(cfg, workers=1)], paths[0])
    emit_csv([run_sweep(cfg, workers=1)], paths[1])
    emit_csv([run_sweep(cfg, workers=4)], paths[2])
    assert paths[0].read_bytes() == paths[1].read_bytes() == paths[2].read_bytes()
